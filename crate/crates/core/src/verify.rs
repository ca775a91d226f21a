//! Independent checks of closed-form triples.
//!
//! [`verify_triple`] compares a triple against the weighted partial sum
//! computed term by term. [`reconstruct_triple`] ignores the construction
//! entirely and solves for `(F, G, H)` from sampled sums, which exposes
//! whether the triple is unique (full column rank) or not.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::closed_form::ClosedFormTriple;
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational};
use crate::sequence::SeqParams;

/// Range checked before any identity is emitted.
pub const GATE_N_MAX: usize = 100;

/// Default range for explicit verification requests.
pub const VERIFY_N_MAX: usize = 300;

/// `2 * sum_{k=1}^{n} P(k) s_{k-1}`, exactly.
pub fn brute_force_sum(weight: &Poly, params: &SeqParams, n: usize) -> Rational {
    let terms = params.terms(n.saturating_sub(1));
    let sum: Rational = (1..=n)
        .map(|k| weight.eval(&Rational::from(k)) * Rational::from(terms[k - 1].clone()))
        .sum();
    sum * Rational::from(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(rename = "n_max")]
    pub checked_n_max: usize,
    pub ok: bool,
    pub first_failure: Option<Failure>,
}

/// Integer coefficients of `p * scale`; `scale` must clear every denominator.
fn scaled_ints(p: &Poly, scale: &BigInt) -> Vec<BigInt> {
    p.coeffs().iter().map(|c| c.numer() * (scale / c.denom())).collect()
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Checks the identity for `n = 1..=n_max`, stopping at the first mismatch.
pub fn verify_triple(t: &ClosedFormTriple, n_max: usize) -> VerificationReport {
    // both sides times the lcm of all denominators, so the loop is integer-only
    let scale = [&t.weight, &t.f, &t.g, &t.h]
        .iter()
        .flat_map(|p| p.coeffs())
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let [w, f, g, h] = [&t.weight, &t.f, &t.g, &t.h].map(|p| scaled_ints(p, &scale));

    let terms = t.params.terms(n_max + 1);
    let mut lhs = BigInt::zero();
    for n in 1..=n_max {
        let x = BigInt::from(n);
        lhs += eval_int(&w, &x) * &terms[n - 1] * 2;
        let rhs = eval_int(&f, &x) * &terms[n + 1] + eval_int(&g, &x) * &terms[n] + eval_int(&h, &x);
        if lhs != rhs {
            let unscale = |v: BigInt| Rational::new(v, scale.clone());
            return VerificationReport {
                checked_n_max: n_max,
                ok: false,
                first_failure: Some(Failure {
                    n,
                    lhs: unscale(lhs),
                    rhs: unscale(rhs),
                }),
            };
        }
    }
    VerificationReport {
        checked_n_max: n_max,
        ok: true,
        first_failure: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReconstructionStatus {
    UniqueSolution,
    RankDeficient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionResult {
    pub status: ReconstructionStatus,
    pub triple: Option<ClosedFormTriple>,
    /// Rank of the sampled system; equals the unknown count iff unique.
    pub rank: usize,
    pub unknowns: usize,
}

/// Solves for `(F, G, H)` of degree at most `deg_bound` from the sums at
/// `n = 1..=3 deg_bound + 6`, by exact elimination.
pub fn reconstruct_triple(
    weight: &Poly,
    params: &SeqParams,
    deg_bound: usize,
) -> Result<ReconstructionResult> {
    if let Some(d) = weight.degree() {
        if d > deg_bound {
            return Err(Error::DegreeBound { bound: deg_bound, degree: d });
        }
    }
    let width = deg_bound + 1;
    let unknowns = 3 * width;
    let samples = 3 * deg_bound + 6;
    let terms = params.terms(samples + 1);

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(samples);
    let mut lhs = Rational::zero();
    for n in 1..=samples {
        let x = Rational::from(n);
        lhs += Rational::from(2) * weight.eval(&x) * Rational::from(terms[n - 1].clone());
        let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * &x))
            .take(width)
            .collect();
        let mut row = Vec::with_capacity(unknowns + 1);
        for s in [&terms[n + 1], &terms[n]] {
            let s = Rational::from(BigInt::clone(s));
            row.extend(powers.iter().map(|p| p * &s));
        }
        row.extend(powers.iter().cloned());
        row.push(lhs.clone());
        rows.push(row);
    }

    let (rank, pivots) = row_reduce(&mut rows, unknowns);
    if rows[rank..].iter().any(|r| !r[unknowns].is_zero()) {
        return Err(Error::InconsistentSystem);
    }
    if rank < unknowns {
        return Ok(ReconstructionResult {
            status: ReconstructionStatus::RankDeficient,
            triple: None,
            rank,
            unknowns,
        });
    }

    let mut solution = vec![Rational::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        solution[c] = rows[r][unknowns].clone();
    }
    let poly = |k: usize| Poly::from_coeffs(solution[k * width..(k + 1) * width].to_vec());
    Ok(ReconstructionResult {
        status: ReconstructionStatus::UniqueSolution,
        triple: Some(ClosedFormTriple {
            params: params.clone(),
            weight: weight.clone(),
            f: poly(0),
            g: poly(1),
            h: poly(2),
        }),
        rank,
        unknowns,
    })
}

/// Reduced row echelon form over the first `cols` columns, in place.
/// Returns the rank and the pivot column of each pivot row.
fn row_reduce(rows: &mut [Vec<Rational>], cols: usize) -> (usize, Vec<usize>) {
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip().expect("pivot is nonzero");
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    (rank, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{family_sample, general_triple, monomial_triple};

    #[test]
    fn brute_force_examples() {
        let pell = SeqParams::pell();
        let x = Poly::x();
        assert_eq!(brute_force_sum(&x, &pell, 3), Rational::from(16));
        // n P_{n+1} - (n+1) P_n at n = 3
        let t = pell.terms(4);
        assert_eq!(Rational::from(BigInt::from(3) * &t[4] - BigInt::from(4) * &t[3]), Rational::from(16));

        for params in [pell.clone(), SeqParams::lucas(), SeqParams::new(5, 3, -2, 7).unwrap()] {
            assert_eq!(
                brute_force_sum(&Poly::one(), &params, 1),
                Rational::from(2 * params.c0())
            );
        }

        // both sides of the d = 2 Pell identity at n = 4
        let lhs = brute_force_sum(&Poly::from_ints(&[0, 0, 1]), &pell, 4);
        let rhs = Rational::from(17 * 29 - 24 * 12 - 1);
        assert_eq!(lhs, Rational::from(204));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn verify_examples() {
        let pell = SeqParams::pell();
        for d in 0..=6 {
            assert!(verify_triple(&monomial_triple(d, &pell), 200).ok, "d = {d}");
        }

        let mut bad = monomial_triple(3, &pell);
        bad.h = &bad.h + &Poly::one();
        let rep = verify_triple(&bad, 200);
        assert!(!rep.ok);
        assert_eq!(rep.first_failure.as_ref().unwrap().n, 1);

        let geo = SeqParams::new(1, 2, 1, 2).unwrap();
        let t = family_sample(&Poly::one(), &geo, &Poly::x()).unwrap();
        assert!(verify_triple(&t, 200).ok);
    }

    #[test]
    fn report_json() {
        let rep = verify_triple(&monomial_triple(1, &SeqParams::pell()), 5);
        assert_eq!(
            serde_json::to_string(&rep).unwrap(),
            r#"{"n_max":5,"ok":true,"first_failure":null}"#
        );
        let mut bad = monomial_triple(1, &SeqParams::pell());
        bad.h = Poly::one();
        let js = serde_json::to_value(verify_triple(&bad, 5)).unwrap();
        assert_eq!(js["first_failure"]["n"], 1);
        assert_eq!(js["first_failure"]["lhs"], "0");
        assert_eq!(js["first_failure"]["rhs"], "1");
    }

    #[test]
    fn reconstruct_examples() {
        let pell = SeqParams::pell();
        let r = reconstruct_triple(&Poly::x(), &pell, 1).unwrap();
        assert_eq!(r.status, ReconstructionStatus::UniqueSolution);
        let t = r.triple.unwrap();
        assert_eq!(t.f, Poly::x());
        assert_eq!(t.g, Poly::from_ints(&[-1, -1]));
        assert_eq!(t.h, Poly::zero());

        let geo = SeqParams::new(1, 2, 1, 2).unwrap();
        let r = reconstruct_triple(&Poly::one(), &geo, 1).unwrap();
        assert_eq!(r.status, ReconstructionStatus::RankDeficient);
        assert!(r.triple.is_none());
        assert!(r.rank < r.unknowns);

        let p = Poly::from_ints(&[0, 1, 1]);
        let r = reconstruct_triple(&p, &pell, 2).unwrap();
        assert_eq!(r.triple.unwrap(), general_triple(&p, &pell));
    }

    #[test]
    fn reconstruct_rejects_low_bound() {
        assert_eq!(
            reconstruct_triple(&Poly::from_ints(&[0, 0, 1]), &SeqParams::pell(), 1),
            Err(Error::DegreeBound { bound: 1, degree: 2 })
        );
    }

    #[test]
    fn reconstruct_with_slack_bound_matches() {
        // extra degree room must still pin down the same triple
        let lucas = SeqParams::lucas();
        let p = Poly::from_ints(&[3, -1]);
        let r = reconstruct_triple(&p, &lucas, 3).unwrap();
        assert_eq!(r.triple.unwrap(), general_triple(&p, &lucas));
    }
}
