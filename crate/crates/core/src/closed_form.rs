//! Construction of closed-form triples `(F, G, H)` with
//!
//! ```text
//! 2 * sum_{k=1}^{n} P(k) s_{k-1} = F(n) s_{n+1} + G(n) s_n + H(n)
//! ```
//!
//! For a monomial weight `x^d` the coefficients of `F` solve an upper
//! triangular system whose diagonal is `a + b - 1`; `G` and `H` follow from
//! `F`. Arbitrary weights are linear combinations of the monomial triples.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, Poly, Rational};
use crate::sequence::SeqParams;

/// Square upper triangular matrix over the rationals.
///
/// Indexing through [`UpperTriangular::entry`] is 1-based to line up with
/// the entry formulas; [`UpperTriangular::rows`] exposes the 0-based storage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperTriangular {
    dim: usize,
    entries: Vec<Vec<Rational>>,
}

impl UpperTriangular {
    /// Fills entry `(i, j)`, `1 <= i <= j <= dim`, from `f(i, j)`.
    fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let entries = (1..=dim)
            .map(|i| {
                (1..=dim)
                    .map(|j| if i > j { Rational::zero() } else { f(i, j) })
                    .collect()
            })
            .collect();
        UpperTriangular { dim, entries }
    }

    /// Accepts 0-based rows; `None` unless square and zero below the diagonal.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let dim = rows.len();
        let ok = rows.iter().enumerate().all(|(i, row)| {
            row.len() == dim && row.iter().take(i).all(Rational::is_zero)
        });
        (dim > 0 && ok).then_some(UpperTriangular { dim, entries: rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 1-based entry access.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Product of the diagonal.
    pub fn determinant(&self) -> Rational {
        (0..self.dim).map(|i| self.entries[i][i].clone()).product()
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(x).map(|(m, v)| m * v).sum())
            .collect()
    }
}

fn pow2(e: usize) -> BigInt {
    BigInt::from(1) << e
}

/// `B_d` for the recurrence `s(n+1) = a s(n) + b s(n-1)`:
/// diagonal `a + b - 1`, entry `(i, j)` above it `(2^{j-i} b + a) C(j-1, i-1)`.
pub fn build_matrix_general(d: usize, a: i64, b: i64) -> UpperTriangular {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    let diag = Rational::from(&a + &b - 1);
    UpperTriangular::from_fn(d + 1, |i, j| {
        if i == j {
            diag.clone()
        } else {
            let c = binomial((j - 1) as u64, (i - 1) as u64);
            Rational::from((pow2(j - i) * &b + &a) * c)
        }
    })
}

/// `A_d` for the Pell numbers: diagonal 2, entry `(i, j)` above it
/// `(2^{j-i} + 2) C(j-1, i-1)`.
pub fn build_matrix_pell(d: usize) -> UpperTriangular {
    UpperTriangular::from_fn(d + 1, |i, j| {
        if i == j {
            Rational::from(2)
        } else {
            let c = binomial((j - 1) as u64, (i - 1) as u64);
            Rational::from((pow2(j - i) + 2) * c)
        }
    })
}

/// Right-hand side `2 (C(d,0) 2^d, C(d,1) 2^{d-1}, ..., C(d,d) 2^0)`.
pub fn rhs_vector(d: usize) -> Vec<Rational> {
    (0..=d)
        .map(|k| Rational::from(binomial(d as u64, k as u64) * pow2(d - k) * 2))
        .collect()
}

/// Solution `(b_0(d), ..., b_d(d))` of the triangular system for degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTuple {
    pub d: usize,
    pub values: Vec<Rational>,
}

/// Back substitution from the last row upward.
pub fn solve_coefficients(m: &UpperTriangular, rhs: &[Rational]) -> Result<CoefficientTuple> {
    let n = m.dim();
    if rhs.len() != n {
        return Err(Error::DimensionMismatch { dim: n, rhs: rhs.len() });
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let pivot = &m.rows()[i][i];
        if pivot.is_zero() {
            return Err(Error::SingularMatrix { row: i + 1 });
        }
        let tail: Rational = ((i + 1)..n).map(|j| &m.rows()[i][j] * &x[j]).sum();
        x[i] = (&rhs[i] - tail) / pivot.clone();
    }
    Ok(CoefficientTuple { d: n - 1, values: x })
}

/// Polynomials `(F, G, H)` realizing the identity for `weight` at `params`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormTriple {
    pub params: SeqParams,
    pub weight: Poly,
    #[serde(rename = "F")]
    pub f: Poly,
    #[serde(rename = "G")]
    pub g: Poly,
    #[serde(rename = "H")]
    pub h: Poly,
}

impl ClosedFormTriple {
    pub fn zero(params: SeqParams) -> Self {
        ClosedFormTriple {
            params,
            weight: Poly::zero(),
            f: Poly::zero(),
            g: Poly::zero(),
            h: Poly::zero(),
        }
    }

    /// Componentwise `self + s * other`, weights included. Parameters are
    /// taken from `self`.
    pub fn add_scaled(&self, s: &Rational, other: &ClosedFormTriple) -> ClosedFormTriple {
        ClosedFormTriple {
            params: self.params.clone(),
            weight: &self.weight + &other.weight.scale(s),
            f: &self.f + &other.f.scale(s),
            g: &self.g + &other.g.scale(s),
            h: &self.h + &other.h.scale(s),
        }
    }

    /// Whether the three polynomials agree, ignoring params and weight.
    pub fn same_polys(&self, other: &ClosedFormTriple) -> bool {
        self.f == other.f && self.g == other.g && self.h == other.h
    }
}

/// Coefficient tuple for weight `x^d`.
pub fn monomial_coefficients(d: usize, params: &SeqParams) -> CoefficientTuple {
    let m = build_matrix_general(d, params.a(), params.b());
    solve_coefficients(&m, &rhs_vector(d)).expect("diagonal a + b - 1 is at least 1")
}

/// The triple for weight `x^d`.
///
/// `F = sum b_i x^i`, `G(x) = -2 (x+1)^d + b F(x+1)`, and `H` is the
/// constant fixed by the `n = 1` case. Coefficients grow quickly with `d`;
/// degrees up to 64 are supported.
pub fn monomial_triple(d: usize, params: &SeqParams) -> ClosedFormTriple {
    let coeffs = monomial_coefficients(d, params);
    let one = Rational::one();
    let a = Rational::from(params.a());
    let b = Rational::from(params.b());
    let c0 = Rational::from(params.c0());
    let c1 = Rational::from(params.c1());

    let f = Poly::from_coeffs(coeffs.values.clone());
    let x_plus_one_d = Poly::monomial(one.clone(), d).shift(&one);
    let g = &f.shift(&one).scale(&b) - &x_plus_one_d.scale(&Rational::from(2));

    let sum_b: Rational = coeffs.values.iter().sum();
    let sum_2i_b: Rational = coeffs
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| v * &Rational::from(pow2(i)))
        .sum();
    let h = &c0 * &Rational::from(2) + &c1 * &Rational::from(pow2(d + 1))
        - (&a * &c1 + &b * &c0) * sum_b
        - &b * &c1 * sum_2i_b;

    ClosedFormTriple {
        params: params.clone(),
        weight: Poly::monomial(one, d),
        f,
        g,
        h: Poly::constant(h),
    }
}

/// The triple for an arbitrary weight, as the combination of monomial
/// triples weighted by the coefficients of `weight`. The zero weight gives
/// the zero triple.
pub fn general_triple(weight: &Poly, params: &SeqParams) -> ClosedFormTriple {
    let mut acc = ClosedFormTriple::zero(params.clone());
    for (d, c) in weight.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add_scaled(c, &monomial_triple(d, params));
        }
    }
    acc
}

/// One member of the infinite family available for degenerate sequences:
/// `(free, -r free + r F* + G*, H*)` where `(F*, G*, H*)` is the canonical
/// triple and `r` the geometric ratio of the sequence.
pub fn family_sample(weight: &Poly, params: &SeqParams, free: &Poly) -> Result<ClosedFormTriple> {
    let class = params.classify();
    let r = class.ratio_root.ok_or(Error::NonDegenerate)?;
    let canon = general_triple(weight, params);
    let g = &(&canon.f - free).scale(&r) + &canon.g;
    Ok(ClosedFormTriple {
        f: free.clone(),
        g,
        ..canon
    })
}
