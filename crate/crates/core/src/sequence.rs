//! Generalized Fibonacci sequences `s0 = c0, s1 = c1, s(n+1) = a s(n) + b s(n-1)`.
//!
//! Terms are produced exactly. The Binet-type closed form is only evaluated
//! in floating point as a diagnostic; everything that decides the shape of
//! a closed-form triple (degeneracy, zero terms) is integer arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Parameters `(a, b, c0, c1)` with `a, b >= 1` and `(c0, c1) != (0, 0)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct SeqParams {
    a: i64,
    b: i64,
    c0: i64,
    c1: i64,
    disc: BigInt,
    disc_sqrt: Option<BigInt>,
}

#[derive(Clone, Copy, Serialize, Deserialize)]
struct RawParams {
    a: i64,
    b: i64,
    c0: i64,
    c1: i64,
}

impl TryFrom<RawParams> for SeqParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        SeqParams::new(r.a, r.b, r.c0, r.c1)
    }
}

impl From<SeqParams> for RawParams {
    fn from(p: SeqParams) -> Self {
        RawParams {
            a: p.a,
            b: p.b,
            c0: p.c0,
            c1: p.c1,
        }
    }
}

/// The four classical sequences with their conventional letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fibonacci,
    Lucas,
    Pell,
    Jacobsthal,
}

impl Preset {
    pub const ALL: [Preset; 4] = [
        Preset::Fibonacci,
        Preset::Lucas,
        Preset::Pell,
        Preset::Jacobsthal,
    ];

    pub fn tuple(self) -> (i64, i64, i64, i64) {
        match self {
            Preset::Fibonacci => (1, 1, 0, 1),
            Preset::Lucas => (1, 1, 2, 1),
            Preset::Pell => (2, 1, 0, 1),
            Preset::Jacobsthal => (1, 2, 1, 0),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Preset::Fibonacci => "F",
            Preset::Lucas => "L",
            Preset::Pell => "P",
            Preset::Jacobsthal => "J",
        }
    }

    pub fn params(self) -> SeqParams {
        let (a, b, c0, c1) = self.tuple();
        SeqParams::new(a, b, c0, c1).expect("preset tuples are valid")
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fibonacci" => Ok(Preset::Fibonacci),
            "lucas" => Ok(Preset::Lucas),
            "pell" => Ok(Preset::Pell),
            "jacobsthal" => Ok(Preset::Jacobsthal),
            other => Err(Error::InvalidParams(format!("unknown preset {other:?}"))),
        }
    }
}

/// Exact integer square root, if `n` is a perfect square.
fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == num_bigint::Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl SeqParams {
    pub fn new(a: i64, b: i64, c0: i64, c1: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidParams(format!("a must be a positive integer, got {a}")));
        }
        if b < 1 {
            return Err(Error::InvalidParams(format!("b must be a positive integer, got {b}")));
        }
        if c0 == 0 && c1 == 0 {
            return Err(Error::InvalidParams("(c0, c1) must not both be zero".into()));
        }
        let disc = BigInt::from(a) * a + BigInt::from(b) * 4;
        let disc_sqrt = exact_sqrt(&disc);
        Ok(SeqParams {
            a,
            b,
            c0,
            c1,
            disc,
            disc_sqrt,
        })
    }

    pub fn pell() -> Self {
        Preset::Pell.params()
    }

    pub fn fibonacci() -> Self {
        Preset::Fibonacci.params()
    }

    pub fn lucas() -> Self {
        Preset::Lucas.params()
    }

    pub fn jacobsthal() -> Self {
        Preset::Jacobsthal.params()
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c0(&self) -> i64 {
        self.c0
    }

    pub fn c1(&self) -> i64 {
        self.c1
    }

    /// `a^2 + 4b`
    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    /// `sqrt(a^2 + 4b)` when it is an integer.
    pub fn disc_sqrt(&self) -> Option<&BigInt> {
        self.disc_sqrt.as_ref()
    }

    /// Which named sequence these parameters are, if any.
    pub fn preset(&self) -> Option<Preset> {
        let t = (self.a, self.b, self.c0, self.c1);
        Preset::ALL.into_iter().find(|p| p.tuple() == t)
    }

    /// `s_0 ..= s_{n_max}`.
    pub fn terms(&self, n_max: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(BigInt::from(self.c0));
        if n_max >= 1 {
            out.push(BigInt::from(self.c1));
        }
        let (a, b) = (BigInt::from(self.a), BigInt::from(self.b));
        for n in 2..=n_max {
            let next = &a * &out[n - 1] + &b * &out[n - 2];
            out.push(next);
        }
        out
    }

    /// `s_n` alone.
    pub fn term(&self, n: usize) -> BigInt {
        self.terms(n).pop().expect("terms is never empty")
    }

    /// Characteristic roots `(j1/2, j2/2)` of `x^2 - a x - b` as doubles.
    pub fn roots_f64(&self) -> (f64, f64) {
        let a = self.a as f64;
        let j1 = a + (a * a + 4.0 * self.b as f64).sqrt();
        // j1 * j2 = -4b; avoids cancellation in a - sqrt(...)
        let j2 = -4.0 * self.b as f64 / j1;
        (j1 / 2.0, j2 / 2.0)
    }

    /// Binet-type evaluation of `s_n` in floating point.
    ///
    /// Diagnostic only. Overflows to infinity once `(j1/2)^n` leaves the
    /// double range.
    pub fn binet_float(&self, n: u64) -> f64 {
        let (r1, r2) = self.roots_f64();
        let sqrt_disc = r1 - r2;
        let (c0, c1) = (self.c0 as f64, self.c1 as f64);
        let alpha = 2.0 * c1 - 2.0 * r2 * c0;
        let beta = 2.0 * c1 - 2.0 * r1 * c0;
        let pow = |x: f64| match i32::try_from(n) {
            Ok(k) => x.powi(k),
            Err(_) => x.powf(n as f64),
        };
        (alpha * pow(r1) - beta * pow(r2)) / (2.0 * sqrt_disc)
    }

    /// Exact test for `2c1 - j1 c0 = 0` or `2c1 - j2 c0 = 0`.
    pub fn classify(&self) -> DegeneracyClass {
        let Some(t) = &self.disc_sqrt else {
            return DegeneracyClass::non_degenerate();
        };
        let a = BigInt::from(self.a);
        let c0 = BigInt::from(self.c0);
        let two_c1 = BigInt::from(self.c1) * 2;
        let j1 = &a + t;
        let j2 = &a - t;
        // c0 = 0 would force c1 = 0, excluded at construction
        if c0.is_zero() {
            return DegeneracyClass::non_degenerate();
        }
        if two_c1 == &j1 * &c0 {
            DegeneracyClass {
                kind: DegeneracyKind::DegenerateJ1,
                ratio_root: Some(Rational::new(j1, 2)),
            }
        } else if two_c1 == &j2 * &c0 {
            DegeneracyClass {
                kind: DegeneracyKind::DegenerateJ2,
                ratio_root: Some(Rational::new(j2, 2)),
            }
        } else {
            DegeneracyClass::non_degenerate()
        }
    }

    /// Indices `n <= n_max` with `s_n = 0`, by exact scan.
    pub fn find_zero_terms(&self, n_max: usize) -> Vec<usize> {
        self.terms(n_max)
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_zero())
            .map(|(n, _)| n)
            .collect()
    }

    /// `s_{n+1} / s_n` computed exactly and rounded to a double.
    pub fn ratio_probe(&self, n: usize) -> Result<f64> {
        let t = self.terms(n + 1);
        if t[n].is_zero() {
            return Err(Error::ZeroTerm { n: n as u64 });
        }
        Ok(Rational::new(t[n + 1].clone(), t[n].clone()).to_f64())
    }
}

impl fmt::Debug for SeqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeqParams({}, {}, {}, {})", self.a, self.b, self.c0, self.c1)
    }
}

impl fmt::Display for SeqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a, b, c0, c1) = ({}, {}, {}, {})", self.a, self.b, self.c0, self.c1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegeneracyKind {
    NonDegenerate,
    /// `2c1 - j1 c0 = 0`
    DegenerateJ1,
    /// `2c1 - j2 c0 = 0`
    DegenerateJ2,
}

impl DegeneracyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DegeneracyKind::NonDegenerate => "non_degenerate",
            DegeneracyKind::DegenerateJ1 => "degenerate_j1",
            DegeneracyKind::DegenerateJ2 => "degenerate_j2",
        }
    }
}

/// Outcome of [`SeqParams::classify`].
///
/// In the degenerate kinds the sequence is geometric with ratio
/// `ratio_root` (`j1/2` or `j2/2`), which is then an integer-valued
/// rational because the discriminant is a perfect square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyClass {
    pub kind: DegeneracyKind,
    pub ratio_root: Option<Rational>,
}

impl DegeneracyClass {
    fn non_degenerate() -> Self {
        DegeneracyClass {
            kind: DegeneracyKind::NonDegenerate,
            ratio_root: None,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.kind != DegeneracyKind::NonDegenerate
    }
}
