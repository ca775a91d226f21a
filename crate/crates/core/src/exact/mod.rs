//! Exact scalars and dense polynomials.

mod poly;
mod rational;

pub use poly::Poly;
pub use rational::{ParseRationalError, Rational};

use num_bigint::BigInt;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    // acc stays integral: after step i it equals C(n - k + i, i)
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}
