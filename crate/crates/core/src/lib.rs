//! Closed forms for polynomial-weighted partial sums of generalized
//! Fibonacci sequences.
//!
//! For `s0 = c0`, `s1 = c1`, `s(n+1) = a s(n) + b s(n-1)` with positive
//! integers `a, b`, and any weight polynomial `P` with rational
//! coefficients, the crate builds polynomials `F, G, H` such that
//!
//! ```text
//! 2 * sum_{k=1}^{n} P(k) s_{k-1} = F(n) s_{n+1} + G(n) s_n + H(n)   for all n >= 1
//! ```
//!
//! and checks every such identity against a term-by-term sum in exact
//! arithmetic.
//!
//! ```
//! use horadam::{general_triple, verify_triple, parse_poly, SeqParams};
//!
//! let pell = SeqParams::pell();
//! let t = general_triple(&parse_poly("k").unwrap(), &pell);
//! assert!(verify_triple(&t, 50).ok);
//! ```

pub mod cli;
pub mod closed_form;
pub mod emit;
pub mod error;
pub mod exact;
pub mod sequence;
pub mod verify;

pub use closed_form::{
    build_matrix_general, build_matrix_pell, family_sample, general_triple, monomial_triple,
    rhs_vector, solve_coefficients, ClosedFormTriple, CoefficientTuple, UpperTriangular,
};
pub use emit::{parse_poly, render_identity, render_table, Format};
pub use error::{Error, Result};
pub use exact::{binomial, Poly, Rational};
pub use sequence::{DegeneracyClass, DegeneracyKind, Preset, SeqParams};
pub use verify::{
    brute_force_sum, reconstruct_triple, verify_triple, ReconstructionResult,
    ReconstructionStatus, VerificationReport,
};
