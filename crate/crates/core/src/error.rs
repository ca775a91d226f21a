use thiserror::Error;

/// Errors raised by the library.
///
/// Verification failures are not errors; they are reported as data in
/// [`crate::verify::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid sequence parameters: {0}")]
    InvalidParams(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unsupported input at position {pos}: {msg}")]
    Unsupported { pos: usize, msg: String },

    #[error("singular matrix: zero on the diagonal at row {row}")]
    SingularMatrix { row: usize },

    #[error("dimension mismatch: matrix is {dim}x{dim}, right-hand side has {rhs} entries")]
    DimensionMismatch { dim: usize, rhs: usize },

    #[error("sequence is non-degenerate, so the closed-form triple is unique and no family exists")]
    NonDegenerate,

    #[error("s_{n} is zero, ratio s_(n+1)/s_n is undefined")]
    ZeroTerm { n: u64 },

    #[error("degree bound {bound} is below the weight degree {degree}")]
    DegreeBound { bound: usize, degree: usize },

    #[error("reconstruction system is inconsistent")]
    InconsistentSystem,

    #[error("identity failed verification at n = {n}")]
    Unverified { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
