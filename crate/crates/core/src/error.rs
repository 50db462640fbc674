use thiserror::Error;

use crate::semiring::Scalar;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The bottom element has no tropical multiplicative inverse.
    #[error("epsilon has no tropical inverse")]
    InverseOfEpsilon,

    /// Operand shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Every entry of the vector is epsilon.
    #[error("vector has no finite entry")]
    ZeroVector,

    /// Every coefficient of the polynomial is epsilon.
    #[error("polynomial has no finite coefficient")]
    AllEpsilon,

    /// The matrix is larger than the enforced enumeration cap.
    #[error("matrix size {n} exceeds the size cap {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },

    /// The precedence digraph is acyclic, so no geometric eigenvalue exists.
    #[error("matrix digraph has no finite cycle")]
    NoFiniteCycle,

    /// A hypothesis of an explicit construction does not hold.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// The requested value is not a tropical root of the characteristic
    /// maxpolynomial.
    #[error("{0} is not an algebraic eigenvalue of the matrix")]
    NotAnEigenvalue(Scalar),

    /// A constructed pair failed its own defining equation; unreachable
    /// unless there is a bug.
    #[error("constructed eigenpair failed verification; this is a bug")]
    InternalVerificationFailed,

    /// A supplied eigenpair does not satisfy the generalized eigen equation.
    #[error("eigenpair for {0} fails the generalized eigen equation")]
    SpectrumMismatch(Scalar),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
