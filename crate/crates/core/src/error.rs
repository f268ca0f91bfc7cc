use thiserror::Error;

use crate::scalar::Backend;

/// Failures of the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("backend mismatch: cannot combine {left} with {right}")]
    BackendMismatch { left: Backend, right: Backend },
    #[error("{value} has no multiplicative inverse over {backend}")]
    NotInvertible { value: String, backend: Backend },
    #[error("{0} is not a scalar (its second coordinate is nonzero)")]
    NotAScalar(String),
    #[error("division of a non-scalar element by zero is not covered by scalar division")]
    ZeroDivisor,
    #[error("zero divided by zero is indeterminate")]
    Indeterminate,
    #[error("invalid modulus {0}: expected a prime below 2^31")]
    InvalidModulus(u64),
    #[error("{value} is not representable over {backend}")]
    NotRepresentable { value: String, backend: Backend },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
