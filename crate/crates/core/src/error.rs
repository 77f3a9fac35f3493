use thiserror::Error;

/// Errors raised by the exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("row {target} is not in the span of basis rows {basis:?}")]
    NotInSpan { target: usize, basis: Vec<usize> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("duplicate value {0}")]
    Duplicate(String),

    #[error("zero divisor: {0}")]
    ZeroDivisor(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
