use thiserror::Error;

/// Errors raised by the series, arithmetic, enumeration and identity code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("truncation order must be positive")]
    ZeroOrder,

    #[error("divisor series has non-unit constant term {0}")]
    NonUnitConstant(i128),

    #[error("brute-force enumeration of n = {n} exceeds cap {cap}")]
    CapExceeded { n: u64, cap: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("prime {p} is not supported here: {reason}")]
    UnsupportedPrime { p: u64, reason: &'static str },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
