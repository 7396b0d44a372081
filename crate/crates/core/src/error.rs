use thiserror::Error;

/// Errors produced by validation of arguments and domain invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index tuple violates its invariants (not strictly increasing,
    /// element out of `1..=m`, or wrong length for the operation).
    #[error("invalid index: {0}")]
    InvalidIndex(String),

    /// A scalar argument is out of its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A characteristic other than 0 must be prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Two matrices were expected to have equal shape.
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),

    /// A size parameter exceeds its configured guard.
    #[error("n = {requested} exceeds the configured maximum {max}")]
    LimitExceeded { requested: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
