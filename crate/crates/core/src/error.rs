use num_bigint::BigUint;

/// Errors surfaced by the arithmetic and certificate layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(BigUint),

    #[error("{0} is not prime")]
    NotPrime(BigUint),

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    /// A mathematically guaranteed step failed; this signals a broken
    /// arithmetic layer (or a falsified theorem), never bad user input.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
