use thiserror::Error;

/// Errors raised by the exact p-adic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not prime (deterministic Miller-Rabin over u64)")]
    NotPrime(u64),
    #[error("working precision {0} is below the floor of 4 digits")]
    PrecisionTooSmall(u32),
    #[error("initial factors are not coprime modulo p (their resultant has positive valuation)")]
    NotCoprime,
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("operation cancelled")]
    Cancelled,
}
