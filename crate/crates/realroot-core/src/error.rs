use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operation not defined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid interval: lower endpoint must be below upper endpoint")]
    InvalidInterval,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A requested rigorous bound could not be certified. The payload says
    /// which hypothesis failed; callers must treat the value as unbounded.
    #[error("certification failed: {0}")]
    NotCertified(String),
}
