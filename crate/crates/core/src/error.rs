//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("characteristic mismatch: {0} vs {1}")]
    CharMismatch(u32, u32),

    #[error("algebra validation failed:\n{}", .0.join("\n"))]
    InvalidAlgebra(Vec<String>),

    #[error("module validation failed: {0}")]
    InvalidModule(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("unsupported construction: {0}")]
    Unsupported(String),

    #[error("missing comultiplication")]
    MissingComult,

    #[error("algebra is not Frobenius: no orientation functional makes the pairing non-degenerate")]
    NotFrobenius,

    #[error("invalid window: {0}")]
    Window(String),

    #[error("computation cap exceeded: {0}")]
    CapExceeded(String),

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("growth fit needs at least {need} positive samples, found {found}")]
    InsufficientSamples { need: usize, found: usize },

    #[error("asymptotic count undefined: gcd of parts is {0}, not 1")]
    PartsGcd(u64),

    #[error("spec error: {0}")]
    Spec(String),

    #[error("missing prerequisite: {0}")]
    MissingPrerequisite(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
