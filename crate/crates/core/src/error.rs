use thiserror::Error;

/// Errors raised by the engine. Computation-level findings (a complex that
/// fails validation, an exactness cross-check discrepancy) are reported as data,
/// not through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic must be prime, got {0}")]
    NotPrime(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u64, u64),
    #[error("inhomogeneous element: {0}")]
    Inhomogeneous(String),
    #[error("module mismatch: {0}")]
    ModuleMismatch(String),
    #[error("degree-inconsistent map: {0}")]
    DegreeMismatch(String),
    #[error("wrong-degree form: {0}")]
    WrongDegree(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Semantic(String),
    #[error("unknown corpus entry: {0}")]
    UnknownCorpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
