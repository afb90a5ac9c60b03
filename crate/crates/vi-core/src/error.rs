use thiserror::Error;

/// Errors shared by the domain oracles, prox solvers, and the evaluation oracle.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unbounded subproblem: {0}")]
    UnboundedSubproblem(String),

    #[error("mirror map incompatible with domain: {0}")]
    IncompatibleMirror(String),

    #[error("oracle unsupported: {0}")]
    OracleUnsupported(String),

    #[error("block index {index} out of range (n = {n})")]
    BlockOutOfRange { index: usize, n: usize },
}

pub type CoreResult<T> = Result<T, CoreError>;
