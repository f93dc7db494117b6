use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid SRG parameters ({v},{k},{lambda},{mu}): {reason}")]
    InvalidParams { v: u64, k: u64, lambda: u64, mu: u64, reason: String },
    #[error("conference graph: eigenvalues are irrational, exact dot products unavailable")]
    ConferenceGraph,
    #[error("odd degree {0} needs irrational zonal arguments; only even degrees are exact")]
    OddDegree(u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is nondegenerate: no kernel certificate")]
    NoCertificate,
    #[error("linear relation is indeterminate in the unknown")]
    Indeterminate,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("unknown stage id {0:?}")]
    UnknownStage(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
