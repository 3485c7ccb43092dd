use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid edge rotation: {0}")]
    InvalidRotation(String),

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("power iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Usage and parse failures map to 2, numeric failures to 3.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoConvergence { .. } | Error::NotSymmetric { .. } => 3,
            _ => 2,
        }
    }
}
