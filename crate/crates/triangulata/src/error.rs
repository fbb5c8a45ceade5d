use thiserror::Error;

/// Errors produced by graph construction and the wheel operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("structural defect: {0}")]
    Structural(String),
    #[error("not a face: {0:?}")]
    NotAFace([usize; 3]),
    #[error("vertex {vertex} has degree {actual}, operation needs degree {expected}")]
    DegreeMismatch {
        vertex: usize,
        expected: usize,
        actual: usize,
    },
    #[error("identification of {0} and {1} would create a multi-edge")]
    IdentificationClash(usize, usize),
    #[error("{0}")]
    BadOperand(String),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("operation unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;
