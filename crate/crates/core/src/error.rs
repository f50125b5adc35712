use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CvmError {
    #[error("root specification is empty")]
    EmptySpec,
    #[error("root {index} has multiplicity 0")]
    ZeroMultiplicity { index: usize },
    #[error("root {index} is not finite ({lambda})")]
    NonFiniteRoot { index: usize, lambda: f64 },
    #[error("root {index} ({lambda}) duplicates root {first}")]
    DuplicateRoot {
        index: usize,
        first: usize,
        lambda: f64,
    },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is singular to working precision (column {column})")]
    Singular { column: usize },
    #[error("expected {expected} derivative values for root {root}, got {found}")]
    HermiteShape {
        root: usize,
        expected: usize,
        found: usize,
    },
}

pub type Result<T> = std::result::Result<T, CvmError>;
