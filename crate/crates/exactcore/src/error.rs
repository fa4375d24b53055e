use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("truncation order mismatch: {0}")]
    TruncationMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular linear system")]
    SingularSystem,
    #[error("inconsistent overdetermined system at row {row}")]
    ConsistencyViolation { row: usize },
}
