use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IqwError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("bound violation: {0}")]
    BoundViolation(String),
    #[error("not symmetric: {0}")]
    NotSymmetric(String),
    #[error("algorithm mismatch: {0}")]
    Mismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, IqwError>;
