use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("metric violation: {0}")]
    Metric(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error("game ledger inconsistent: {0}")]
    Ledger(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("degenerate report: {0}")]
    Degenerate(String),
    #[error("search node limit of {0} exceeded")]
    Limit(u64),
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
