use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal contradiction: {0}")]
    Contradiction(String),
    #[error("unresolved: {0}")]
    Unresolved(String),
    #[error("combinatorial cap exceeded: estimated {estimate} weights, cap {cap}")]
    Resource { estimate: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
