use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{perm} is not Grassmannian with descent at {k}")]
    NotGrassmannian { perm: String, k: usize },
    #[error("{shape} does not fit in a {k}x{m} rectangle")]
    DoesNotFit { shape: String, k: usize, m: usize },
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("non-integral coefficient in e-basis expansion: {0}")]
    NonIntegral(String),
    #[error("diagram has {got} boxes, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
