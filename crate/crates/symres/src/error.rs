use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid cell {0}")]
    InvalidCell(String),
    #[error("bound exceeded: {what} = {value} > {bound}")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },
    #[error("simplex {0} is not essential")]
    NotEssential(String),
    #[error("simplex {0} is not redundant")]
    NotRedundant(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
