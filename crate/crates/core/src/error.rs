use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("r must be at least 2, got {0}")]
    RankTooSmall(u32),

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("not a skew diagram: {0}")]
    InvalidSkew(String),

    #[error("not a hook: {0}")]
    NotAHook(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{label} is not in {set} for r = {r}")]
    InvalidLabel { r: u32, label: Partition, set: &'static str },

    #[error("({white}, {black}) is not a wb pair")]
    NotWbPair { white: i32, black: i32 },

    #[error("invalid weight diagram: {0}")]
    InvalidWeight(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
