use alloc::string::String;
use alloc::vec::Vec;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parts {0:?} do not form a partition")]
    InvalidPartition(Vec<usize>),
    #[error("cannot parse partition part {0:?}")]
    Parse(String),
    #[error("[{inner}] is not contained in [{outer}]")]
    NotContained { inner: Partition, outer: Partition },
    #[error("size mismatch: {left} != {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("k must be a positive integer")]
    InvalidK,
    #[error("binomial ({x} choose {y}) requires y <= x")]
    InvalidBinomial { x: usize, y: usize },
    #[error("coefficient {0} is not an integer")]
    NotIntegral(String),
    #[error("filling does not match the shape")]
    ShapeMismatch,
    #[error("entry {0} is not a valid k-tableau entry")]
    InvalidEntry(String),
    #[error("filling is not semistandard")]
    NotSemistandard,
}
