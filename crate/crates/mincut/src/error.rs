use thiserror::Error;

/// Errors reported by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("partition is trivial: one side is empty")]
    TrivialCut,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("edge {eid} is invalid: {reason}")]
    InvalidEdge { eid: usize, reason: &'static str },
    #[error("total edge weight overflows 64 bits")]
    WeightOverflow,
    #[error("vertex {vertex} has degree {degree}, more than 3")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("operation {index} refers to a leaf that does not exist")]
    NoSuchLeaf { index: usize },
    #[error("timestamps are not a permutation of 1..=k")]
    BadTimestamps,
    #[error("path query {index}: target is not the representative of an ancestor cluster")]
    NotAnAncestorRep { index: usize },
    #[error("path query between a vertex and itself")]
    EmptyPath,
    #[error("probability out of range [0, 1]")]
    BadProbability,
    #[error("weight bound lies below the minimum cut")]
    Degenerate,
    #[error("certificate round made no progress")]
    NoProgress,
    #[error("skeleton graph is disconnected")]
    SkeletonDisconnected,
    #[error("input too large for this oracle: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
