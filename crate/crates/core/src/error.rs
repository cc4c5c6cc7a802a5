//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing and positive: {0}")]
    InvalidPartition(String),

    #[error("sequence is not a jagged partition: {0}")]
    NotJagged(String),

    #[error("the jagged restriction requires K > 2 (got K = {0})")]
    JaggedKTooSmall(u32),

    #[error("invalid restriction parameters: {0}")]
    InvalidRestriction(String),

    #[error("not an E-partition: {0}")]
    NotEPartition(String),

    #[error("input does not satisfy the 0^2 1 conditions: {0}")]
    NotZeroTwoOne(String),

    #[error("no rearrangement of the tripled parts is non-increasing: {0}")]
    P2RearrangementFailed(String),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("enumeration weight bound must be even (got {0})")]
    OddWeightBound(u64),

    #[error("invalid Frobenius symbol: {0}")]
    InvalidFrobenius(String),

    #[error("invalid overpartition: {0}")]
    InvalidOverpartition(String),

    #[error("malformed Burge word: {0}")]
    MalformedWord(String),

    #[error("shuffle would not leave peak positions strictly increasing")]
    ShuffleOrder,

    #[error("peak-pair map diagnostic failed: {0}")]
    PeakPairDiagnostic(String),

    #[error("Frobenius rows from path are not strictly decreasing: {0}")]
    FrobeniusRowOrder(String),

    #[error("series truncation orders do not match: ({0},{1}) vs ({2},{3})")]
    OrderMismatch(usize, usize, usize, usize),

    #[error("product form is only defined for 2i < K+1 or (K odd, i = kappa): K={k}, i={i}")]
    ProductCase { k: u32, i: u32 },

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
