use thiserror::Error;

use crate::ranking::RankConflict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe mismatch: expected a set over {expected} elements, got {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("ground sets differ")]
    GroundMismatch,

    #[error("element index {index} out of range for a ground set of {size} elements")]
    OutOfRange { index: usize, size: usize },

    #[error("invalid ground set: {0}")]
    InvalidGround(String),

    #[error("invalid implication: {0}")]
    InvalidImplication(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid meet family: {0}")]
    InvalidMeetFamily(String),

    #[error("invalid antichain: {0}")]
    InvalidAntichain(String),

    #[error("invalid ranked set: {0}")]
    InvalidRankedSet(String),

    #[error("implicational base is cyclic")]
    Cyclic,

    #[error("implicational base is not standard")]
    NotStandard,

    #[error("implicational base is not ranked: {0}")]
    NotRanked(Box<RankConflict>),

    #[error("rank function does not satisfy the base")]
    InvalidRank,

    #[error("not a convex-geometry meet family: {0}")]
    NotConvexGeometry(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("oracle size guard exceeded: {size} elements, limit {limit} (set GEODUAL_GUARD_OVERRIDE=1 to lift)")]
    GuardExceeded { size: usize, limit: usize },

    #[error("{0}")]
    Precondition(String),
}
