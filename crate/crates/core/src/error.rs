use thiserror::Error;

use crate::model::Square;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("label {0} not present in tableau")]
    LabelNotFound(u32),

    #[error("label {0} already present in tableau")]
    DuplicateLabel(u32),

    #[error("rank {rank} is too small for {n} dominos (need rank >= n - 1)")]
    RankTooSmall { rank: usize, n: usize },

    #[error("malformed tableau pair: {0}")]
    MalformedPair(String),

    #[error("invalid cycle set: {0}")]
    InvalidCycleSet(String),

    #[error("stale cycle: {0}")]
    StaleCycle(String),

    #[error("skeleton mismatch: {0}")]
    SkeletonMismatch(String),

    #[error("no core cycle in tableau")]
    NoCoreCycle,

    #[error("cycle structure inconsistent with shape: {0}")]
    Inconsistent(String),

    #[error("untileable diagram: {0}")]
    Untileable(String),

    #[error("witness verification failed: {0}")]
    VerificationFailure(String),

    #[error("n = {n} exceeds the configured bound {bound}")]
    ResourceBound { n: usize, bound: usize },

    #[error("internal invariant violated at {square:?}: {message}")]
    Internal { square: Option<Square>, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn internal(message: impl Into<String>) -> Self {
        Error::Internal { square: None, message: message.into() }
    }

    pub(crate) fn internal_at(square: Square, message: impl Into<String>) -> Self {
        Error::Internal { square: Some(square), message: message.into() }
    }
}
