use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("braid group needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("free group rank must be at least 1")]
    ZeroRank,

    #[error("wada1 parameter k must be nonzero")]
    ZeroParameter,

    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("{0} has no Magnus matrix (its images do not preserve the augmentation x_j -> t)")]
    NoMagnusMatrix(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("handle reduction exceeded its budget of {budget} rewrites")]
    BudgetExhausted { budget: u64 },

    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(position: usize, token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        position,
        token: token.to_string(),
        reason: reason.into(),
    }
}
