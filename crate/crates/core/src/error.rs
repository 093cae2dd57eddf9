use thiserror::Error;

use crate::series::SeriesError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error("rank must be at least 1")]
    RankZero,
    #[error("rank {n} and degree {d} are not coprime")]
    NotCoprime { n: u32, d: i64 },
    #[error("cap {cap} is below the required {needed}")]
    CapTooSmall { cap: u32, needed: u32 },
    /// A mathematical self-check failed. `invariant` names the identity.
    #[error("internal consistency failure ({invariant}): {detail}")]
    Consistency { invariant: String, detail: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed document: {0}")]
    Document(String),
}

impl Error {
    pub fn consistency(invariant: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Consistency {
            invariant: invariant.into(),
            detail: detail.into(),
        }
    }

    /// True for errors caused by the caller's input rather than by a failed
    /// self-check.
    pub fn is_user_error(&self) -> bool {
        matches!(
            self,
            Error::GenusTooSmall(_)
                | Error::RankZero
                | Error::NotCoprime { .. }
                | Error::CapTooSmall { .. }
                | Error::Io(_)
                | Error::Document(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
