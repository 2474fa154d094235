use thiserror::Error;

use crate::lgroup::WeightType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid weight type ({p},{q}): both weights must be at least 1")]
    InvalidWeight { p: i64, q: i64 },

    #[error("weight type mismatch: {0} vs {1}")]
    WeightMismatch(WeightType, WeightType),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("invalid sheaf label: {0}")]
    InvalidSheaf(String),

    #[error("{0} is not an arc")]
    NotAnArc(String),

    #[error("empty window: lo {lo} > hi {hi}")]
    InvalidWindow { lo: i64, hi: i64 },

    #[error("invalid vertex {c:?}: {reason}")]
    InvalidVertex { c: Vec<i64>, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A mathematical invariant failed to hold. Always a bug, never bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
