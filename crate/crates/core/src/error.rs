use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements belong to different rings")]
    MixedRings,
    #[error("ring has no involution")]
    NoInvolution,
    #[error("ring is infinite; exhaustive enumeration is impossible")]
    InfiniteRing,
    #[error("ring or sweep too large for exhaustive enumeration: {0}")]
    CardinalityGuard(String),
    #[error("set is not an additive subgroup")]
    NotAdditivelyClosed,
    #[error("two distinct (b,c)-inverses found: {0} and {1}")]
    UniquenessViolation(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not regular")]
    NotRegular(String),
    #[error("criteria disagree in {context}: {detail}")]
    CriteriaDisagreement { context: String, detail: String },
    #[error("element is not one-sided (b,c)-invertible: {0}")]
    NotOneSidedInvertible(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("no Drazin index found up to bound {0}")]
    IndexBoundExceeded(usize),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("invalid ring spec: {0}")]
    InvalidRing(String),
    #[error("invalid element literal: {0}")]
    InvalidElement(String),
    #[error("invalid ring table: {0}")]
    InvalidTable(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable short name, used for the CLI's JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MixedRings => "MixedRings",
            Error::NoInvolution => "NoInvolution",
            Error::InfiniteRing => "InfiniteRing",
            Error::CardinalityGuard(_) => "CardinalityGuard",
            Error::NotAdditivelyClosed => "NotAdditivelyClosed",
            Error::UniquenessViolation(..) => "UniquenessViolation",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotRegular(_) => "NotRegular",
            Error::CriteriaDisagreement { .. } => "CriteriaDisagreement",
            Error::NotOneSidedInvertible(_) => "NotOneSidedInvertible",
            Error::HypothesisFailed(_) => "HypothesisFailed",
            Error::IndexBoundExceeded(_) => "IndexBoundExceeded",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::InvalidRing(_) => "InvalidRing",
            Error::InvalidElement(_) => "InvalidElement",
            Error::InvalidTable(_) => "InvalidTable",
            Error::Io(_) => "Io",
        }
    }

    pub(crate) fn disagreement(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::CriteriaDisagreement {
            context: context.into(),
            detail: detail.into(),
        }
    }
}
