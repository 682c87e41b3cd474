use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller broke a documented precondition (mismatched variables,
    /// inhomogeneous input, ...).
    #[error("usage error: {0}")]
    Usage(String),

    #[error("class has degree {found}, expected top degree {top}")]
    NotTopDegree { found: u32, top: u32 },

    #[error("unsupported range: {0}")]
    UnsupportedRange(String),

    /// A mathematical claim checked by the engine did not hold.
    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("non-integral result: {0}")]
    NonIntegralResult(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::UnsupportedRange(msg.into())
    }

    pub(crate) fn check(msg: impl Into<String>) -> Self {
        Error::CheckFailed(msg.into())
    }
}
