use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller broke a precondition on shapes or sizes (mismatched orders,
    /// indices out of range, malformed input).
    #[error("usage error: {0}")]
    Usage(String),
    /// The requested value does not exist as an exact formal object
    /// (e.g. a rational power of a series whose constant term is not 1).
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal cross-check failed. This always indicates a bug.
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
