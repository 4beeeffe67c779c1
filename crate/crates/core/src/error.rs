use thiserror::Error;

/// Errors produced by the simulation library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a physical or mathematical precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// Matrix/vector shapes or mode indices do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// A Fock-space request exceeded the configured memory guard.
    #[error("cutoff guard: {0}")]
    CutoffGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}
