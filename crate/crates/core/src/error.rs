use thiserror::Error;

/// Errors raised by the coloring algorithms, exact solvers and generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("guard exceeded: {what} is {actual}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("infeasible: {0}")]
    Infeasible(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::InvalidStructure(msg.into())
    }

    pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Self {
        Error::GuardExceeded {
            what,
            actual,
            limit,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
