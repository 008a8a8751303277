use thiserror::Error;

/// Unified error type for the laboratory.
///
/// The split mirrors the CLI exit codes: `NotAdmissible`/`Domain`/`Parse`
/// are usage-level problems (bad inputs), `Numerical` means an algorithm
/// could not reach its accuracy contract (truncation cap hit, contour
/// validation failed, residual audit failed) and results must not be trusted.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parameters are not admissible: {0}")]
    NotAdmissible(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub fn not_admissible(msg: impl Into<String>) -> Self {
        Error::NotAdmissible(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
