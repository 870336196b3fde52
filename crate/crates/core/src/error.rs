use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("value not representable: {0}")]
    NotRepresentable(String),
    #[error("unbound tensor `{0}`")]
    Unbound(String),
    #[error("malformed network: {0}")]
    Malformed(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("inadmissible sample point: {0}")]
    Inadmissible(String),
    #[error("unknown link `{name}`; valid names: {valid}")]
    UnknownLink { name: String, valid: String },
    #[error("diagnostic failed for {link}: {what}")]
    Diagnostic { link: String, what: String },
}

pub type Result<T> = std::result::Result<T, Error>;
