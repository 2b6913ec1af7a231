use thiserror::Error;

#[derive(Debug, Error)]
pub enum LgkError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid finite group: {0}")]
    Group(String),
    #[error("invalid module: {0}")]
    Module(String),
    #[error("invalid root datum: {0}")]
    RootDatum(String),
    #[error("invalid sublattice: {0}")]
    Sublattice(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("invalid endoscopic input: {0}")]
    Endoscopy(String),
    #[error("Weyl enumeration cap exceeded (cap = {0})")]
    CapExceeded(usize),
    #[error("unknown preset: {0}")]
    Preset(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, LgkError>;
