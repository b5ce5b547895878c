use thiserror::Error;

use crate::symplectic::SpaceId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("lattice failed validation: {0}")]
    InvalidColex(String),

    #[error("dimension {name}={value} is not 3-face-colorable: {rule}")]
    DimensionNotColorable { name: &'static str, value: usize, rule: &'static str },

    #[error("dimension {name}={value} is below the minimum {min}")]
    DimensionTooSmall { name: &'static str, value: usize, min: usize },

    #[error("qubit space mismatch: expected {expected}, found {found}")]
    SpaceMismatch { expected: SpaceId, found: SpaceId },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("invalid Pauli string: {0}")]
    InvalidPauli(String),

    #[error("edge ({0}, {1}) cannot carry this hopping operator: {2}")]
    WrongEdge(usize, usize, String),

    #[error("map conventions violated: {0}")]
    Convention(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("odd number of {kind} defects ({count}) on a closed surface")]
    OddDefects { kind: &'static str, count: usize },

    #[error("map does not belong to this lattice: {0}")]
    MapMismatch(String),

    #[error("malformed map file: {0}")]
    MapFormat(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), message: message.into() }
    }
}
