use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partitions of different sizes cannot be compared ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("expected a homogeneous symmetric function")]
    Inhomogeneous,

    #[error("operation undefined on the zero symmetric function")]
    ZeroInput,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inexact division by q^3 - q in the coefficient of s{partition} (remainder {remainder})")]
    InexactDivision { partition: String, remainder: String },

    #[error("E({n},{k},{l}) is not a genuine character: coefficient of {term} is {coeff}")]
    NotEffective {
        n: usize,
        k: usize,
        l: usize,
        term: String,
        coeff: String,
    },

    #[error("cache error at {path}: {message}")]
    Cache { path: PathBuf, message: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
