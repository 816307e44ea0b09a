//! Crate-wide error type with a coarse kind used for process exit codes.

use thiserror::Error;

/// Coarse error category; the CLI maps these to exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input files or records (exit 2).
    Parse,
    /// Violated preconditions or configuration constraints (exit 3).
    Constraint,
    /// Non-finite values or failed numerical checks (exit 4).
    Numeric,
    /// Filesystem and OS-level failures (exit 5).
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected:?}, got {got:?}")]
    ShapeMismatch { expected: Vec<usize>, got: Vec<usize> },

    #[error("data length {got} does not match shape {shape:?}")]
    DataLength { shape: Vec<usize>, got: usize },

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("{0}")]
    InvalidInput(String),

    #[error("{0}")]
    Parse(String),

    #[error("bad magic: expected {expected:?}, found {found:?}")]
    BadMagic { expected: [u8; 4], found: [u8; 4] },

    #[error("unsupported format version {found} (expected {expected})")]
    UnsupportedVersion { expected: u32, found: u32 },

    #[error("truncated file: needed {needed} more bytes")]
    Truncated { needed: usize },

    #[error("{count} trailing bytes after payload")]
    TrailingBytes { count: usize },

    #[error("rank deficient: achieved rank {achieved}, requested {requested}")]
    RankDeficient { achieved: usize, requested: usize },

    #[error("non-finite loss at step {step}; last good checkpoint retained")]
    NonFiniteLoss {
        step: u64,
        last_good: Box<crate::featureio::Checkpoint>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ShapeMismatch { .. }
            | Error::DataLength { .. }
            | Error::InvalidInput(_)
            | Error::RankDeficient { .. } => ErrorKind::Constraint,
            Error::NonFinite(_) | Error::NonFiniteLoss { .. } => ErrorKind::Numeric,
            Error::Parse(_)
            | Error::BadMagic { .. }
            | Error::UnsupportedVersion { .. }
            | Error::Truncated { .. }
            | Error::TrailingBytes { .. }
            | Error::Json(_)
            | Error::Csv(_) => ErrorKind::Parse,
            Error::Io(_) => ErrorKind::Io,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
