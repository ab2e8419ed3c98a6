//! Crate-wide error type.
//!
//! Variants map onto the failure classes the pipeline distinguishes at the
//! process boundary: configuration problems (bad config file, missing root,
//! incompatible dimensions) versus data problems (malformed input, integrity
//! failures) versus caller bugs (usage errors).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input that failed to parse, with a 1-based line number when known.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Invalid configuration: missing files, unknown ids, incompatible settings.
    #[error("configuration error: {0}")]
    Config(String),

    /// Well-formed input that violates a data contract (unknown concept id,
    /// missing embedding, mismatched document sets).
    #[error("data error: {0}")]
    Data(String),

    /// Stored artifact failed an integrity check (hash mismatch, truncation,
    /// graph cycle).
    #[error("integrity error: {0}")]
    Integrity(String),

    /// API misuse by the caller (over-length window, empty input where
    /// non-empty is required).
    #[error("usage error: {0}")]
    Usage(String),

    /// Tensor operands with incompatible shapes.
    #[error("shape mismatch in {op}: {lhs:?} vs {rhs:?}")]
    Shape {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// Process exit code for the CLI: configuration errors are 2, everything
    /// else is 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            _ => 1,
        }
    }
}
