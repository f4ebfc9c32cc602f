//! Error type shared by all core modules.

use alloc::string::String;

/// Errors produced by core operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Shapes or lengths do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Non-finite values or numeric divergence.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Input is degenerate for the requested operation (e.g. zero norm).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Two evaluations of a supposedly deterministic function disagreed.
    #[error("determinism error: {0}")]
    Determinism(String),

    /// An index is out of range.
    #[error("index error: {0}")]
    Index(String),

    /// A configuration value violates its invariant.
    #[error("config error: {0}")]
    Config(String),

    /// Data artifacts disagree with each other (catalog vs. embeddings etc.).
    #[error("consistency error: {0}")]
    Consistency(String),

    /// The evaluation or data protocol was violated.
    #[error("protocol error: {0}")]
    Protocol(String),

    /// The data pipeline produced an unusable result.
    #[error("data error: {0}")]
    Data(String),
}

pub type Result<T> = core::result::Result<T, Error>;
