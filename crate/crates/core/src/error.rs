use std::io;

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A coloring document could not be parsed. `line` and `column` are 1-based.
    #[error("{message} (line {line}, column {column})")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid cycle length {length}: {reason}")]
    CycleLength { length: usize, reason: String },

    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("N={n} exceeds the exhaustive feasibility gate N <= {gate}")]
    Feasibility { n: usize, gate: usize },

    #[error("solver: {0}")]
    Solver(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
