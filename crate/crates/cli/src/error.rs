use std::path::PathBuf;

use thiserror::Error;

use crate::coloring::ColoringFormatError;
use crate::graph6::Graph6Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const USAGE: u8 = 2;
    /// A search ran out of budget, or sampling could not decide.
    pub const INDETERMINATE: u8 = 3;
    /// An internal consistency check failed.
    pub const INVARIANT: u8 = 4;
    /// An input file could not be read or parsed.
    pub const MALFORMED_INPUT: u8 = 5;
    /// A coloring does not match its graph.
    pub const COLORING_MISMATCH: u8 = 6;
    /// Inputs parsed but were rejected (parameters, preconditions).
    pub const REJECTED: u8 = 7;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed graph6 in {path}: {source}")]
    Graph6 { path: PathBuf, source: Graph6Error },
    #[error("malformed coloring in {path}: {source}")]
    Coloring { path: PathBuf, source: ColoringFormatError },
    #[error(transparent)]
    Core(#[from] ramseylab_core::Error),
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use ramseylab_core::Error as E;
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Read { .. } | CliError::Graph6 { .. } | CliError::Coloring { .. } => exit::MALFORMED_INPUT,
            CliError::Write { .. } | CliError::Json(_) => exit::INVARIANT,
            CliError::Core(e) if e.is_indeterminate() => exit::INDETERMINATE,
            CliError::Core(E::Invariant(_)) => exit::INVARIANT,
            CliError::Core(E::ColoringMismatch(_)) => exit::COLORING_MISMATCH,
            CliError::Core(_) => exit::REJECTED,
        }
    }
}
