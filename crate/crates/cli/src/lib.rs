//! File formats, reports and the command-line driver for `ramseylab-core`.

pub mod app;
pub mod coloring;
pub mod error;
pub mod graph6;
pub mod parallel;
pub mod report;

pub use app::{run, Cli, Outcome};
pub use error::{exit, CliError};
