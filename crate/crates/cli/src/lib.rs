//! Command-line front end for `trinoise-core`: sweeps to CSV, death-point
//! search, channel verification and closed-form audit reports.

pub mod commands;
pub mod config;
mod error;
pub mod format;
pub mod report;

pub use commands::run;
pub use config::{Cli, Command, RunConfig};
pub use error::{CliError, CliResult};
