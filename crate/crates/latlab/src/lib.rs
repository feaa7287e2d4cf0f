//! File formats, golden tables and command implementations behind the
//! `latlab` binary.

pub mod commands;
pub mod error;
pub mod golden;
pub mod output;
pub mod tables;

pub use commands::{Outcome, RunConfig};
pub use error::{CliError, CliResult};
