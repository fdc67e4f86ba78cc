//! Command-line front end for `pqh-core`: instance files, report formats and the
//! subcommands of the `pqh` binary.

pub mod commands;
pub mod dto;
pub mod error;
pub mod instance;
pub mod render;

pub use commands::{run, Output};
