//! Library side of the `holoent` command-line tool: scan implementations and
//! the CSV table they produce.  The binary in `main.rs` only parses flags,
//! dispatches, and writes the result out.

pub mod commands;
pub mod scan;

pub use commands::{run_command, Cli, CliError, Command};
pub use scan::ScanResult;
