//! Command-line surface: argument grammar, JSON and b-file output, the
//! heuristics table, and the oracle suite.

pub mod args;
pub mod bfile;
pub mod json;
pub mod oracle;
pub mod run;
pub mod table;

pub use run::{run, CliError, EXIT_FAIL, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
