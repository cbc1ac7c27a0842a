//! Command-line front end: instance documents, result emitters, and the
//! `compute`, `compare`, `check` and `sweep` commands.
//!
//! Exit codes: 0 success, 1 invalid input, 2 refusal because semistable and
//! stable loci differ, 3 failed internal cross-check.

mod commands;
mod document;
mod emit;
mod error;

pub use commands::{
    cmd_check, cmd_compare, cmd_compute, cmd_sweep, configure_threads, parse_range, sweep_table, Outcome, RunOptions,
    SweepCell, SweepTable, THREADS_VAR,
};
pub use document::{InstanceDocument, OptionsDocument, PointDocument, ResultDocument};
pub use emit::{emit_result, Format};
pub use error::{CliError, EXIT_INTERNAL, EXIT_INVALID, EXIT_SEMISTABLE};

/// Reads a document from a path, or from standard input for `-`.
pub fn read_document(path: &str) -> Result<InstanceDocument, CliError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|source| CliError::Io { path: path.into(), source })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?
    };
    InstanceDocument::parse(&text)
}
