//! Library half of the `glacalc` command: definition files, commands and
//! report formatting. `main.rs` only handles arguments and exit codes.

pub mod commands;
pub mod definition;
pub mod report;

pub use commands::{run, CliError, Command, Options};
pub use definition::{parse_definition, Definition, DefinitionError};
pub use report::{Record, Report, Verdict};

/// Reads and parses a definition file, then runs one command on it.
pub fn run_file(cmd: Command, path: &std::path::Path, opts: &Options) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let def = parse_definition(&text)?;
    run(cmd, &def, opts)
}
