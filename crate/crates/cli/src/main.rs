use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use glacalc::{run_file, Command, Options};

/// Exact checks for generalized Lie algebras over Q(x1, ..., xm).
///
/// Exit status: 0 pass, 1 mathematical failure, 2 usage or definition error.
#[derive(Parser)]
#[command(name = "glacalc", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Definition file.
    #[arg(long)]
    file: PathBuf,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Samples per randomized check.
    #[arg(long, default_value_t = 16)]
    samples: usize,
    /// Highest form degree for ideal membership.
    #[arg(long)]
    degree_cap: Option<usize>,
    /// key=value records instead of the human layout.
    #[arg(long)]
    machine: bool,
    /// Object name from the file, repeatable; commands take the first
    /// declared object of the right kind when omitted.
    #[arg(long = "arg", value_name = "NAME")]
    args: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        seed: cli.seed,
        samples: cli.samples,
        degree_cap: cli.degree_cap,
        args: cli.args,
    };
    match run_file(cli.command, &cli.file, &opts) {
        Ok(report) => {
            let text = if cli.machine {
                report.machine()
            } else {
                report.human()
            };
            print!("{text}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}: {e}", cli.file.display());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
