use clap::{Parser, Subcommand};
use parbetti::Method;
use parbetti_cli::{
    cmd_check, cmd_compare, cmd_compute, cmd_sweep, configure_threads, parse_range, read_document, Format, Outcome,
    RunOptions,
};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "parbetti", version, about = "Betti numbers of moduli of parabolic bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one Poincaré polynomial.
    Compute {
        /// Instance document, or `-` for standard input.
        input: String,
        #[arg(long)]
        method: Option<String>,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        truncation: Option<i64>,
        #[arg(long)]
        force: bool,
        /// Report wall-clock time.
        #[arg(long)]
        timing: bool,
    },
    /// Run every applicable method and compare coefficientwise.
    Compare {
        input: String,
        #[arg(long)]
        truncation: Option<i64>,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Report stability, dimension and (rank 2) non-emptiness.
    Check { input: String },
    /// Tabulate Betti numbers over genus and degree ranges.
    Sweep {
        input: String,
        #[arg(long, default_value = "0..3")]
        genus_range: String,
        /// Defaults to the document degree.
        #[arg(long)]
        degree_range: Option<String>,
        #[arg(long, default_value = "latex")]
        format: String,
        #[arg(long)]
        method: Option<String>,
        #[arg(long)]
        force: bool,
    },
}

fn run(cli: Cli) -> Result<Outcome, parbetti_cli::CliError> {
    configure_threads()?;
    let method = |m: Option<String>| m.map(|m| m.parse::<Method>()).transpose();
    Ok(match cli.command {
        Command::Compute { input, method: m, format, truncation, force, timing } => {
            let run = RunOptions { method: method(m)?, truncation, force, timing };
            cmd_compute(&read_document(&input)?, &run, format.parse()?)
        }
        Command::Compare { input, truncation, force, timing } => {
            let run = RunOptions { method: None, truncation, force, timing };
            cmd_compare(&read_document(&input)?, &run)
        }
        Command::Check { input } => cmd_check(&read_document(&input)?),
        Command::Sweep { input, genus_range, degree_range, format, method: m, force } => {
            let doc = read_document(&input)?;
            let degrees = match degree_range {
                Some(r) => parse_range(&r)?,
                None => doc.degree..=doc.degree,
            };
            let run = RunOptions { method: method(m)?, truncation: None, force, timing: false };
            cmd_sweep(&doc, &run, parse_range(&genus_range)?, degrees, format.parse::<Format>()?)
        }
    })
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse()).unwrap_or_else(|e| Outcome::from_error(&e));
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
