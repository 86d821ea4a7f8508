//! `g2tok`: batch front end for the G₂ Tokuyama computations.
//!
//! Exit status is 0 when everything checked out, 1 when a computed identity
//! fails and 2 for usage or I/O problems.

mod dump;
mod gk;
mod output;
mod range;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use range::IndexRange;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "g2tok",
    version,
    about = "Deformed Weyl denominators and Tokuyama sums for G2"
)]
struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the G2 crystal sum against the deformed character for a grid of weights.
    Verify(VerifyArgs),
    /// Gindikin-Karpelevich series checks and the subcone audit.
    Gk(GkArgs),
    /// Write patterns, characters or numerators for one weight.
    Dump(DumpArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Coefficient of the first fundamental weight: `n` or `lo..hi` (inclusive).
    #[arg(long, default_value = "0")]
    pub l1: IndexRange,
    /// Coefficient of the second fundamental weight: `n` or `lo..hi` (inclusive).
    #[arg(long, default_value = "0")]
    pub l2: IndexRange,
    /// Write JSON Lines here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Record wall time in each report (makes output non-reproducible).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GkMode {
    Triple,
    Audit,
}

#[derive(Debug, Args)]
pub struct GkArgs {
    /// Total degree bound in `x` and `y` (12 for `triple`, 16 for `audit`).
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
    pub max_degree: Option<i64>,
    #[arg(long, value_enum, default_value_t = GkMode::Triple)]
    pub mode: GkMode,
    /// Defaults to `json` for `triple` and `text` for `audit`.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DumpTarget {
    /// Decorated patterns of the G2 crystal B(λ) with their Ĥ contributions.
    Patterns,
    /// The shifted character of V_θ.
    Character,
    /// The deformed numerator N_θ.
    Numerator,
    /// Decorated patterns of the A2 crystal B(λ), plus the A2 check for θ = λ - ρ.
    A2,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[arg(value_enum)]
    pub target: DumpTarget,
    #[arg(long)]
    pub l1: u32,
    #[arg(long)]
    pub l2: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Failure that ends a subcommand early.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Math(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<g2_tokuyama::Error> for Failure {
    fn from(e: g2_tokuyama::Error) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(EXIT_USAGE);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let result = match &cli.command {
        Command::Verify(args) => verify::run(args),
        Command::Gk(args) => gk::run(args),
        Command::Dump(args) => dump::run(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
