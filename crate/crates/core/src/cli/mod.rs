//! Command-line front end. JSON reports go to stdout with `--json`; the
//! human-readable table always goes to stderr.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 usage or input
//! error.

mod commands;
mod report;
mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

pub use report::{ReportCheck, RunReport, TOL_AXIOM, TOL_CAR, TOL_EXACT, TOL_RECON};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_CAR_TOL: f64 = 1e-12;
pub const DEFAULT_AXIOM_TOL: f64 = 1e-8;
pub const DEFAULT_RECON_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "encdec",
    version,
    about = "Verify and decompose encodings between operator algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the anticommutation relations of a fermionic encoding.
    VerifyCar(VerifyCarArgs),
    /// Canonical form of an encoding read from a JSON file.
    Decompose(DecomposeArgs),
    /// Split the even fermionic algebra into its two parity blocks.
    EvenSplit(EvenSplitArgs),
    /// Decide unitary equivalence of two encodings.
    Compare(CompareArgs),
    /// Run the property suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Seed for every random sample (falls back to ENCDEC_SEED, then 0).
    #[arg(long, env = "ENCDEC_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Print the JSON report on stdout.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Encoding {
    Jw,
    Bk,
}

#[derive(Debug, Args)]
pub struct VerifyCarArgs {
    #[arg(long)]
    pub modes: usize,
    #[arg(long, value_enum, default_value_t = Encoding::Jw)]
    pub encoding: Encoding,
    #[arg(long, default_value_t = DEFAULT_CAR_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// RealLinearMap JSON file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_AXIOM_TOL)]
    pub axiom_tol: f64,
    #[arg(long, default_value_t = DEFAULT_RECON_TOL)]
    pub recon_tol: f64,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct EvenSplitArgs {
    #[arg(long)]
    pub modes: usize,
    #[arg(long, value_enum, default_value_t = Encoding::Jw)]
    pub encoding: Encoding,
    #[arg(long, default_value_t = DEFAULT_RECON_TOL)]
    pub recon_tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// `jw`, `bk` or a RealLinearMap JSON file.
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    /// Mode count for `jw`/`bk` operands.
    #[arg(long, default_value_t = 2)]
    pub modes: usize,
    #[arg(long, default_value_t = DEFAULT_RECON_TOL)]
    pub recon_tol: f64,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Random cases per property; 0 runs nothing.
    #[arg(long, default_value_t = 10)]
    pub cases: usize,
    /// Corrupt one round-trip case to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[command(flatten)]
    pub common: Common,
}

/// Failure while running a command.
#[derive(Debug)]
pub(crate) enum Outcome {
    Usage(String),
    Failed(String),
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::TooManyModes { .. }
            | Error::Io(_)
            | Error::Json(_)
            | Error::DimensionMismatch(_)
            | Error::SpecMismatch(_) => Outcome::Usage(e.to_string()),
            other => Outcome::Failed(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    execute(cli.command, stdout, stderr)
}

pub fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let start = Instant::now();
    let (json, outcome) = match &command {
        Command::VerifyCar(a) => (a.common.json, commands::verify_car(a)),
        Command::Decompose(a) => (a.common.json, commands::decompose(a)),
        Command::EvenSplit(a) => (a.common.json, commands::even_split(a)),
        Command::Compare(a) => (a.common.json, commands::compare(a)),
        Command::Selftest(a) => (a.common.json, selftest::selftest(a)),
    };
    let mut report = match outcome {
        Ok(r) => r,
        Err(Outcome::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Outcome::Failed(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_FAIL;
        }
    };
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    let _ = report.write_table(stderr);
    if let Some(f) = report.first_failure() {
        let _ = writeln!(stderr, "first failing check: {}", f.name);
    }
    if json {
        match serde_json::to_string_pretty(&report) {
            Ok(text) => {
                let _ = writeln!(stdout, "{text}");
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_FAIL;
            }
        }
    }
    if report.passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
