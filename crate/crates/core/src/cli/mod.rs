//! Command-line front end. The binary is a thin wrapper around [`run`].

mod commands;
mod spec;
mod verify;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use commands::{
    cmd_ccs, cmd_classical, cmd_discord, cmd_sweep, sweep_rows, CcsReport, ClassicalReport, DiscordReport,
    SweepRow, SWEEP_COLUMNS,
};
pub use spec::{
    MatrixSpec, ResolvedState, StateKind, StateSpec, SweepFamily, SweepMethod, SweepSpec, XStateSpec,
    X_PATTERN_TOL,
};
pub use verify::{cmd_verify, SuiteReport, VerifyOptions, VerifyReport};

use crate::discord::GridConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Invalid { kind: String, message: String },
    Io(String),
    VerifyFailed(String),
}

impl CliError {
    pub(crate) fn invalid(kind: &str, message: String) -> Self {
        CliError::Invalid { kind: kind.to_string(), message }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid { .. } => EXIT_INVALID_INPUT,
            CliError::Io(_) => EXIT_IO,
            CliError::VerifyFailed(_) => EXIT_VERIFY_FAILED,
        }
    }

    /// Machine-readable form written to standard error.
    pub fn to_json(&self) -> serde_json::Value {
        let (kind, message) = match self {
            CliError::Invalid { kind, message } => (kind.as_str(), message.as_str()),
            CliError::Io(m) => ("io", m.as_str()),
            CliError::VerifyFailed(m) => ("verification_failed", m.as_str()),
        };
        serde_json::json!({ "error": { "kind": kind, "message": message, "exit_code": self.exit_code() } })
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid { kind, message } => write!(f, "{kind}: {message}"),
            CliError::Io(m) => write!(f, "io: {m}"),
            CliError::VerifyFailed(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Invalid { kind: e.kind().to_string(), message: e.to_string() }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bures-discord", version, about = "Bures geometric discord of two-qubit states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GridArgs {
    #[arg(long = "grid-theta", default_value_t = 64)]
    pub grid_theta: usize,
    #[arg(long = "grid-psi", default_value_t = 128)]
    pub grid_psi: usize,
    #[arg(long = "refine-iters", default_value_t = 200)]
    pub refine_iters: usize,
}

impl GridArgs {
    pub fn config(&self) -> Result<GridConfig, CliError> {
        let grid = GridConfig {
            n_theta: self.grid_theta,
            n_psi: self.grid_psi,
            refine_iters: self.refine_iters,
            ..GridConfig::default()
        };
        grid.validate()?;
        Ok(grid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscordMethod {
    Auto,
    Bruteforce,
    Closed,
    Candidates,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bures discord of a state.
    Discord {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = DiscordMethod::Auto)]
        method: DiscordMethod,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closest A-classical state.
    Ccs {
        #[arg(long, default_value = "-")]
        input: String,
        /// Polar angle of a fixed measurement direction (requires --psi).
        #[arg(long, requires = "psi")]
        theta: Option<f64>,
        #[arg(long, requires = "theta")]
        psi: Option<f64>,
        /// Member of the explicit family for symmetric states.
        #[arg(long, conflicts_with = "theta")]
        r: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate a one-parameter family as CSV.
    Sweep {
        #[arg(long, default_value = "-")]
        input: String,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded randomized consistency checks.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        samples: usize,
        /// Replace every suite tolerance.
        #[arg(long)]
        tolerance: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Geometric classical correlation of a symmetric X-state.
    Classical {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn read_input(input: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if input == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(input).map_err(|e| CliError::Io(format!("{input}: {e}")))?;
    }
    Ok(text)
}

pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::invalid("invalid_json", e.to_string()))
}

fn write_output(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

/// Runs one parsed command. `Ok` carries the exit code (non-zero only for a
/// failed verification).
pub fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Discord { input, method, grid, out } => {
            let spec: StateSpec = parse_json(&read_input(&input)?)?;
            let report = cmd_discord(&spec, method, &grid.config()?)?;
            write_output(out.as_deref(), &to_json(&report))?;
        }
        Command::Ccs { input, theta, psi, r, grid, out } => {
            let spec: StateSpec = parse_json(&read_input(&input)?)?;
            let direction = theta.zip(psi);
            let report = cmd_ccs(&spec, direction, r, &grid.config()?)?;
            write_output(out.as_deref(), &to_json(&report))?;
        }
        Command::Sweep { input, grid, out } => {
            let spec: SweepSpec = parse_json(&read_input(&input)?)?;
            let csv = cmd_sweep(&spec, &grid.config()?)?;
            write_output(out.as_deref(), &csv)?;
        }
        Command::Verify { seed, samples, tolerance, grid, out } => {
            let options = VerifyOptions { seed, samples, tolerance, grid: grid.config()? };
            let report = cmd_verify(&options)?;
            for line in report.text_lines() {
                eprintln!("{line}");
            }
            write_output(out.as_deref(), &to_json(&report))?;
            if !report.passed {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Classical { input, out } => {
            let spec: StateSpec = parse_json(&read_input(&input)?)?;
            let report = cmd_classical(&spec)?;
            write_output(out.as_deref(), &to_json(&report))?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses arguments, executes, reports errors as JSON on standard error and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return EXIT_OK;
        }
        Err(e) => {
            let err = CliError::invalid("usage", e.to_string());
            eprintln!("{}", err.to_json());
            return EXIT_INVALID_INPUT;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}
