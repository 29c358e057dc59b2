//! The `valharm` command line: decomposition queries on the core crate,
//! verification campaigns on the verify crate, and the acceptance selftest.
//!
//! [`run`] is the whole program minus process exit, so tests drive it in
//! process.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

mod args;
pub mod commands;
pub mod selftest;

use args::{Cli, Command};

/// Exit status for command-line misuse.
pub const EXIT_USAGE: i32 = 64;
/// Exit status for a theorem or consistency violation.
pub const EXIT_VIOLATION: i32 = 2;
/// Exit status for I/O and other internal failures.
pub const EXIT_INTERNAL: i32 = 1;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Violation(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Violation(_) => EXIT_VIOLATION,
            CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Violation(m) => write!(f, "violation: {m}"),
            CliError::Io(m) => write!(f, "error: {m}"),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Decompose { n, i, cap, output } => commands::decompose(out, n, i, cap, output.format),
        Command::Multiplicity { n, i, lambda, method, output } => {
            commands::multiplicity(out, n, i, &lambda, method, output.format)
        }
        Command::Branch { n, lambda, output } => commands::branch(out, n, &lambda, output.format),
        Command::TensorDim { n, i, gamma, output } => commands::tensor_dim(out, n, i, &gamma, output.format),
        Command::Classify { n, i, group, output } => commands::classify(out, n, i, group, output.format),
        Command::Verify { config, out: report, csv, seed, trials } => {
            commands::verify(out, err, &config, report.as_deref(), csv.as_deref(), seed, trials)
        }
        Command::Selftest { quick, tamper } => {
            let params = if quick { selftest::Params::quick() } else { selftest::Params::default() };
            let outcomes = selftest::run_all(&params, tamper);
            for o in &outcomes {
                writeln!(out, "{o}").map_err(|e| CliError::Io(e.to_string()))?;
            }
            Ok(if outcomes.iter().all(|o| o.passed) { 0 } else { EXIT_VIOLATION })
        }
    }
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/weights.md")]
    mod weights {}
    #[doc = include_str!("../../../book/src/valuations.md")]
    mod valuations {}
    #[doc = include_str!("../../../book/src/branching.md")]
    mod branching {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/projection.md")]
    mod projection {}
    #[doc = include_str!("../../../book/src/enclosures.md")]
    mod enclosures {}
    #[doc = include_str!("../../../book/src/campaigns.md")]
    mod campaigns {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
