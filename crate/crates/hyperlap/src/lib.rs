//! Command-line front end and file formats for `hyperlap-core`.
//!
//! Exit codes: 0 success, 2 invalid input or usage, 3 solver non-convergence,
//! 4 a certified claim failed.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
mod closed;
pub mod formats;

use std::fmt;
use std::path::PathBuf;

use hyperlap_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;
pub const EXIT_CONTRADICTED: i32 = 4;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Input(String),
    Io(String),
    NonConvergence(String),
    Contradicted(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Io(_) => EXIT_INPUT,
            CliError::NonConvergence(_) => EXIT_NONCONVERGENCE,
            CliError::Contradicted(_) => EXIT_CONTRADICTED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::NonConvergence(m) => write!(f, "no convergence: {m}"),
            CliError::Contradicted(m) => write!(f, "claim contradicted: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::MaxIterations { .. }
            | Error::NoSignChange { .. }
            | Error::NonPositiveIterate { .. }
            | Error::CertificationFailed { .. } => CliError::NonConvergence(msg),
            Error::ClaimContradicted { .. } => CliError::Contradicted(msg),
            _ => CliError::Input(msg),
        }
    }
}

/// Outcome of one command: exit code, text for the terminal and the files written.
#[derive(Debug, Clone, PartialEq)]
pub struct ExitReport {
    pub code: i32,
    pub summary: String,
    pub reports: Vec<PathBuf>,
}

impl ExitReport {
    fn from_error(e: &CliError) -> Self {
        ExitReport {
            code: e.exit_code(),
            summary: e.to_string(),
            reports: Vec::new(),
        }
    }
}
