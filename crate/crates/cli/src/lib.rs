//! The `hessdeform` command line: every core operation as a subcommand with a
//! text or JSON rendering, plus the `verify all` batch suite.
//!
//! Exit codes: 0 ok, 2 theorem violation or unresolved, 64 usage, 70 resource cap.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use hessdeform_core::symcoh::DEFAULT_CAP;
use hessdeform_core::Error;
use serde_json::{Map, Value};

pub mod args;
mod commands;
pub mod envelope;
pub mod expected;
pub mod json;
mod table;
pub mod verify;

use args::Cli;
use envelope::{Report, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_RESOURCE: i32 = 70;

pub const CAP_ENV: &str = "HESSDEFORM_CAP";

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Outcome {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

/// Effective monomial cap: `--cap`, then `HESSDEFORM_CAP`, then the default.
pub fn resolve_cap(flag: Option<u128>) -> Result<u128, String> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{CAP_ENV} must be a nonnegative integer, got '{v}'")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let code = if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { EXIT_USAGE } else { EXIT_OK };
                    Outcome { code, stdout: e.to_string(), stderr: String::new() }
                }
                _ => Outcome::usage(e.to_string()),
            };
        }
    };
    let cap = match resolve_cap(cli.cap) {
        Ok(c) => c,
        Err(msg) => return Outcome::usage(format!("error: {msg}\n")),
    };
    let json = cli.json;
    match commands::dispatch(&cli.command, cap) {
        Ok(report) => emit(&report, json),
        Err(e) => from_error(e, &cli, json),
    }
}

fn emit(report: &Report, json: bool) -> Outcome {
    let stdout = if json { report.render_json() } else { report.render_text() };
    Outcome { code: report.status.exit_code(), stdout, stderr: String::new() }
}

fn from_error(e: Error, cli: &Cli, json: bool) -> Outcome {
    let (status, msg) = match e {
        Error::InvalidInput(m) | Error::Unsupported(m) => return Outcome::usage(format!("error: {m}\n")),
        Error::Resource { estimate, cap } => {
            return Outcome {
                code: EXIT_RESOURCE,
                stdout: String::new(),
                stderr: format!("error: {estimate} monomials exceed the cap {cap}; raise --cap or {CAP_ENV}\n"),
            }
        }
        Error::Contradiction(m) => (Status::TheoremViolation, m),
        Error::Unresolved(m) => (Status::Unresolved, m),
    };
    let mut r = Report::new(&commands::name(&cli.command), Map::new());
    r.status = status;
    r.result = Value::Object([("error".to_string(), Value::String(msg.clone()))].into_iter().collect());
    r.text = format!("error: {msg}\n");
    emit(&r, json)
}
