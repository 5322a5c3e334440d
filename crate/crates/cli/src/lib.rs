//! The `fences` command line: argument parsing, dispatch and rendering.
//!
//! [`run`] never touches the process streams, so tests can drive it directly.

mod args;
mod commands;
mod report;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use fences::Error;

pub use args::{Cli, Format};
pub use report::Report;

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_CONSISTENCY: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_PARSE: u8 = 65;
pub const EXIT_INTERNAL: u8 = 70;
pub const EXIT_IO: u8 = 74;

/// Failures of the front end itself, next to library errors.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) => match e {
                Error::Domain(_)
                | Error::Shape(_)
                | Error::Range(_)
                | Error::Capacity(_)
                | Error::Unsupported(_) => EXIT_DOMAIN,
                Error::Consistency(_) => EXIT_CONSISTENCY,
                Error::Parse(_) => EXIT_PARSE,
                Error::Internal(_) => EXIT_INTERNAL,
            },
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ok(text),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match commands::dispatch(&cli).and_then(|r| r.render(cli.format)) {
        Ok(text) => ok(text),
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}
