//! Expression language, verification suites and report emission for the
//! `qframes` command-line tool.

pub mod ast;
pub mod commands;
pub mod config;
pub mod eval;
pub mod parse;
pub mod suites;

use thiserror::Error;

use qframes::geom::GeomError;
use qframes::ncalg::NcError;
use qframes::spinops::SpinError;
use qframes::suq2::SystemError;

pub use commands::{run, Command, Outcome};
pub use config::{Format, RunConfig};
pub use parse::{parse, parse_for, ParseError, Shape};

/// Exit status for a run whose checks did not all pass.
pub const EXIT_ASSERTION: i32 = 1;
/// Exit status for bad flags, arguments or expressions.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for an inconsistent rule system or I/O failure.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Rewrite(#[from] NcError),
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Spin(#[from] SpinError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Geom(_) => EXIT_USAGE,
            CliError::System(SystemError::UnknownCopy { .. } | SystemError::MissingRotation)
            | CliError::Spin(SpinError::System(SystemError::UnknownCopy { .. } | SystemError::MissingRotation))
            | CliError::Spin(SpinError::SameApparatus) => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        }
    }
}
