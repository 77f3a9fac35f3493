use std::fmt;
use std::path::PathBuf;

use grouprank::Error;

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::CheckFailed
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// 1: a guarantee failed during the run; 2: malformed or inadmissible input; 3: budget guard.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Budget(_)) => 3,
            CliError::Core(Error::ZeroDivisor(_)) => 1,
            CliError::Core(_) | CliError::Io { .. } => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
