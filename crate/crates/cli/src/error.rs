use std::fmt;
use std::process::ExitCode;

use kappa::harness::ConvergenceError;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or a violated precondition. Exit 2.
    Usage(String),
    /// A solver or quadrature failed to converge. Exit 3.
    Numerical(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Numerical(_) => ExitCode::from(3),
            CliError::Io(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Numerical(msg) => write!(f, "numerical failure: {msg}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<kappa::Error> for CliError {
    fn from(e: kappa::Error) -> Self {
        match e {
            kappa::Error::Domain(_) => CliError::Usage(e.to_string()),
            kappa::Error::Convergence { .. } => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<ConvergenceError> for CliError {
    fn from(e: ConvergenceError) -> Self {
        match e {
            ConvergenceError::Solver(inner) => inner.into(),
            ConvergenceError::Floor(_) => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
