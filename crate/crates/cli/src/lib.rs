//! Library half of the `lagrass` command-line tool: command
//! implementations, report types, and matrix interchange formats.

pub mod commands;
pub mod io;
pub mod report;

use thiserror::Error as ThisError;

/// CLI failure with its process exit code: 2 bad arguments, 3 I/O,
/// 4 resource guard, 1 failed verification.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum CliError {
    #[error("{0}")]
    BadArgument(String),

    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    ResourceGuard(String),

    #[error("{0}")]
    VerificationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::VerificationFailed(_) => 1,
            Self::BadArgument(_) => 2,
            Self::Io(_) => 3,
            Self::ResourceGuard(_) => 4,
        }
    }
}

impl From<lagrass::Error> for CliError {
    fn from(e: lagrass::Error) -> Self {
        match e {
            lagrass::Error::LimitExceeded { .. } => Self::ResourceGuard(e.to_string()),
            _ => Self::BadArgument(e.to_string()),
        }
    }
}
