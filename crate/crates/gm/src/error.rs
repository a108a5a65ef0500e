use std::io;
use std::path::PathBuf;

use gm_core::GmError;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// Output could not be written.
    pub const FAILURE: i32 = 1;
    /// Invalid input: bad state, bad parameter, unreadable file.
    pub const VALIDATION: i32 = 2;
    /// A solver finished but flagged its result (non-convergence, or solvers
    /// disagreeing in `crosscheck`).
    pub const SOLVER_WARNING: i32 = 3;
    /// Unknown subcommand or flag.
    pub const USAGE: i32 = 64;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    State(#[from] GmError),

    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },

    #[error("invalid state file {}: {source}", path.display())]
    Parse { path: PathBuf, source: serde_json::Error },

    #[error("{0}")]
    Invalid(String),

    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },

    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),

    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::State(_) | CliError::Read { .. } | CliError::Parse { .. } | CliError::Invalid(_) => {
                exit::VALIDATION
            }
            CliError::Write { .. } | CliError::Csv(_) | CliError::Pool(_) => exit::FAILURE,
        }
    }
}
