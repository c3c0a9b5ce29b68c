use std::path::PathBuf;

use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const CAP_EXCEEDED: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("{0}")]
    Input(String),

    #[error("bundled data corrupt: {0}")]
    DataCorrupt(String),

    #[error(transparent)]
    Core(#[from] cosgraph_core::Error),
}

impl CliError {
    pub fn format(line: usize, message: impl Into<String>) -> Self {
        CliError::Format {
            line,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_cap_exceeded() => exit::CAP_EXCEEDED,
            _ => exit::INPUT_ERROR,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
