use std::path::PathBuf;

use toricnf_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const NOT_POSITIVE: i32 = 4;
    pub const INVARIANT: i32 = 5;
    pub const CORPUS: i32 = 6;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    NotPositive(CoreError),
    #[error("{0}")]
    Invariant(CoreError),
    #[error("{0}")]
    Core(CoreError),
    #[error("{failed} of {total} fixtures failed")]
    CorpusFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Core(_) => exit::FAILURE,
            CliError::Usage(_) => exit::USAGE,
            CliError::Parse(_) => exit::PARSE,
            CliError::NotPositive(_) => exit::NOT_POSITIVE,
            CliError::Invariant(_) => exit::INVARIANT,
            CliError::CorpusFailed { .. } => exit::CORPUS,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotPositive => CliError::NotPositive(e),
            CoreError::Parse(s) => CliError::Parse(s),
            CoreError::Invariant(_) | CoreError::FacetMismatch { .. } => CliError::Invariant(e),
            e => CliError::Core(e),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
