use std::path::{Path, PathBuf};

/// Failures that end a command, each with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => crate::EXIT_USAGE,
            CliError::Io { .. } => crate::EXIT_IO,
        }
    }
}

impl From<lrq_core::Error> for CliError {
    fn from(e: lrq_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
