use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or flag combinations; the message says how to fix them.
    #[error("{0}")]
    Usage(String),
    #[error("malformed JSON input: {0}")]
    Format(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] ninthvar_core::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> CliError {
        CliError::Format(msg.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError::Format(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
