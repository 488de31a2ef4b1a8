use std::path::PathBuf;

use darkex_core::ModelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("cannot read config {path}: {source}")]
    ReadConfig { path: PathBuf, source: std::io::Error },

    #[error("cannot parse config {path}: {source}")]
    ParseConfig {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Model(#[from] ModelError),
}

impl CliError {
    /// 2 for configuration problems, 3 for numerical-domain failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_)
            | CliError::ReadConfig { .. }
            | CliError::ParseConfig { .. }
            | CliError::Write { .. }
            | CliError::Model(ModelError::InvalidConfig(_)) => 2,
            CliError::Model(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Config("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::Model(ModelError::InvalidConfig("x".into())).exit_code(),
            2
        );
        assert_eq!(CliError::Model(ModelError::Domain("x".into())).exit_code(), 3);
        assert_eq!(CliError::Model(ModelError::Pole { energy: 1.0 }).exit_code(), 3);
    }
}
