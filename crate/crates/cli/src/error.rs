use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(#[source] pecomb::Error),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<pecomb::Error> for CliError {
    fn from(e: pecomb::Error) -> Self {
        match e {
            pecomb::Error::NotAPartition(_) | pecomb::Error::MalformedFcs(_) => {
                CliError::Parse(e.to_string())
            }
            other => CliError::Domain(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Parse(_) => ExitCode::from(2),
            CliError::Domain(pecomb::Error::Falsified(_)) => ExitCode::from(1),
            CliError::Domain(_) | CliError::Cache(_) | CliError::Io(_) => ExitCode::from(3),
        }
    }
}
