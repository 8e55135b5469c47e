use double_eta::EtaError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eta(#[from] EtaError),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for computations that went wrong, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Eta(EtaError::Internal(_)) | CliError::Eta(EtaError::NonIntegral) => 1,
            _ => 2,
        }
    }
}
