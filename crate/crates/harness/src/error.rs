use thiserror::Error;

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] chibound_core::Error),

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Process exit codes.
pub mod exit {
    pub const PASS: u8 = 0;
    pub const CLAIM_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const CAP_EXCEEDED: u8 = 3;
    pub const IO_OR_PARSE: u8 = 4;
}

impl HarnessError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        HarnessError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        use chibound_core::Error as E;
        match self {
            HarnessError::Core(E::Cap { .. } | E::Budget { .. }) => exit::CAP_EXCEEDED,
            HarnessError::Core(E::Param(_)) | HarnessError::UnknownClaim(_) | HarnessError::Usage(_) => exit::USAGE,
            HarnessError::Core(E::Parse { .. } | E::Validation(_) | E::Input(_)) | HarnessError::Io { .. } => {
                exit::IO_OR_PARSE
            }
        }
    }
}
