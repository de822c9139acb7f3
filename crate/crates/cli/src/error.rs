use qgf_core::{GateError, GeneratorError, GroupError, ParityError, PermError, SynthError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INFEASIBLE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Gate(#[from] GateError),
    #[error(transparent)]
    Generators(#[from] GeneratorError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("{0}")]
    CapExceeded(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CapExceeded(_) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> CliError {
        CliError::Io {
            context: context.into(),
            source,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> CliError {
        match e {
            GroupError::CapExceeded { .. } => {
                CliError::CapExceeded(format!("{e}; raise --enum-cap"))
            }
            GroupError::Perm(p) => p.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<SynthError> for CliError {
    fn from(e: SynthError) -> CliError {
        match e {
            SynthError::CapExceeded { .. } => {
                CliError::CapExceeded(format!("{e}; raise --enum-cap"))
            }
            SynthError::Perm(p) => p.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ParityError> for CliError {
    fn from(e: ParityError) -> CliError {
        match e {
            ParityError::Gate(g) => g.into(),
            ParityError::Perm(p) => p.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}
