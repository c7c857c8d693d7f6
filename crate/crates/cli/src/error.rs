use qhydro::Error;
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;

impl CliError {
    /// 1 for rejected input, 2 for failures during the computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => EXIT_VALIDATION,
            CliError::Core(e) => match e {
                Error::InvalidInput(_) | Error::InvalidQuantumNumbers(_) | Error::NonIntegerMu { .. } | Error::OutOfRegime(_) | Error::IntegerB { .. } | Error::ParameterPole(_) => {
                    EXIT_VALIDATION
                }
                _ => EXIT_NUMERICAL,
            },
        }
    }

    /// Short machine-readable kind for reports.
    pub fn kind(&self) -> String {
        match self {
            CliError::Config(_) => "config".into(),
            CliError::Io(_) => "io".into(),
            CliError::Core(e) => format!("{e:?}").split(|c: char| !c.is_alphanumeric()).next().unwrap_or("error").to_string(),
        }
    }
}
