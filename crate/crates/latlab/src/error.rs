use thiserror::Error;

/// Failures that end a command, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Construction(String),
    #[error("output error: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Construction(_) | CliError::Output(_) => 3,
        }
    }
}

impl From<latlab_core::Error> for CliError {
    fn from(e: latlab_core::Error) -> Self {
        use latlab_core::Error as E;
        match e {
            E::Parse(_) | E::InvalidParameter(_) | E::NoClosedForm(_) | E::OutsideTheorem(_) | E::BudgetExceeded { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Construction(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
