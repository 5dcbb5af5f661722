use std::fmt;
use std::process::ExitCode;

use alghyper::{AlgebraError, ConstructionError, MatroidError, NumTheoryError};

#[derive(Debug)]
pub enum CliError {
    /// Exit 1.
    Failure(String),
    /// Exit 2.
    Usage(String),
    /// Exit 3.
    Incompatible(String),
    /// Exit 4.
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Incompatible(_) => 3,
            CliError::Guard(_) => 4,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Failure(m) | CliError::Usage(m) | CliError::Incompatible(m) | CliError::Guard(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::TooLarge { .. } => CliError::Guard(e.to_string()),
            AlgebraError::NotAGroup(_) => CliError::Incompatible(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::NotAGroup(_) | ConstructionError::NotAbelian => CliError::Incompatible(e.to_string()),
            ConstructionError::TooLarge { .. } => CliError::Guard(e.to_string()),
            ConstructionError::Disagreement(_) => CliError::Failure(e.to_string()),
        }
    }
}

impl From<NumTheoryError> for CliError {
    fn from(e: NumTheoryError) -> Self {
        match e {
            NumTheoryError::InputTooLarge { .. } | NumTheoryError::TooManyChains { .. } => {
                CliError::Guard(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<MatroidError> for CliError {
    fn from(e: MatroidError) -> Self {
        match e {
            MatroidError::Algebra(a) => a.into(),
            MatroidError::Construction(c) => c.into(),
            MatroidError::FamilyTooLarge(_) | MatroidError::GroundTooLarge(_) => CliError::Guard(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}
