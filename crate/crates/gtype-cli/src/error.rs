use thiserror::Error;

use gtype_algebra::AlgebraError;
use gtype_boundary::BoundaryError;
use gtype_core::CoreError;
use gtype_obstructions::ObstructionError;
use gtype_oracle::OracleError;
use gtype_surface::SurfaceError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Tripwire(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Tripwire(_) => 5,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Syntax { .. } => CliError::Parse(e.to_string()),
            CoreError::Invalid(_) => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Budget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<ObstructionError> for CliError {
    fn from(e: ObstructionError) -> Self {
        match e {
            ObstructionError::Algebra(a) => a.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Budget(a) => a.into(),
            OracleError::DoubleBoundary(_) => CliError::Invalid(e.to_string()),
            OracleError::Inconsistent(_) => CliError::Tripwire(e.to_string()),
        }
    }
}

impl From<BoundaryError> for CliError {
    fn from(e: BoundaryError) -> Self {
        match e {
            BoundaryError::Parse(_) => CliError::Parse(e.to_string()),
            BoundaryError::SearchLimit(_) => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::Boundary(b) => b.into(),
            SurfaceError::NotInClass(_) => CliError::Invalid(e.to_string()),
            SurfaceError::Inconsistent(_) => CliError::Tripwire(e.to_string()),
        }
    }
}
