use gtype_algebra::{AlgebraError, DoubleBoundary};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("type has a double boundary ({0}); concretization undefined")]
    DoubleBoundary(DoubleBoundary),
    #[error(transparent)]
    Budget(#[from] AlgebraError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
