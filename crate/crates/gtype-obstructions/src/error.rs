use gtype_algebra::{AlgebraError, DoubleBoundary};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("scan refused: double boundary ({0})")]
    DoubleBoundary(DoubleBoundary),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad certificate: {0}")]
pub struct CertificateError(pub String);
