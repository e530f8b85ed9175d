use gtype_boundary::BoundaryError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("not in the pseudo-Anosov class: {0}")]
    NotInClass(String),
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
    #[error("prong computation inconsistent: {0}")]
    Inconsistent(String),
}
