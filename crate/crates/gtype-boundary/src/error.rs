use gtype_algebra::DoubleBoundary;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundaryError {
    #[error("incidence matrix is not binary")]
    NotBinary,
    #[error("double boundary ({0})")]
    DoubleBoundary(DoubleBoundary),
    #[error("bad code literal: {0}")]
    Parse(String),
    #[error("code {code} is not admissible at position {position}")]
    Inadmissible { code: String, position: i64 },
    #[error("code {code} is not in the {expected} stratum")]
    Stratum { code: String, expected: &'static str },
    #[error("relation search exceeded {0} codes")]
    SearchLimit(usize),
}
