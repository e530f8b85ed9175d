//! Abstract geometric types of geometric Markov partitions.
//!
//! A geometric type is the quadruple `(n, {h_i, v_i}, rho, eps)`: `n` rectangles,
//! rectangle `i` cut into `h_i` horizontal and `v_i` vertical sub-rectangles,
//! a bijection `rho` from horizontal labels `(i, j)` to vertical labels `(k, l)`
//! and a sign `eps(i, j)` recording whether the vertical direction is kept.
//! All indices are 1-based.

mod error;
mod format;
mod geometric;
mod label;
mod matrix;
mod validate;

pub use error::CoreError;
pub use format::{parse_geometric_type, parse_candidate, serialize};
pub use geometric::GeometricType;
pub use label::{sign_str, HLabel, Sign, VLabel};
pub use matrix::IncidenceMatrix;
pub use validate::{validate, Candidate, MapEntry, ValidationReport, Violation};
