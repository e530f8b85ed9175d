//! Affine concretization of a geometric type with exact rational coordinates.
//!
//! Rectangle `R_i` is the unit square; `H^i_j` is the band
//! `[0,1] x [(j-1)/h_i, j/h_i]` and `V^k_l` the band `[(l-1)/v_k, l/v_k] x [0,1]`.
//! The map on `H^i_j` is the diagonal affine bijection onto `V^{rho(i,j)}`,
//! flipping both axes when `eps(i,j) = -1`. Everything here is computed
//! from coordinates, independently of the combinatorial modules, and serves as
//! their oracle.

mod affine;
mod error;
mod geometric;
mod iterate;
mod realizer;
mod ribbon;

pub use affine::{affine_concretization, Affine, AffineRealization, BandMap, Q};
pub use error::OracleError;
pub use geometric::{geometric_impasse, geometric_obstructions, GeoReport, GeoSeparatrix, GeoWitness, Half};
pub use iterate::iterate_type;
pub use realizer::{realizer_euler, RealizerEuler};
pub use ribbon::{fixed_sides, ribbons, FixedSide, Ribbon, RibbonEnd};
