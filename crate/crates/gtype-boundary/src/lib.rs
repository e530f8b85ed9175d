//! Boundary labels, boundary codes, and the identifications between
//! eventually periodic codes that describe one surface point.
//!
//! The stable side works on `T`; the unstable side runs the same code on
//! `T^{-1}` with codes read backwards.

mod code;
mod error;
mod label;
mod leaves;
mod relation;
mod table;

pub use code::{Code, Tail};
pub use error::BoundaryError;
pub use label::{gamma, labels, orbits, upsilon, BoundaryLabel, Orbits};
pub use leaves::{stripe_labels, stripe_orbit, Leaves, Pairing};
pub use relation::{s_related, stratum, t_related, u_related, Boundary, Chain, Leaf, Step, Stratum, SEARCH_LIMIT};
pub use table::{boundary_code_table, check_preconditions, has_corner_property, BoundaryCodeTable};
