//! Iteration of geometric types and the matrix-level predicates used by the
//! membership verdict.

mod double_boundary;
mod error;
mod mixing;
mod perron;
mod power;

pub use double_boundary::{double_boundaries, has_double_boundary, DoubleBoundary, Side};
pub use error::AlgebraError;
pub use mixing::{mixing_report, positive_exponent, MixingReport};
pub use perron::perron_root;
pub use power::{
    default_budget, power, power_with_budget, projected_alpha, step_words, PowerSeq, DEFAULT_BUDGET,
};
