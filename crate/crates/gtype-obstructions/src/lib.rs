//! Combinatorial obstructions to finite genus, the impasse property, power
//! scans and the pseudo-Anosov class verdict.

mod conditions;
mod error;
mod scan;
mod stripe;
mod witness;

pub use conditions::{
    find_impasse, find_type1, find_type2, find_type3, fixed_column, holds_impasse, holds_type1, holds_type2,
    holds_type3, separatrix_exists, Half, Separatrix,
};
pub use error::{CertificateError, ObstructionError};
pub use scan::{
    condition_type1, condition_type2, condition_type3, find_condition, impasse_property, is_pseudo_anosov_class,
    pa_verdict, scan_obstructions, scan_obstructions_with_budget, ObstructionReport, PAVerdict, Reason,
    ScanBounds, Status, VerdictOptions,
};
pub use stripe::{stripes, Component, End, Stripe};
pub use witness::{ConditionWitness, Indices, Kind};
