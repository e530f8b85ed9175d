//! Sector classes of periodic boundary codes, prong counts, and the Euler
//! characteristic and genus of the surface carrying a type.
//!
//! Prongs are counted by stable germs; half the sum of the membership weights
//! `a` is kept as a cross-check, and any disagreement is reported.

mod classes;
mod error;
mod germ;

pub use classes::{
    euler_characteristic, genus, prong_spectrum, sector_classes, sector_classes_unchecked, surface_report,
    surface_report_unchecked, Orbit, SectorClass, SurfaceReport,
};
pub use error::SurfaceError;
pub use germ::{germs, Germ, GermEnd, Half};
