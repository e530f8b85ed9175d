use gtype_core::{GeometricType, HLabel, Sign};
use num_traits::{One, Zero};

use crate::affine::{affine_concretization, AffineRealization, Q};
use crate::error::OracleError;

/// One attaching arc of a ribbon: the interval `[x0, x1]` on the upper
/// (`side = +1`) or lower (`side = -1`) edge of square `rect`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonEnd {
    pub rect: usize,
    pub side: Sign,
    pub x0: Q,
    pub x1: Q,
    /// Sign of the vertical derivative of the map that carried this arc here.
    pub orientation: Sign,
}

impl RibbonEnd {
    pub fn component(&self) -> (usize, Sign) {
        (self.rect, self.side)
    }
}

/// `phi^g` of the stripe between `H^i_j` and `H^i_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    pub generation: usize,
    /// `(i, j)`; the stripe lies above `H^i_j`.
    pub stripe: HLabel,
    /// `ends[0]` comes from the top of `H^i_j`, `ends[1]` from the bottom of `H^i_{j+1}`.
    pub ends: [RibbonEnd; 2],
}

impl Ribbon {
    pub fn id(&self) -> (usize, HLabel) {
        (self.generation, self.stripe)
    }
}

/// Pushes an arc lying on a horizontal side of a square one step forward.
pub(crate) fn advance(r: &AffineRealization, e: &RibbonEnd) -> RibbonEnd {
    let j = if e.side < 0 { 1 } else { r.h(e.rect) };
    let y = if e.side < 0 { Q::zero() } else { Q::one() };
    let m = r.map(e.rect, j);
    image(m, e.orientation, &y, &e.x0, &e.x1)
}

fn image(m: &crate::affine::BandMap, orientation: Sign, y: &Q, x0: &Q, x1: &Q) -> RibbonEnd {
    let y1 = m.f.y(y);
    debug_assert!(y1.is_zero() || y1.is_one());
    let (a, b) = (m.f.x(x0), m.f.x(x1));
    let (x0, x1) = if a <= b { (a, b) } else { (b, a) };
    RibbonEnd {
        rect: m.target.k,
        side: if y1.is_one() { 1 } else { -1 },
        x0,
        x1,
        orientation: orientation * m.sign,
    }
}

pub(crate) fn first_generation(r: &AffineRealization, i: usize, j: usize) -> [RibbonEnd; 2] {
    let (_, y) = r.h_band(i, j);
    let (z, o) = (Q::zero(), Q::one());
    [image(r.map(i, j), 1, &y, &z, &o), image(r.map(i, j + 1), 1, &y, &z, &o)]
}

pub(crate) fn ribbons_of(r: &AffineRealization, m: usize) -> Vec<Ribbon> {
    let mut out = Vec::new();
    let mut current: Vec<Ribbon> = Vec::new();
    for i in 1..=r.n() {
        for j in 1..r.h(i) {
            current.push(Ribbon {
                generation: 1,
                stripe: HLabel::new(i, j),
                ends: first_generation(r, i, j),
            });
        }
    }
    for g in 1..=m {
        if g > 1 {
            for rb in current.iter_mut() {
                rb.generation = g;
                rb.ends = [advance(r, &rb.ends[0]), advance(r, &rb.ends[1])];
            }
        }
        out.extend(current.iter().cloned());
    }
    out
}

/// All ribbons of generations `1..=m`, generation-major, stripes in label order.
pub fn ribbons(t: &GeometricType, m: usize) -> Result<Vec<Ribbon>, OracleError> {
    let r = affine_concretization(t)?;
    Ok(ribbons_of(&r, m))
}

/// A horizontal side sent into itself by `phi^m` with preserved orientation;
/// `[x0, x1]` is the image of the whole side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSide {
    pub rect: usize,
    pub side: Sign,
    pub x0: Q,
    pub x1: Q,
}

pub(crate) fn fixed_sides_of(r: &AffineRealization, m: usize) -> Vec<FixedSide> {
    let mut out = Vec::new();
    for rect in 1..=r.n() {
        for side in [-1i8, 1] {
            let start = RibbonEnd { rect, side, x0: Q::zero(), x1: Q::one(), orientation: 1 };
            let mut e = start.clone();
            for _ in 0..m {
                e = advance(r, &e);
            }
            if m > 0 && e.component() == start.component() && e.orientation == 1 {
                out.push(FixedSide { rect, side, x0: e.x0, x1: e.x1 });
            }
        }
    }
    out
}

pub fn fixed_sides(t: &GeometricType, m: usize) -> Result<Vec<FixedSide>, OracleError> {
    let r = affine_concretization(t)?;
    Ok(fixed_sides_of(&r, m))
}
