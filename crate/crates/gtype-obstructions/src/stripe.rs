//! Ribbons of a type read off its labels.
//!
//! The stripe between `H^i_j` and `H^i_{j+1}` becomes a ribbon with one end
//! on the image of the top of `H^i_j` and the other on the image of the bottom
//! of `H^i_{j+1}`. The top of `H^i_j` lands on side `eps(i,j)` of `R_k`,
//! `(k,l) = rho(i,j)`, along column `l`; the bottom of `H^i_{j+1}` lands on side
//! `-eps(i,j+1)` of its target rectangle.

use std::fmt;

use gtype_core::{sign_str, GeometricType, HLabel, Sign};

/// A horizontal side of a rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub rect: usize,
    pub side: Sign,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rect, sign_str(self.side))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct End {
    pub comp: Component,
    /// Column index along the side.
    pub col: usize,
    pub orientation: Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stripe {
    pub label: HLabel,
    pub ends: [End; 2],
}

pub fn stripe(t: &GeometricType, i: usize, j: usize) -> Stripe {
    let (lo, hi) = (t.rho(i, j), t.rho(i, j + 1));
    let (e0, e1) = (t.eps(i, j), t.eps(i, j + 1));
    Stripe {
        label: HLabel::new(i, j),
        ends: [
            End { comp: Component { rect: lo.k, side: e0 }, col: lo.l, orientation: e0 },
            End { comp: Component { rect: hi.k, side: -e1 }, col: hi.l, orientation: e1 },
        ],
    }
}

pub fn stripes(t: &GeometricType) -> Vec<Stripe> {
    let mut out = Vec::with_capacity(t.alpha() - t.n());
    for i in 1..=t.n() {
        for j in 1..t.h(i) {
            out.push(stripe(t, i, j));
        }
    }
    out
}

/// `(i, j)` with `j < h_i`.
pub fn is_stripe_label(t: &GeometricType, l: HLabel) -> bool {
    (1..=t.n()).contains(&l.i) && l.j >= 1 && l.j < t.h(l.i)
}
