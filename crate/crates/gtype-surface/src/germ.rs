//! Stable germs at periodic boundary points.
//!
//! The stripe between `H^i_j` and `H^i_{j+1}` is a stable interval whose image
//! lies on two boundary sides at once. Iterated until both sides are periodic,
//! it sits on a separatrix of the periodic point of each side, on one side of
//! it. Such a germ is named by the two codes it separates together with the
//! half of each side it runs along.
//!
//! A code on the stable boundary only stands for the two sectors on one side
//! of a stable side, split by an unstable separatrix through the interior of
//! the rectangle; that separatrix is an interior unstable germ of the code.

use std::collections::BTreeSet;
use std::fmt;

use gtype_boundary::{gamma, stripe_labels, BoundaryLabel, Code, Leaves};
use gtype_core::GeometricType;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::SurfaceError;

type Q = BigRational;

/// Which part of a side, cut at its periodic point, a germ runs along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    Left,
    Right,
}

impl Half {
    fn flip(self) -> Half {
        match self {
            Half::Left => Half::Right,
            Half::Right => Half::Left,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GermEnd {
    pub code: Code,
    pub label: BoundaryLabel,
    pub half: Half,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Germ {
    /// Along the boundary; ends sorted, so a germ has one spelling.
    Boundary { ends: [GermEnd; 2] },
    /// Through the interior of the rectangle holding both sectors of `code`.
    Interior { code: Code },
}

impl Germ {
    /// The two codes it separates.
    pub fn codes(&self) -> [&Code; 2] {
        match self {
            Germ::Boundary { ends } => [&ends[0].code, &ends[1].code],
            Germ::Interior { code } => [code, code],
        }
    }

    pub fn is_self_paired(&self) -> bool {
        let [a, b] = self.codes();
        a == b
    }
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = |x: Half| if x == Half::Left { "L" } else { "R" };
        match self {
            Germ::Boundary { ends: [a, b] } => {
                write!(f, "{} {}{} ~ {} {}{}", a.code, a.label, h(a.half), b.code, b.label, h(b.half))
            }
            Germ::Interior { code } => write!(f, "{code} interior"),
        }
    }
}

fn q(n: usize, d: usize) -> Q {
    Q::new((n as i64).into(), (d as i64).into())
}

/// `x -> a x + b` taking the top or bottom of `H^i_j` onto its image side.
fn band_map(t: &GeometricType, i: usize, j: usize) -> (Q, Q) {
    let to = t.rho(i, j);
    let v = t.v(to.k);
    if t.eps(i, j) > 0 {
        (q(1, v), q(to.l - 1, v))
    } else {
        (-q(1, v), q(to.l, v))
    }
}

fn side_map(t: &GeometricType, c: BoundaryLabel) -> (Q, Q) {
    band_map(t, c.rect, t.theta(c.rect, c.side))
}

fn apply(m: &(Q, Q), x: &Q) -> Q {
    &m.0 * x + &m.1
}

#[derive(Clone, Debug)]
struct Interval {
    lo: Q,
    hi: Q,
}

impl Interval {
    fn image(&self, m: &(Q, Q)) -> Interval {
        let (x, y) = (apply(m, &self.lo), apply(m, &self.hi));
        if x <= y {
            Interval { lo: x, hi: y }
        } else {
            Interval { lo: y, hi: x }
        }
    }
}

fn cycle_of(t: &GeometricType, c: BoundaryLabel) -> Option<Vec<BoundaryLabel>> {
    let mut cyc = vec![c];
    let mut x = gamma(t, c);
    while x != c {
        if cyc.len() > 2 * t.n() {
            return None;
        }
        cyc.push(x);
        x = gamma(t, x);
    }
    Some(cyc)
}

/// Position of the periodic point on the side `c`, which lies on a cycle.
fn periodic_point(t: &GeometricType, cyc: &[BoundaryLabel]) -> Result<Q, SurfaceError> {
    let (mut a, mut b) = (Q::one(), Q::zero());
    for &c in cyc {
        let (ma, mb) = side_map(t, c);
        b = &ma * &b + mb;
        a *= ma;
    }
    if a.is_one() {
        return Err(SurfaceError::Inconsistent(format!("side {} returns onto itself isometrically", cyc[0])));
    }
    Ok(b / (Q::one() - a))
}

struct SideInfo {
    point: Q,
    code: Code,
    /// The side map reverses direction.
    flips: bool,
}

fn side_info(leaves: &Leaves, c: BoundaryLabel, reverse: bool) -> Result<Option<SideInfo>, SurfaceError> {
    let t = leaves.geometric_type();
    let Some(cyc) = cycle_of(t, c) else {
        return Ok(None);
    };
    let tail = leaves.code(c);
    let code = Code::periodic(tail.cycle());
    Ok(Some(SideInfo {
        point: periodic_point(t, &cyc)?,
        code: if reverse { code.reversed() } else { code },
        flips: side_map(t, c).0 < Q::zero(),
    }))
}

fn half_of(iv: &Interval, p: &Q, what: &dyn Fn() -> String) -> Result<Half, SurfaceError> {
    if iv.hi <= *p {
        Ok(Half::Left)
    } else if iv.lo >= *p {
        Ok(Half::Right)
    } else {
        Err(SurfaceError::Inconsistent(format!("{} straddles its periodic point", what())))
    }
}

/// Boundary germs on the stable side of `leaves`; with `reverse` the codes are read
/// backwards, as for the unstable side computed on the inverse type.
pub fn germs(leaves: &Leaves, reverse: bool) -> Result<BTreeSet<Germ>, SurfaceError> {
    let t = leaves.geometric_type();
    let mut out = BTreeSet::new();
    for i in 1..=t.n() {
        for j in 1..t.h(i) {
            let mut labs = stripe_labels(t, i, j);
            let unit = Interval { lo: Q::zero(), hi: Q::one() };
            let mut ivs = [unit.image(&band_map(t, i, j)), unit.image(&band_map(t, i, j + 1))];
            let mut steps = 0;
            let infos = loop {
                let a = side_info(leaves, labs[0], reverse)?;
                let b = side_info(leaves, labs[1], reverse)?;
                if let (Some(a), Some(b)) = (a, b) {
                    break [a, b];
                }
                if steps > 2 * t.n() {
                    return Err(SurfaceError::Inconsistent(format!("stripe ({i},{j}) never reaches a cycle")));
                }
                ivs = [ivs[0].image(&side_map(t, labs[0])), ivs[1].image(&side_map(t, labs[1]))];
                labs = [gamma(t, labs[0]), gamma(t, labs[1])];
                steps += 1;
            };
            let what = || format!("image of stripe ({i},{j})");
            let mut halves = [half_of(&ivs[0], &infos[0].point, &what)?, half_of(&ivs[1], &infos[1].point, &what)?];
            let mut infos = infos;
            let mut seen = BTreeSet::new();
            while seen.insert((labs, halves)) {
                let mut ends = [
                    GermEnd { code: infos[0].code.clone(), label: labs[0], half: halves[0] },
                    GermEnd { code: infos[1].code.clone(), label: labs[1], half: halves[1] },
                ];
                ends.sort();
                out.insert(Germ::Boundary { ends });
                for s in 0..2 {
                    if infos[s].flips {
                        halves[s] = halves[s].flip();
                    }
                    labs[s] = gamma(t, labs[s]);
                }
                infos = [
                    side_info(leaves, labs[0], reverse)?.expect("cycle stays a cycle"),
                    side_info(leaves, labs[1], reverse)?.expect("cycle stays a cycle"),
                ];
            }
        }
    }
    Ok(out)
}
