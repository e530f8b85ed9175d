use std::fmt;

use gtype_core::GeometricType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Cycle of rectangles with a single horizontal sub-rectangle.
    Stable,
    /// Same on the inverse type.
    Unstable,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Stable => "s",
            Side::Unstable => "u",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleBoundary {
    pub side: Side,
    /// `i_1 -> ... -> i_k -> i_1`, rotated to start at its least index.
    pub cycle: Vec<usize>,
}

impl fmt::Display for DoubleBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.cycle.iter().map(|x| x.to_string()).collect();
        write!(f, "side={} cycle={}", self.side, c.join(","))
    }
}

fn h_one_cycle(t: &GeometricType) -> Option<Vec<usize>> {
    let n = t.n();
    let mut best: Option<Vec<usize>> = None;
    for start in 1..=n {
        let mut path = Vec::new();
        let mut cur = start;
        while t.h(cur) == 1 && !path.contains(&cur) && path.len() <= n {
            path.push(cur);
            cur = t.xi(cur, 1);
        }
        if t.h(cur) != 1 {
            continue;
        }
        if let Some(pos) = path.iter().position(|&x| x == cur) {
            let mut cyc = path[pos..].to_vec();
            let m = cyc.iter().enumerate().min_by_key(|(_, &x)| x).map(|(p, _)| p).unwrap();
            cyc.rotate_left(m);
            if best.as_ref().is_none_or(|b| cyc < *b) {
                best = Some(cyc);
            }
        }
    }
    best
}

/// Every double boundary, stable side first.
pub fn double_boundaries(t: &GeometricType) -> Vec<DoubleBoundary> {
    let mut out = Vec::new();
    if let Some(c) = h_one_cycle(t) {
        out.push(DoubleBoundary { side: Side::Stable, cycle: c });
    }
    if let Some(c) = h_one_cycle(&t.invert()) {
        out.push(DoubleBoundary { side: Side::Unstable, cycle: c });
    }
    out
}

pub fn has_double_boundary(t: &GeometricType) -> Option<DoubleBoundary> {
    double_boundaries(t).into_iter().next()
}
