//! Boundary labels and their generating functions.
//!
//! `(i, +1)` is the upper side of `R_i` and `(i, -1)` the lower one. On the
//! inverse type the same pair names a vertical side.

use std::fmt;

use gtype_core::{sign_str, GeometricType, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryLabel {
    pub rect: usize,
    pub side: Sign,
}

impl BoundaryLabel {
    pub fn new(rect: usize, side: Sign) -> BoundaryLabel {
        BoundaryLabel { rect, side }
    }

    /// Position in `labels(t)`.
    pub fn index(self) -> usize {
        2 * (self.rect - 1) + usize::from(self.side > 0)
    }
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rect, sign_str(self.side))
    }
}

/// `(1,-1), (1,+1), (2,-1), ...`
pub fn labels(t: &GeometricType) -> Vec<BoundaryLabel> {
    (1..=t.n()).flat_map(|i| [BoundaryLabel::new(i, -1), BoundaryLabel::new(i, 1)]).collect()
}

/// The side of the partition that the side `lab` is mapped into.
pub fn gamma(t: &GeometricType, lab: BoundaryLabel) -> BoundaryLabel {
    let j = t.theta(lab.rect, lab.side);
    BoundaryLabel::new(t.xi(lab.rect, j), lab.side * t.eps(lab.rect, j))
}

/// `gamma` of the inverse type. Pass `invert(t)` when calling repeatedly.
pub fn upsilon(t: &GeometricType, lab: BoundaryLabel) -> BoundaryLabel {
    gamma(&t.invert(), lab)
}

/// A map on labels split into its cycles and the labels feeding into them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    /// Each cycle starts at its least label.
    pub cycles: Vec<Vec<BoundaryLabel>>,
    /// Labels off every cycle, each with its distance to the cycle it enters.
    pub tails: Vec<(BoundaryLabel, usize)>,
}

pub fn orbits(t: &GeometricType) -> Orbits {
    let all = labels(t);
    let next: Vec<BoundaryLabel> = all.iter().map(|&l| gamma(t, l)).collect();
    let mut on_cycle = vec![false; all.len()];
    let mut cycles = Vec::new();
    for &start in &all {
        // Walking 2n steps surely lands on a cycle.
        let mut x = start;
        for _ in 0..all.len() {
            x = next[x.index()];
        }
        if on_cycle[x.index()] {
            continue;
        }
        let mut cyc = vec![x];
        on_cycle[x.index()] = true;
        let mut y = next[x.index()];
        while y != x {
            on_cycle[y.index()] = true;
            cyc.push(y);
            y = next[y.index()];
        }
        let m = (0..cyc.len()).min_by_key(|&p| cyc[p]).unwrap();
        cyc.rotate_left(m);
        cycles.push(cyc);
    }
    cycles.sort();
    let tails = all
        .iter()
        .filter(|l| !on_cycle[l.index()])
        .map(|&l| {
            let (mut x, mut d) = (l, 0);
            while !on_cycle[x.index()] {
                x = next[x.index()];
                d += 1;
            }
            (l, d)
        })
        .collect();
    Orbits { cycles, tails }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gtype_core::parse_geometric_type;

    fn cat() -> GeometricType {
        parse_geometric_type(include_str!("../../../fixtures/t_cat.gt")).unwrap()
    }

    #[test]
    fn gamma_on_cat() {
        let t = cat();
        let l = BoundaryLabel::new;
        assert_eq!(gamma(&t, l(1, -1)), l(1, -1));
        assert_eq!(gamma(&t, l(1, 1)), l(2, 1));
        assert_eq!(gamma(&t, l(2, 1)), l(1, 1));
        assert_eq!(gamma(&t, l(2, -1)), l(1, -1));
        assert_eq!(upsilon(&t, l(1, -1)), l(1, -1));
        assert_eq!(upsilon(&t, l(1, 1)), l(2, 1));
        assert_eq!(upsilon(&t, l(2, -1)), l(1, -1));
    }

    #[test]
    fn cat_orbits() {
        let o = orbits(&cat());
        let l = BoundaryLabel::new;
        assert_eq!(o.cycles, vec![vec![l(1, -1)], vec![l(1, 1), l(2, 1)]]);
        assert_eq!(o.tails, vec![(l(2, -1), 1)]);
    }

    #[test]
    fn label_index() {
        let t = cat();
        for (p, l) in labels(&t).into_iter().enumerate() {
            assert_eq!(l.index(), p);
        }
    }
}
