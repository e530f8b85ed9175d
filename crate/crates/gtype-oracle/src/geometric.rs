//! Obstructions and impasses read off exact ribbon end intervals.
//!
//! Ribbon ends of distinct ribbons are interior-disjoint arcs of the
//! horizontal sides, so positions along a side compare by left endpoint.

use std::fmt;

use gtype_core::{GeometricType, HLabel, Sign};

use crate::affine::{affine_concretization, Q};
use crate::error::OracleError;
use crate::ribbon::{fixed_sides_of, ribbons_of, FixedSide, Ribbon, RibbonEnd};

pub type RibbonId = (usize, HLabel);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    Left,
    Right,
}

/// A component of `A \ phi^m(A)` on a fixed side `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeoSeparatrix {
    pub rect: usize,
    pub side: Sign,
    pub half: Half,
}

impl fmt::Display for GeoSeparatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = match self.half {
            Half::Left => "L",
            Half::Right => "R",
        };
        write!(f, "({},{},{})", self.rect, gtype_core::sign_str(self.side), h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeoWitness {
    Impasse { ribbon: RibbonId },
    /// `r` has both ends on `comp`; `r2` has exactly one end strictly between them.
    Type1 { comp: (usize, Sign), r: RibbonId, r2: RibbonId },
    /// `r` and `r2` both join `a` to `b` and cross.
    Type2 { a: (usize, Sign), b: (usize, Sign), r: RibbonId, r2: RibbonId },
    /// `r` joins `s1` to `s2`, `r2` joins `s1` to `s3`.
    Type3 { s1: GeoSeparatrix, s2: GeoSeparatrix, s3: GeoSeparatrix, r: RibbonId, r2: RibbonId },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeoReport {
    pub type1: Option<GeoWitness>,
    pub type2: Option<GeoWitness>,
    pub type3: Option<GeoWitness>,
}

fn type1(rs: &[Ribbon]) -> Option<GeoWitness> {
    for r in rs {
        let [a, b] = &r.ends;
        if a.component() != b.component() {
            continue;
        }
        let (lo, hi) = if a.x0 < b.x0 { (&a.x0, &b.x0) } else { (&b.x0, &a.x0) };
        for r2 in rs {
            if r2.id() == r.id() {
                continue;
            }
            let inside = r2
                .ends
                .iter()
                .filter(|e| e.component() == a.component() && lo < &e.x0 && &e.x0 < hi)
                .count();
            if inside == 1 {
                return Some(GeoWitness::Type1 { comp: a.component(), r: r.id(), r2: r2.id() });
            }
        }
    }
    None
}

fn sgn(a: &Q, b: &Q) -> i8 {
    match a.cmp(b) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

fn type2(rs: &[Ribbon]) -> Option<GeoWitness> {
    for r in rs {
        for (p, q) in [(0, 1), (1, 0)] {
            let (e1, e2) = (&r.ends[p], &r.ends[q]);
            let (ca, cb) = (e1.component(), e2.component());
            if ca == cb {
                continue;
            }
            for r2 in rs {
                if r2.id() == r.id() {
                    continue;
                }
                for (p2, q2) in [(0, 1), (1, 0)] {
                    let (f1, f2) = (&r2.ends[p2], &r2.ends[q2]);
                    if f1.component() != ca || f2.component() != cb {
                        continue;
                    }
                    if sgn(&f1.x0, &e1.x0) * sgn(&f2.x0, &e2.x0) * ca.1 * cb.1 > 0 {
                        return Some(GeoWitness::Type2 { a: ca, b: cb, r: r.id(), r2: r2.id() });
                    }
                }
            }
        }
    }
    None
}

fn separatrix_of(e: &RibbonEnd, fixed: &[FixedSide]) -> Option<GeoSeparatrix> {
    let f = fixed.iter().find(|f| f.rect == e.rect && f.side == e.side)?;
    let half = if e.x1 <= f.x0 {
        Half::Left
    } else if e.x0 >= f.x1 {
        Half::Right
    } else {
        return None;
    };
    Some(GeoSeparatrix { rect: e.rect, side: e.side, half })
}

fn type3(rs: &[Ribbon], fixed: &[FixedSide]) -> Option<GeoWitness> {
    let seps: Vec<[Option<GeoSeparatrix>; 2]> = rs
        .iter()
        .map(|r| [separatrix_of(&r.ends[0], fixed), separatrix_of(&r.ends[1], fixed)])
        .collect();
    for (x, r) in rs.iter().enumerate() {
        for (p, q) in [(0, 1), (1, 0)] {
            let (Some(s1), Some(s2)) = (seps[x][p], seps[x][q]) else { continue };
            if (s1.rect, s1.side) == (s2.rect, s2.side) {
                continue;
            }
            for (y, r2) in rs.iter().enumerate() {
                if y == x {
                    continue;
                }
                for (p2, q2) in [(0, 1), (1, 0)] {
                    let (Some(t1), Some(t3)) = (seps[y][p2], seps[y][q2]) else { continue };
                    if t1 == s1 && t3 != s1 && t3 != s2 {
                        return Some(GeoWitness::Type3 { s1, s2, s3: t3, r: r.id(), r2: r2.id() });
                    }
                }
            }
        }
    }
    None
}

/// Obstructions of the three kinds in the union of the squares and the
/// ribbons of generations `1..=m`.
pub fn geometric_obstructions(t: &GeometricType, m: usize) -> Result<GeoReport, OracleError> {
    let real = affine_concretization(t)?;
    let rs = ribbons_of(&real, m);
    let fixed = fixed_sides_of(&real, m);
    Ok(GeoReport { type1: type1(&rs), type2: type2(&rs), type3: type3(&rs, &fixed) })
}

/// A ribbon of generation at most `m` whose two ends sit side by side on the
/// same side of one square.
pub fn geometric_impasse(t: &GeometricType, m: usize) -> Result<Option<GeoWitness>, OracleError> {
    let real = affine_concretization(t)?;
    let rs = ribbons_of(&real, m);
    Ok(rs.iter().find_map(|r| {
        let [a, b] = &r.ends;
        let touching = a.x1 == b.x0 || b.x1 == a.x0;
        (a.component() == b.component() && touching).then(|| GeoWitness::Impasse { ribbon: r.id() })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gtype_core::parse_geometric_type;

    const BAK: &str = "GT v1\nn=1\nh=2\nv=2\nmap (1,1)->(1,1) +1\nmap (1,2)->(1,2) +1\n";
    const HS: &str = "GT v1\nn=1\nh=2\nv=2\nmap (1,1)->(1,1) +1\nmap (1,2)->(1,2) -1\n";
    const CAT: &str = "GT v1\nn=2\nh=2,1\nv=2,1\nmap (1,1)->(1,1) +1\nmap (1,2)->(2,1) +1\nmap (2,1)->(1,2) +1\n";

    #[test]
    fn horseshoe_impasse() {
        let t = parse_geometric_type(HS).unwrap();
        let w = geometric_impasse(&t, 1).unwrap();
        assert_eq!(w, Some(GeoWitness::Impasse { ribbon: (1, HLabel::new(1, 1)) }));
    }

    #[test]
    fn baker_clean() {
        let t = parse_geometric_type(BAK).unwrap();
        for m in 1..=3 {
            assert_eq!(geometric_impasse(&t, m).unwrap(), None);
        }
        assert_eq!(geometric_obstructions(&t, 1).unwrap(), GeoReport::default());
    }

    #[test]
    fn cat_clean_then_crossed() {
        let t = parse_geometric_type(CAT).unwrap();
        for m in 1..=5 {
            assert_eq!(geometric_impasse(&t, m).unwrap(), None);
        }
        for m in 1..=3 {
            assert_eq!(geometric_obstructions(&t, m).unwrap(), GeoReport::default(), "m={m}");
        }
        // generations 2 and 4 join the same two sides in opposite orders
        let r = geometric_obstructions(&t, 4).unwrap();
        assert_eq!(r.type1, None);
        assert_eq!(
            r.type2,
            Some(GeoWitness::Type2 { a: (2, 1), b: (1, -1), r: (2, HLabel::new(1, 1)), r2: (4, HLabel::new(1, 1)) })
        );
        assert!(r.type3.is_some());
    }
}
