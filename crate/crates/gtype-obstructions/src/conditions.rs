//! The four conditions on a single type, as searches and as literal
//! predicates on an index tuple.
//!
//! Readings, on the ribbons of [`crate::stripe`]:
//! - type 1: a ribbon `r` with both ends on one side `A`, and another ribbon
//!   with exactly one end on `A` strictly between them;
//! - type 2: two ribbons joining the same pair of distinct sides `A`, `B` whose
//!   orders on `A` and on `B` disagree once each side is oriented along the
//!   ribbons (`A` by `+x` times its side sign);
//! - type 3: on sides fixed by the type with preserved orientation, the
//!   embryonic separatrices are the column ranges left and right of the fixed
//!   column; a ribbon `r` joins separatrices `S1`, `S2` on different sides and
//!   another ribbon joins `S1` to a third separatrix `S3`;
//! - impasse: a ribbon whose ends are adjacent columns on one side.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use gtype_core::{sign_str, GeometricType, HLabel};

use crate::stripe::{is_stripe_label, stripe, stripes, Component, End, Stripe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    Left,
    Right,
}

/// A column range on a fixed side: columns left (or right) of the fixed one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Separatrix {
    pub comp: Component,
    pub half: Half,
}

impl fmt::Display for Separatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = match self.half {
            Half::Left => "L",
            Half::Right => "R",
        };
        write!(f, "({},{},{})", self.comp.rect, sign_str(self.comp.side), h)
    }
}

/// Column `l` if `rho(c, theta(c, side)) = (c, l)` with sign `+1`.
pub fn fixed_column(t: &GeometricType, c: Component) -> Option<usize> {
    let j = t.theta(c.rect, c.side);
    let to = t.rho(c.rect, j);
    (to.k == c.rect && t.eps(c.rect, j) > 0).then_some(to.l)
}

/// True if the separatrix lies on a fixed side and is non-empty.
pub fn separatrix_exists(t: &GeometricType, s: Separatrix) -> bool {
    if !(1..=t.n()).contains(&s.comp.rect) || s.comp.side.abs() != 1 {
        return false;
    }
    match (fixed_column(t, s.comp), s.half) {
        (Some(l), Half::Left) => l > 1,
        (Some(l), Half::Right) => l < t.v(s.comp.rect),
        (None, _) => false,
    }
}

fn separatrix_of(t: &GeometricType, e: &End) -> Option<Separatrix> {
    let l = fixed_column(t, e.comp)?;
    let half = match e.col.cmp(&l) {
        std::cmp::Ordering::Less => Half::Left,
        std::cmp::Ordering::Greater => Half::Right,
        std::cmp::Ordering::Equal => return None,
    };
    Some(Separatrix { comp: e.comp, half })
}

pub fn holds_impasse(t: &GeometricType, s: HLabel) -> bool {
    if !is_stripe_label(t, s) {
        return false;
    }
    let (a, b) = (t.rho(s.i, s.j), t.rho(s.i, s.j + 1));
    a.k == b.k && a.l.abs_diff(b.l) == 1 && t.eps(s.i, s.j + 1) == -t.eps(s.i, s.j)
}

pub fn holds_type1(t: &GeometricType, comp: Component, r: HLabel, r2: HLabel) -> bool {
    if r == r2 || !is_stripe_label(t, r) || !is_stripe_label(t, r2) {
        return false;
    }
    let (x, y) = (stripe(t, r.i, r.j), stripe(t, r2.i, r2.j));
    if x.ends.iter().any(|e| e.comp != comp) {
        return false;
    }
    let (lo, hi) = (x.ends[0].col.min(x.ends[1].col), x.ends[0].col.max(x.ends[1].col));
    y.ends.iter().filter(|e| e.comp == comp && lo < e.col && e.col < hi).count() == 1
}

/// Columns of `s` on `a` and `b`, if it joins them.
fn joins(s: &Stripe, a: Component, b: Component) -> Option<(usize, usize)> {
    let [e, f] = s.ends;
    if e.comp == a && f.comp == b {
        Some((e.col, f.col))
    } else if f.comp == a && e.comp == b {
        Some((f.col, e.col))
    } else {
        None
    }
}

pub fn holds_type2(t: &GeometricType, a: Component, b: Component, r: HLabel, r2: HLabel) -> bool {
    if a == b || r == r2 || !is_stripe_label(t, r) || !is_stripe_label(t, r2) {
        return false;
    }
    let (Some((pa, pb)), Some((qa, qb))) = (joins(&stripe(t, r.i, r.j), a, b), joins(&stripe(t, r2.i, r2.j), a, b))
    else {
        return false;
    };
    let da = qa as i64 - pa as i64;
    let db = qb as i64 - pb as i64;
    da * db * a.side as i64 * b.side as i64 > 0
}

fn joins_seps(t: &GeometricType, s: &Stripe, a: Separatrix, b: Separatrix) -> bool {
    let x = (separatrix_of(t, &s.ends[0]), separatrix_of(t, &s.ends[1]));
    x == (Some(a), Some(b)) || x == (Some(b), Some(a))
}

pub fn holds_type3(
    t: &GeometricType,
    s1: Separatrix,
    s2: Separatrix,
    s3: Separatrix,
    r: HLabel,
    r2: HLabel,
) -> bool {
    if r == r2 || !is_stripe_label(t, r) || !is_stripe_label(t, r2) {
        return false;
    }
    if ![s1, s2, s3].iter().all(|&s| separatrix_exists(t, s)) {
        return false;
    }
    if s1.comp == s2.comp || s3 == s1 || s3 == s2 {
        return false;
    }
    joins_seps(t, &stripe(t, r.i, r.j), s1, s2) && joins_seps(t, &stripe(t, r2.i, r2.j), s1, s3)
}

pub fn find_impasse(t: &GeometricType) -> Option<HLabel> {
    stripes(t).into_iter().map(|s| s.label).find(|&l| holds_impasse(t, l))
}

/// Parenthesis scan of each side: the pairs must nest and enclose no
/// single end.
pub fn find_type1(t: &GeometricType) -> Option<(Component, HLabel, HLabel)> {
    let ss = stripes(t);
    let mut by_comp: BTreeMap<Component, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, s) in ss.iter().enumerate() {
        for e in &s.ends {
            by_comp.entry(e.comp).or_default().push((e.col, x));
        }
    }
    for (comp, mut ends) in by_comp {
        ends.sort_unstable();
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for &(_, x) in &ends {
            *count.entry(x).or_default() += 1;
        }
        let mut stack: Vec<usize> = Vec::new();
        let mut open = vec![false; ss.len()];
        for &(_, x) in &ends {
            if count[&x] == 1 {
                if let Some(&top) = stack.last() {
                    return Some((comp, ss[top].label, ss[x].label));
                }
            } else if open[x] {
                let top = *stack.last().unwrap();
                if top != x {
                    return Some((comp, ss[x].label, ss[top].label));
                }
                stack.pop();
            } else {
                open[x] = true;
                stack.push(x);
            }
        }
    }
    None
}

/// Per pair of sides, sorted by column on the first, the signed column on
/// the second must strictly decrease.
pub fn find_type2(t: &GeometricType) -> Option<(Component, Component, HLabel, HLabel)> {
    let ss = stripes(t);
    let mut groups: BTreeMap<(Component, Component), Vec<(usize, i64, HLabel)>> = BTreeMap::new();
    for s in &ss {
        let [e, f] = s.ends;
        if e.comp == f.comp {
            continue;
        }
        let (ea, eb) = if e.comp < f.comp { (e, f) } else { (f, e) };
        let orient = ea.comp.side as i64 * eb.comp.side as i64;
        groups.entry((ea.comp, eb.comp)).or_default().push((ea.col, eb.col as i64 * orient, s.label));
    }
    for ((a, b), mut g) in groups {
        g.sort_unstable_by_key(|&(c, _, _)| c);
        for w in g.windows(2) {
            if w[1].1 > w[0].1 {
                return Some((a, b, w[0].2, w[1].2));
            }
        }
    }
    None
}

pub fn find_type3(t: &GeometricType) -> Option<(Separatrix, Separatrix, Separatrix, HLabel, HLabel)> {
    let ss = stripes(t);
    // partners[S] = separatrices reached from S, with one ribbon each
    let mut partners: BTreeMap<Separatrix, BTreeMap<Separatrix, HLabel>> = BTreeMap::new();
    for s in &ss {
        let (Some(a), Some(b)) = (separatrix_of(t, &s.ends[0]), separatrix_of(t, &s.ends[1])) else {
            continue;
        };
        partners.entry(a).or_default().entry(b).or_insert(s.label);
        partners.entry(b).or_default().entry(a).or_insert(s.label);
    }
    for (&s1, ps) in &partners {
        for (&s2, &r) in ps {
            if s2.comp == s1.comp {
                continue;
            }
            let others: BTreeSet<_> = ps.iter().filter(|(&s3, _)| s3 != s1 && s3 != s2).collect();
            if let Some((&s3, &r2)) = others.into_iter().next() {
                return Some((s1, s2, s3, r, r2));
            }
        }
    }
    None
}
