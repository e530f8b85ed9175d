//! Codes of stable boundary leaves for one type, and how they pair up.
//!
//! Everything here reads codes forwards. The unstable side is the same
//! machinery run on the inverse type with reversed codes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use gtype_core::{GeometricType, HLabel};

use crate::code::{Code, Tail};
use crate::label::{gamma, labels, BoundaryLabel};

/// Why two codes are identified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pairing {
    /// The codes agree up to position `k`, where they sit in the two
    /// sub-rectangles on either side of `stripe`, and from `k + 1` on follow
    /// the boundary codes of `labels`.
    Split { k: i64, stripe: HLabel, labels: [BoundaryLabel; 2] },
    /// Periodic codes whose positive parts are those of `labels`, reached
    /// `steps` iterates after the two sides of `stripe` land on the boundary.
    Limit { stripe: HLabel, steps: usize, labels: [BoundaryLabel; 2] },
}

impl Pairing {
    pub fn stripe(&self) -> HLabel {
        match *self {
            Pairing::Split { stripe, .. } | Pairing::Limit { stripe, .. } => stripe,
        }
    }

    pub fn labels(&self) -> [BoundaryLabel; 2] {
        match *self {
            Pairing::Split { labels, .. } | Pairing::Limit { labels, .. } => labels,
        }
    }

    pub(crate) fn swapped(self) -> Pairing {
        match self {
            Pairing::Split { k, stripe, labels: [a, b] } => Pairing::Split { k, stripe, labels: [b, a] },
            Pairing::Limit { stripe, steps, labels: [a, b] } => Pairing::Limit { stripe, steps, labels: [b, a] },
        }
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pairing::Split { k, stripe, labels: [a, b] } => {
                write!(f, "split k={k} stripe=({},{}) {a}~{b}", stripe.i, stripe.j)
            }
            Pairing::Limit { stripe, steps, labels: [a, b] } => {
                write!(f, "limit stripe=({},{}) steps={steps} {a}~{b}", stripe.i, stripe.j)
            }
        }
    }
}

/// The two boundary labels that the sides of the stripe above `H^i_j` land on.
pub fn stripe_labels(t: &GeometricType, i: usize, j: usize) -> [BoundaryLabel; 2] {
    [
        BoundaryLabel::new(t.xi(i, j), t.eps(i, j)),
        BoundaryLabel::new(t.xi(i, j + 1), -t.eps(i, j + 1)),
    ]
}

/// The walk of one stripe's two labels under the generating function, until
/// the pair repeats.
pub fn stripe_orbit(t: &GeometricType, i: usize, j: usize) -> Vec<[BoundaryLabel; 2]> {
    let mut seen = BTreeSet::new();
    let mut cur = stripe_labels(t, i, j);
    let mut out = Vec::new();
    while seen.insert(cur) {
        out.push(cur);
        cur = [gamma(t, cur[0]), gamma(t, cur[1])];
    }
    out
}

pub(crate) fn positive_code(t: &GeometricType, lab: BoundaryLabel) -> Tail {
    let mut seq = vec![lab];
    loop {
        let next = gamma(t, *seq.last().unwrap());
        if let Some(p) = seq.iter().position(|&l| l == next) {
            let rects: Vec<usize> = seq.iter().map(|l| l.rect).collect();
            return Tail::new(rects[..p].to_vec(), rects[p..].to_vec());
        }
        seq.push(next);
    }
}

#[derive(Clone, Debug)]
pub struct Leaves {
    t: GeometricType,
    next: Vec<BoundaryLabel>,
    codes: Vec<Tail>,
    periodic: BTreeMap<Code, Vec<(Code, Pairing)>>,
}

/// Labels whose code is the positive part of `w` from each position.
enum Membership {
    /// In the boundary set from `k + 1` on, but not at `k`; with the labels at
    /// `k + 1`.
    Entry(i64, Vec<BoundaryLabel>),
    Never,
    Always,
}

impl Leaves {
    pub fn new(t: &GeometricType) -> Leaves {
        let all = labels(t);
        let next = all.iter().map(|&l| gamma(t, l)).collect();
        let codes = all.iter().map(|&l| positive_code(t, l)).collect();
        let mut leaves = Leaves { t: t.clone(), next, codes, periodic: BTreeMap::new() };
        let mut periodic: BTreeMap<Code, Vec<(Code, Pairing)>> = BTreeMap::new();
        for (w, v, p) in leaves.limit_pairs() {
            periodic.entry(w.clone()).or_default().push((v.clone(), p));
            periodic.entry(v).or_default().push((w, p.swapped()));
        }
        for list in periodic.values_mut() {
            list.sort();
            list.dedup();
        }
        leaves.periodic = periodic;
        leaves
    }

    pub fn geometric_type(&self) -> &GeometricType {
        &self.t
    }

    /// Positive boundary code of `lab`.
    pub fn code(&self, lab: BoundaryLabel) -> &Tail {
        &self.codes[lab.index()]
    }

    fn members_at_top(&self, w: &Code) -> (i64, Vec<BoundaryLabel>) {
        let top = w.right().pre().len() as i64;
        let tail = w.positive(top);
        let c = labels(&self.t).into_iter().filter(|&l| *self.code(l) == tail).collect();
        (top, c)
    }

    fn membership(&self, w: &Code) -> Membership {
        let (mut k, mut cur) = self.members_at_top(w);
        if cur.is_empty() {
            return Membership::Never;
        }
        let period = w.left().cycle().len() as i64;
        let deep = -(w.left().window() as i64);
        let mut seen = BTreeSet::new();
        loop {
            let sym = w.at(k - 1);
            let prev: Vec<BoundaryLabel> = labels(&self.t)
                .into_iter()
                .filter(|&l| l.rect == sym && cur.contains(&self.next[l.index()]))
                .collect();
            if prev.is_empty() {
                return Membership::Entry(k - 1, cur);
            }
            k -= 1;
            cur = prev;
            if k < deep && !seen.insert((k.rem_euclid(period), cur.clone())) {
                return Membership::Always;
            }
        }
    }

    /// Some shift of `w` has the positive part of a boundary code.
    pub fn contains(&self, w: &Code) -> bool {
        !matches!(self.membership(w), Membership::Never)
    }

    /// The position `k` with `sigma^k(w)` off the boundary set and
    /// `sigma^{k+1}(w)` on it. Periodic codes have none.
    pub fn entry(&self, w: &Code) -> Option<i64> {
        match self.membership(w) {
            Membership::Entry(k, _) => Some(k),
            _ => None,
        }
    }

    /// Codes identified with a non-periodic `w` by a split.
    pub fn partners(&self, w: &Code) -> Vec<(Code, Pairing)> {
        let Membership::Entry(k, at_next) = self.membership(w) else {
            return Vec::new();
        };
        let i = w.at(k);
        let past = w.negative(k);
        let mut out = Vec::new();
        for &c in &at_next {
            for j in 1..self.t.h(i) {
                let [lo, hi] = stripe_labels(&self.t, i, j);
                let other = if c == lo {
                    hi
                } else if c == hi {
                    lo
                } else {
                    continue;
                };
                let v = Code::new(past.clone(), self.code(other).clone()).shift(-(k + 1));
                if !v.is_periodic() && self.entry(&v) == Some(k) {
                    let stripe = HLabel::new(i, j);
                    out.push((v, Pairing::Split { k, stripe, labels: [c, other] }));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn limit_pairs(&self) -> Vec<(Code, Code, Pairing)> {
        let mut out = Vec::new();
        for i in 1..=self.t.n() {
            for j in 1..self.t.h(i) {
                for (steps, [a, b]) in stripe_orbit(&self.t, i, j).into_iter().enumerate() {
                    let (ca, cb) = (self.code(a), self.code(b));
                    if ca.is_periodic() && cb.is_periodic() {
                        let p = Pairing::Limit { stripe: HLabel::new(i, j), steps, labels: [a, b] };
                        out.push((Code::periodic(ca.cycle()), Code::periodic(cb.cycle()), p));
                    }
                }
            }
        }
        out
    }

    /// Periodic codes paired with the periodic code `w`, each with one witness.
    pub fn periodic_partners(&self, w: &Code) -> Vec<(Code, Pairing)> {
        let mut out: Vec<(Code, Pairing)> = Vec::new();
        for (v, p) in self.periodic.get(w).into_iter().flatten() {
            if out.last().is_none_or(|(u, _)| u != v) {
                out.push((v.clone(), *p));
            }
        }
        out
    }

    /// Every periodic pairing, both orders.
    pub fn all_periodic_pairs(&self) -> impl Iterator<Item = (&Code, &Code, &Pairing)> {
        self.periodic.iter().flat_map(|(w, list)| list.iter().map(move |(v, p)| (w, v, p)))
    }

    /// Periodic codes of labels on a cycle of the generating function.
    pub fn periodic_codes(&self) -> BTreeSet<Code> {
        labels(&self.t)
            .into_iter()
            .map(|l| self.code(l))
            .filter(|c| c.is_periodic())
            .map(|c| Code::periodic(c.cycle()))
            .collect()
    }
}
