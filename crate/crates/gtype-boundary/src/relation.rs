//! Strata of codes and the s, u and T relations.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use gtype_core::GeometricType;

use crate::code::Code;
use crate::error::BoundaryError;
use crate::leaves::{Leaves, Pairing};
use crate::table::check_preconditions;

/// Largest number of codes a T-relation search visits.
pub const SEARCH_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stratum {
    SLeaf,
    ULeaf,
    Both,
    Interior,
}

impl Stratum {
    pub fn name(self) -> &'static str {
        match self {
            Stratum::SLeaf => "s-leaf",
            Stratum::ULeaf => "u-leaf",
            Stratum::Both => "both",
            Stratum::Interior => "interior",
        }
    }

    pub fn on_s(self) -> bool {
        matches!(self, Stratum::SLeaf | Stratum::Both)
    }

    pub fn on_u(self) -> bool {
        matches!(self, Stratum::ULeaf | Stratum::Both)
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Leaf {
    S,
    U,
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Leaf::S => "s",
            Leaf::U => "u",
        })
    }
}

/// One identification `from ~ to`. For `Leaf::U` the pairing is stated on the
/// inverse type with reversed codes: a split at `k` there agrees on positions
/// `>= -k` here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub leaf: Leaf,
    pub from: Code,
    pub to: Code,
    pub pairing: Pairing,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~{} {} by {}", self.from, self.leaf, self.to, self.pairing)
    }
}

/// Chain of identifications from the first code to the second. Empty when
/// the codes are equal.
pub type Chain = Vec<Step>;

/// A type together with its stable and unstable leaf machinery.
#[derive(Clone, Debug)]
pub struct Boundary {
    s: Leaves,
    u: Leaves,
}

impl Boundary {
    pub fn new(t: &GeometricType) -> Result<Boundary, BoundaryError> {
        check_preconditions(t)?;
        Ok(Boundary { s: Leaves::new(t), u: Leaves::new(&t.invert()) })
    }

    pub fn geometric_type(&self) -> &GeometricType {
        self.s.geometric_type()
    }

    /// Leaf machinery of `T` (stable) or of `T^{-1}` (unstable, reversed codes).
    pub fn leaves(&self, leaf: Leaf) -> &Leaves {
        match leaf {
            Leaf::S => &self.s,
            Leaf::U => &self.u,
        }
    }

    pub fn admissible(&self, w: &Code) -> Result<(), BoundaryError> {
        w.check_admissible(self.geometric_type())
    }

    pub fn stratum(&self, w: &Code) -> Result<Stratum, BoundaryError> {
        self.admissible(w)?;
        Ok(match (self.s.contains(w), self.u.contains(&w.reversed())) {
            (true, true) => Stratum::Both,
            (true, false) => Stratum::SLeaf,
            (false, true) => Stratum::ULeaf,
            (false, false) => Stratum::Interior,
        })
    }

    /// Codes identified with `w` in one move on `leaf`.
    pub fn moves(&self, leaf: Leaf, w: &Code) -> Vec<Step> {
        let (leaves, local) = match leaf {
            Leaf::S => (&self.s, w.clone()),
            Leaf::U => (&self.u, w.reversed()),
        };
        let found = if local.is_periodic() {
            leaves.periodic_partners(&local)
        } else {
            leaves.partners(&local)
        };
        found
            .into_iter()
            .map(|(v, pairing)| Step {
                leaf,
                from: w.clone(),
                to: if leaf == Leaf::U { v.reversed() } else { v },
                pairing,
            })
            .collect()
    }

    fn search(&self, w: &Code, v: &Code, leaves: &[Leaf]) -> Result<Option<Chain>, BoundaryError> {
        if w == v {
            return Ok(Some(Vec::new()));
        }
        let mut parent: BTreeMap<Code, Option<Step>> = BTreeMap::from([(w.clone(), None)]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for &leaf in leaves {
                for step in self.moves(leaf, &x) {
                    if parent.contains_key(&step.to) {
                        continue;
                    }
                    if parent.len() >= SEARCH_LIMIT {
                        return Err(BoundaryError::SearchLimit(SEARCH_LIMIT));
                    }
                    let to = step.to.clone();
                    parent.insert(to.clone(), Some(step));
                    if to == *v {
                        let mut chain = Vec::new();
                        let mut cur = to;
                        while let Some(Some(s)) = parent.get(&cur) {
                            cur = s.from.clone();
                            chain.push(s.clone());
                        }
                        chain.reverse();
                        return Ok(Some(chain));
                    }
                    queue.push_back(to);
                }
            }
        }
        Ok(None)
    }

    fn related_on(&self, leaf: Leaf, w: &Code, v: &Code) -> Result<Option<Chain>, BoundaryError> {
        for x in [w, v] {
            let st = self.stratum(x)?;
            let ok = if leaf == Leaf::S { st.on_s() } else { st.on_u() };
            if !ok {
                let expected = if leaf == Leaf::S { "s-leaf" } else { "u-leaf" };
                return Err(BoundaryError::Stratum { code: x.to_string(), expected });
            }
        }
        if w == v {
            return Ok(Some(Vec::new()));
        }
        if w.is_periodic() != v.is_periodic() {
            return Ok(None);
        }
        if w.is_periodic() {
            // Closed up: the literal pairing of periodic codes need not be
            // transitive.
            self.search(w, v, &[leaf])
        } else {
            Ok(self.moves(leaf, w).into_iter().find(|s| s.to == *v).map(|s| vec![s]))
        }
    }

    pub fn s_related(&self, w: &Code, v: &Code) -> Result<Option<Chain>, BoundaryError> {
        self.related_on(Leaf::S, w, v)
    }

    pub fn u_related(&self, w: &Code, v: &Code) -> Result<Option<Chain>, BoundaryError> {
        self.related_on(Leaf::U, w, v)
    }

    /// Alternating s and u moves from `w`; interior codes are related only to
    /// themselves.
    pub fn t_related(&self, w: &Code, v: &Code) -> Result<Option<Chain>, BoundaryError> {
        self.admissible(w)?;
        self.admissible(v)?;
        self.search(w, v, &[Leaf::S, Leaf::U])
    }

    /// Every code `T`-related to `w`, `w` first.
    pub fn t_class(&self, w: &Code) -> Result<Vec<Code>, BoundaryError> {
        self.admissible(w)?;
        let mut seen = vec![w.clone()];
        let mut known = BTreeSet::from([w.clone()]);
        let mut p = 0;
        while p < seen.len() {
            let x = seen[p].clone();
            for leaf in [Leaf::S, Leaf::U] {
                for s in self.moves(leaf, &x) {
                    if !known.contains(&s.to) {
                        if seen.len() >= SEARCH_LIMIT {
                            return Err(BoundaryError::SearchLimit(SEARCH_LIMIT));
                        }
                        known.insert(s.to.clone());
                        seen.push(s.to);
                    }
                }
            }
            p += 1;
        }
        Ok(seen)
    }
}

pub fn stratum(t: &GeometricType, w: &Code) -> Result<Stratum, BoundaryError> {
    Boundary::new(t)?.stratum(w)
}

pub fn s_related(t: &GeometricType, w: &Code, v: &Code) -> Result<Option<Chain>, BoundaryError> {
    Boundary::new(t)?.s_related(w, v)
}

pub fn u_related(t: &GeometricType, w: &Code, v: &Code) -> Result<Option<Chain>, BoundaryError> {
    Boundary::new(t)?.u_related(w, v)
}

pub fn t_related(t: &GeometricType, w: &Code, v: &Code) -> Result<Option<Chain>, BoundaryError> {
    Boundary::new(t)?.t_related(w, v)
}
