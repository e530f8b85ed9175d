use std::collections::BTreeSet;

use gtype_algebra::has_double_boundary;
use gtype_core::GeometricType;

use crate::code::{Code, Tail};
use crate::error::BoundaryError;
use crate::label::{labels, orbits, BoundaryLabel, Orbits};
use crate::leaves::positive_code;

/// Binary incidence matrix and no double boundary.
pub fn check_preconditions(t: &GeometricType) -> Result<(), BoundaryError> {
    if !t.incidence_matrix().is_binary() {
        return Err(BoundaryError::NotBinary);
    }
    if let Some(d) = has_double_boundary(t) {
        return Err(BoundaryError::DoubleBoundary(d));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCodeTable {
    /// `I^+` of every s-label, in label order.
    pub s_codes: Vec<(BoundaryLabel, Tail)>,
    /// `J^-` of every u-label: `w_0, w_{-1}, ...`.
    pub u_codes: Vec<(BoundaryLabel, Tail)>,
    pub gamma_orbits: Orbits,
    pub upsilon_orbits: Orbits,
    pub per_s: BTreeSet<Code>,
    pub per_u: BTreeSet<Code>,
    pub corner: BTreeSet<Code>,
}

impl BoundaryCodeTable {
    pub fn s_code(&self, lab: BoundaryLabel) -> &Tail {
        &self.s_codes[lab.index()].1
    }

    pub fn u_code(&self, lab: BoundaryLabel) -> &Tail {
        &self.u_codes[lab.index()].1
    }

    /// Every periodic boundary code lies on both kinds of boundary.
    pub fn has_corner_property(&self) -> bool {
        self.per_s == self.per_u
    }

    /// The s-codes are pairwise distinct.
    pub fn s_codes_distinct(&self) -> bool {
        let set: BTreeSet<&Tail> = self.s_codes.iter().map(|(_, c)| c).collect();
        set.len() == self.s_codes.len()
    }
}

fn periodizations(t: &GeometricType, o: &Orbits) -> BTreeSet<Code> {
    let mut out = BTreeSet::new();
    for cyc in &o.cycles {
        let word: Vec<usize> = cyc.iter().map(|l| l.rect).collect();
        for p in 0..word.len() {
            let mut w = word.clone();
            w.rotate_left(p);
            out.insert(Code::periodic(&w));
        }
    }
    debug_assert!(out.iter().all(|c| c.check_admissible(t).is_ok()));
    out
}

pub fn boundary_code_table(t: &GeometricType) -> Result<BoundaryCodeTable, BoundaryError> {
    check_preconditions(t)?;
    let inv = t.invert();
    let code_list = |ty: &GeometricType| labels(ty).into_iter().map(|l| (l, positive_code(ty, l))).collect::<Vec<_>>();
    let gamma_orbits = orbits(t);
    let upsilon_orbits = orbits(&inv);
    let per_s = periodizations(t, &gamma_orbits);
    let per_u: BTreeSet<Code> = periodizations(&inv, &upsilon_orbits).iter().map(Code::reversed).collect();
    let corner = per_s.intersection(&per_u).cloned().collect();
    Ok(BoundaryCodeTable {
        s_codes: code_list(t),
        u_codes: code_list(&inv),
        gamma_orbits,
        upsilon_orbits,
        per_s,
        per_u,
        corner,
    })
}

pub fn has_corner_property(t: &GeometricType) -> Result<bool, BoundaryError> {
    Ok(boundary_code_table(t)?.has_corner_property())
}

#[cfg(test)]
mod tests {
    use super::*;
    use gtype_core::parse_geometric_type;

    fn fixture(name: &str) -> GeometricType {
        let path = format!("{}/../../fixtures/{name}.gt", env!("CARGO_MANIFEST_DIR"));
        parse_geometric_type(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    #[test]
    fn cat_table() {
        let tab = boundary_code_table(&fixture("t_cat")).unwrap();
        let l = BoundaryLabel::new;
        assert_eq!(*tab.s_code(l(1, -1)), Tail::periodic(vec![1]));
        assert_eq!(*tab.s_code(l(1, 1)), Tail::periodic(vec![1, 2]));
        assert_eq!(*tab.s_code(l(2, 1)), Tail::periodic(vec![2, 1]));
        assert_eq!(*tab.s_code(l(2, -1)), Tail::new(vec![2], vec![1]));
        assert!(tab.s_codes_distinct());
        let per = BTreeSet::from([Code::periodic(&[1]), Code::periodic(&[1, 2]), Code::periodic(&[2, 1])]);
        assert_eq!(tab.per_s, per);
        assert!(tab.has_corner_property());
        assert!(tab.s_codes.iter().all(|(_, c)| c.window() <= 4));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(boundary_code_table(&fixture("t_id")), Err(BoundaryError::DoubleBoundary(_))));
        assert_eq!(boundary_code_table(&fixture("t_bak")), Err(BoundaryError::NotBinary));
        let torus = "GT v1\nn=2\nh=3,2\nv=3,2\nmap (1,1)->(1,1) +1\nmap (1,2)->(1,3) +1\nmap (1,3)->(2,2) +1\nmap (2,1)->(1,2) +1\nmap (2,2)->(2,1) +1\n";
        assert_eq!(boundary_code_table(&parse_geometric_type(torus).unwrap()), Err(BoundaryError::NotBinary));
    }
}
