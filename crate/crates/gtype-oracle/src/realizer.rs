//! Euler data of `R_m = R ∪ phi(R) ∪ ... ∪ phi^m(R)`.
//!
//! `R_m` is the `n` squares with the ribbons of generations `1..=m` attached,
//! an orientable ribbon surface. The boundary is traced as the cycles of
//! `e -> next(partner(e))` on attaching arcs, where `next` walks each square's
//! boundary counterclockwise: lower side left to right, upper side right to left.

use std::collections::BTreeSet;

use gtype_core::GeometricType;
use num_traits::{One, Zero};

use crate::affine::{affine_concretization, Q};
use crate::error::OracleError;
use crate::ribbon::{ribbons_of, Ribbon};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizerEuler {
    /// `n(m+1) - m alpha(T)`.
    pub chi: i64,
    /// `V - E + F` of the traced cell structure.
    pub chi_cells: i64,
    pub components: usize,
    pub boundary_circles: usize,
    /// Per component, in order of least square index.
    pub component_genera: Vec<i64>,
    pub genus: i64,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let up = self.0[c];
            self.0[c] = r;
            c = up;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn count(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Component count of the copies model: `f^t(R)` for `t = 0..=m`, with
/// column `V^k_l` of copy `t` glued to band `H^i_j` of copy `t+1`.
fn copies_components(t: &GeometricType, m: usize) -> usize {
    let n = t.n();
    let mut d = Dsu::new(n * (m + 1));
    for c in 0..m {
        for lab in t.labels() {
            d.union(c * n + t.xi(lab.i, lab.j) - 1, (c + 1) * n + lab.i - 1);
        }
    }
    d.count()
}

fn cell_chi(n: usize, rs: &[Ribbon]) -> Result<i64, OracleError> {
    let mut verts: Vec<BTreeSet<(i8, Q)>> = vec![BTreeSet::new(); n];
    for v in verts.iter_mut() {
        for s in [-1i8, 1] {
            v.insert((s, Q::zero()));
            v.insert((s, Q::one()));
        }
    }
    for r in rs {
        for e in &r.ends {
            verts[e.rect - 1].insert((e.side, e.x0.clone()));
            verts[e.rect - 1].insert((e.side, e.x1.clone()));
        }
    }
    // every attaching arc must be a single boundary edge
    for r in rs {
        for e in &r.ends {
            let inner = verts[e.rect - 1].range((e.side, e.x0.clone())..=(e.side, e.x1.clone())).count();
            if inner != 2 {
                return Err(OracleError::Inconsistent(format!(
                    "attaching arc of ribbon {:?} overlaps another on ({},{})",
                    r.id(),
                    e.rect,
                    e.side
                )));
            }
        }
    }
    // each square is a polygon with one edge per consecutive vertex pair;
    // a ribbon adds a face and its two free sides
    let v: i64 = verts.iter().map(|s| s.len() as i64).sum();
    let e = v + 2 * rs.len() as i64;
    let f = (n + rs.len()) as i64;
    let chi = v - e + f;
    Ok(chi)
}

pub fn realizer_euler(t: &GeometricType, m: usize) -> Result<RealizerEuler, OracleError> {
    let real = affine_concretization(t)?;
    let n = t.n();
    let rs = ribbons_of(&real, m);

    for r in &rs {
        let [a, b] = &r.ends;
        if a.side * a.orientation != 1 || b.side * b.orientation != -1 {
            return Err(OracleError::Inconsistent(format!("ribbon {:?} attached with a twist", r.id())));
        }
    }

    let chi = n as i64 * (m as i64 + 1) - m as i64 * t.alpha() as i64;
    let chi_cells = cell_chi(n, &rs)?;

    let mut d = Dsu::new(n);
    for r in &rs {
        d.union(r.ends[0].rect - 1, r.ends[1].rect - 1);
    }
    let components = d.count();
    let copies = copies_components(t, m);
    if copies != components {
        return Err(OracleError::Inconsistent(format!(
            "component count {components} disagrees with the copies model ({copies})"
        )));
    }

    // ends are numbered 2*ribbon + end
    let end = |e: usize| &rs[e / 2].ends[e % 2];
    let total = rs.len() * 2;
    let mut next = vec![0usize; total];
    let mut has_ends = vec![false; n];
    for rect in 1..=n {
        let mut bottom: Vec<usize> = (0..total).filter(|&e| end(e).rect == rect && end(e).side < 0).collect();
        let mut top: Vec<usize> = (0..total).filter(|&e| end(e).rect == rect && end(e).side > 0).collect();
        bottom.sort_by(|&a, &b| end(a).x0.cmp(&end(b).x0));
        top.sort_by(|&a, &b| end(b).x0.cmp(&end(a).x0));
        let ring: Vec<usize> = bottom.into_iter().chain(top).collect();
        has_ends[rect - 1] = !ring.is_empty();
        for (p, &e) in ring.iter().enumerate() {
            next[e] = ring[(p + 1) % ring.len()];
        }
    }
    let mut seen = vec![false; total];
    let mut circles_in = vec![0i64; n];
    for start in 0..total {
        if seen[start] {
            continue;
        }
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            e = next[e ^ 1];
        }
        circles_in[d.find(end(start).rect - 1)] += 1;
    }
    for rect in 0..n {
        if !has_ends[rect] {
            circles_in[d.find(rect)] += 1;
        }
    }

    let mut chi_c = vec![0i64; n];
    for rect in 0..n {
        chi_c[d.find(rect)] += 1;
    }
    for r in &rs {
        chi_c[d.find(r.ends[0].rect - 1)] -= 1;
    }
    let mut component_genera = Vec::with_capacity(components);
    for c in 0..n {
        if d.find(c) != c {
            continue;
        }
        let twice = 2 - chi_c[c] - circles_in[c];
        if twice < 0 || twice % 2 != 0 {
            return Err(OracleError::Inconsistent(format!(
                "component of square {}: chi={} with {} boundary circles",
                c + 1,
                chi_c[c],
                circles_in[c]
            )));
        }
        component_genera.push(twice / 2);
    }
    Ok(RealizerEuler {
        chi,
        chi_cells,
        components,
        boundary_circles: circles_in.iter().sum::<i64>() as usize,
        genus: component_genera.iter().sum(),
        component_genera,
    })
}
