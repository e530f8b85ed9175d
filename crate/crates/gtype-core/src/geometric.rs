use num_bigint::BigUint;

use crate::error::CoreError;
use crate::label::{HLabel, Sign, VLabel};
use crate::matrix::IncidenceMatrix;
use crate::validate::{Candidate, MapEntry};

/// A validated abstract geometric type. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeometricType {
    n: usize,
    h: Vec<usize>,
    v: Vec<usize>,
    rho: Vec<Vec<VLabel>>,
    eps: Vec<Vec<Sign>>,
}

impl GeometricType {
    pub(crate) fn from_validated(
        n: usize,
        h: Vec<usize>,
        v: Vec<usize>,
        rho: Vec<Vec<VLabel>>,
        eps: Vec<Vec<Sign>>,
    ) -> Self {
        GeometricType { n, h, v, rho, eps }
    }

    /// Builds a type from per-rectangle tables: `rho[i-1][j-1]` and `eps[i-1][j-1]`.
    pub fn from_tables(
        h: Vec<usize>,
        v: Vec<usize>,
        rho: Vec<Vec<VLabel>>,
        eps: Vec<Vec<Sign>>,
    ) -> Result<Self, CoreError> {
        let n = h.len();
        let mut maps = Vec::with_capacity(h.iter().sum());
        for (i, (row, srow)) in rho.iter().zip(eps.iter()).enumerate() {
            for (j, (&to, &s)) in row.iter().zip(srow.iter()).enumerate() {
                maps.push(MapEntry {
                    from: HLabel::new(i + 1, j + 1),
                    to,
                    sign: s as i64,
                });
            }
        }
        let c = Candidate { n, h, v, maps };
        c.into_type()
    }

    pub fn from_maps(
        h: Vec<usize>,
        v: Vec<usize>,
        maps: &[(HLabel, VLabel, Sign)],
    ) -> Result<Self, CoreError> {
        Candidate {
            n: h.len(),
            h,
            v,
            maps: maps
                .iter()
                .map(|&(from, to, s)| MapEntry { from, to, sign: s as i64 })
                .collect(),
        }
        .into_type()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self, i: usize) -> usize {
        self.h[i - 1]
    }

    pub fn v(&self, k: usize) -> usize {
        self.v[k - 1]
    }

    pub fn hs(&self) -> &[usize] {
        &self.h
    }

    pub fn vs(&self) -> &[usize] {
        &self.v
    }

    pub fn rho(&self, i: usize, j: usize) -> VLabel {
        self.rho[i - 1][j - 1]
    }

    pub fn eps(&self, i: usize, j: usize) -> Sign {
        self.eps[i - 1][j - 1]
    }

    pub fn xi(&self, i: usize, j: usize) -> usize {
        self.rho(i, j).k
    }

    pub fn nu(&self, i: usize, j: usize) -> usize {
        self.rho(i, j).l
    }

    /// Index of the horizontal sub-rectangle touching side `e` of `R_i`.
    pub fn theta(&self, i: usize, e: Sign) -> usize {
        if e < 0 {
            1
        } else {
            self.h(i)
        }
    }

    pub fn alpha(&self) -> usize {
        self.h.iter().sum()
    }

    /// Horizontal labels in lexicographic order.
    pub fn labels(&self) -> impl Iterator<Item = HLabel> + '_ {
        self.h
            .iter()
            .enumerate()
            .flat_map(|(i, &hi)| (1..=hi).map(move |j| HLabel::new(i + 1, j)))
    }

    /// `inv[k-1][l-1]` is the horizontal label sent onto `(k, l)`.
    pub fn rho_inverse(&self) -> Vec<Vec<HLabel>> {
        let mut inv: Vec<Vec<HLabel>> = self.v.iter().map(|&vk| vec![HLabel::new(0, 0); vk]).collect();
        for (i, row) in self.rho.iter().enumerate() {
            for (j, to) in row.iter().enumerate() {
                inv[to.k - 1][to.l - 1] = HLabel::new(i + 1, j + 1);
            }
        }
        inv
    }

    /// The inverse type `(n, {v_i, h_i}, rho^-1, eps o rho^-1)`.
    pub fn invert(&self) -> GeometricType {
        let inv = self.rho_inverse();
        let rho = inv
            .iter()
            .map(|row| row.iter().map(|hl| VLabel::new(hl.i, hl.j)).collect())
            .collect();
        let eps = inv
            .iter()
            .map(|row| row.iter().map(|hl| self.eps(hl.i, hl.j)).collect())
            .collect();
        GeometricType {
            n: self.n,
            h: self.v.clone(),
            v: self.h.clone(),
            rho,
            eps,
        }
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut counts = vec![vec![0u64; self.n]; self.n];
        for (i, row) in self.rho.iter().enumerate() {
            for to in row {
                counts[i][to.k - 1] += 1;
            }
        }
        IncidenceMatrix::from_entries(
            counts
                .into_iter()
                .map(|r| r.into_iter().map(BigUint::from).collect())
                .collect(),
        )
    }

    pub fn to_candidate(&self) -> Candidate {
        Candidate {
            n: self.n,
            h: self.h.clone(),
            v: self.v.clone(),
            maps: self
                .labels()
                .map(|hl| MapEntry {
                    from: hl,
                    to: self.rho(hl.i, hl.j),
                    sign: self.eps(hl.i, hl.j) as i64,
                })
                .collect(),
        }
    }
}
