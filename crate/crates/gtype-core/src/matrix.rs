use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Square non-negative integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    n: usize,
    a: Vec<Vec<BigUint>>,
}

impl IncidenceMatrix {
    /// Panics unless `rows` is square.
    pub fn from_entries(rows: Vec<Vec<BigUint>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IncidenceMatrix { n, a: rows }
    }

    pub fn from_u64_rows(rows: &[Vec<u64>]) -> Self {
        Self::from_entries(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigUint::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut a = vec![vec![BigUint::zero(); n]; n];
        for (d, row) in a.iter_mut().enumerate() {
            row[d] = BigUint::one();
        }
        IncidenceMatrix { n, a }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `a_{ik}`, 1-based.
    pub fn get(&self, i: usize, k: usize) -> &BigUint {
        &self.a[i - 1][k - 1]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.a
    }

    /// Panics if an entry does not fit in 64 bits.
    pub fn to_u64_rows(&self) -> Vec<Vec<u64>> {
        self.a
            .iter()
            .map(|r| r.iter().map(|x| x.to_u64().expect("entry exceeds u64")).collect())
            .collect()
    }

    pub fn mul(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![vec![BigUint::zero(); n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (t, x) in self.a[i].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, cell) in row.iter_mut().enumerate() {
                    let y = &other.a[t][k];
                    if !y.is_zero() {
                        *cell += x * y;
                    }
                }
            }
        }
        IncidenceMatrix { n, a: out }
    }

    pub fn pow(&self, m: u32) -> IncidenceMatrix {
        let mut result = IncidenceMatrix::identity(self.n);
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let a = (0..self.n)
            .map(|i| (0..self.n).map(|k| self.a[k][i].clone()).collect())
            .collect();
        IncidenceMatrix { n: self.n, a }
    }

    /// Sum of all entries.
    pub fn total(&self) -> BigUint {
        self.a.iter().flatten().sum()
    }

    pub fn row_sums(&self) -> Vec<BigUint> {
        self.a.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<BigUint> {
        (0..self.n)
            .map(|k| self.a.iter().map(|r| &r[k]).sum())
            .collect()
    }

    pub fn is_binary(&self) -> bool {
        self.a.iter().flatten().all(|x| *x <= BigUint::one())
    }

    pub fn is_positive(&self) -> bool {
        self.a.iter().flatten().all(|x| !x.is_zero())
    }

    /// Zero/non-zero pattern.
    pub fn pattern(&self) -> Vec<Vec<bool>> {
        self.a
            .iter()
            .map(|r| r.iter().map(|x| !x.is_zero()).collect())
            .collect()
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}
