use gtype_algebra::has_double_boundary;
use gtype_core::{GeometricType, Sign, VLabel};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::OracleError;

pub type Q = BigRational;

pub(crate) fn q(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `(x, y) -> (ax x + bx, ay y + by)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub ax: Q,
    pub bx: Q,
    pub ay: Q,
    pub by: Q,
}

impl Affine {
    pub fn identity() -> Self {
        Affine {
            ax: Q::one(),
            bx: Q::zero(),
            ay: Q::one(),
            by: Q::zero(),
        }
    }

    pub fn x(&self, x: &Q) -> Q {
        &self.ax * x + &self.bx
    }

    pub fn y(&self, y: &Q) -> Q {
        &self.ay * y + &self.by
    }

    /// Preimage of a y-value.
    pub fn y_inv(&self, y: &Q) -> Q {
        (y - &self.by) / &self.ay
    }

    /// `next after self`.
    pub fn then(&self, next: &Affine) -> Affine {
        Affine {
            ax: &next.ax * &self.ax,
            bx: &next.ax * &self.bx + &next.bx,
            ay: &next.ay * &self.ay,
            by: &next.ay * &self.by + &next.by,
        }
    }

    /// Sign of the vertical derivative.
    pub fn orientation(&self) -> Sign {
        if self.ay.is_positive() {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandMap {
    pub target: VLabel,
    pub sign: Sign,
    pub f: Affine,
}

#[derive(Clone, Debug)]
pub struct AffineRealization {
    h: Vec<usize>,
    v: Vec<usize>,
    maps: Vec<Vec<BandMap>>,
}

impl AffineRealization {
    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn h(&self, i: usize) -> usize {
        self.h[i - 1]
    }

    pub fn v(&self, k: usize) -> usize {
        self.v[k - 1]
    }

    /// `[(j-1)/h_i, j/h_i]`.
    pub fn h_band(&self, i: usize, j: usize) -> (Q, Q) {
        let h = self.h(i) as i64;
        (q(j as i64 - 1, h), q(j as i64, h))
    }

    /// `[(l-1)/v_k, l/v_k]`.
    pub fn v_band(&self, k: usize, l: usize) -> (Q, Q) {
        let v = self.v(k) as i64;
        (q(l as i64 - 1, v), q(l as i64, v))
    }

    pub fn map(&self, i: usize, j: usize) -> &BandMap {
        &self.maps[i - 1][j - 1]
    }
}

/// The uniform-width affine model of `t`.
pub fn affine_concretization(t: &GeometricType) -> Result<AffineRealization, OracleError> {
    if let Some(d) = has_double_boundary(t) {
        return Err(OracleError::DoubleBoundary(d));
    }
    let mut maps = Vec::with_capacity(t.n());
    for i in 1..=t.n() {
        let hi = t.h(i) as i64;
        let mut row = Vec::with_capacity(t.h(i));
        for j in 1..=t.h(i) {
            let target = t.rho(i, j);
            let vk = t.v(target.k) as i64;
            let l = target.l as i64;
            let jj = j as i64;
            let sign = t.eps(i, j);
            let f = if sign > 0 {
                Affine {
                    ax: q(1, vk),
                    bx: q(l - 1, vk),
                    ay: q(hi, 1),
                    by: q(-(jj - 1), 1),
                }
            } else {
                Affine {
                    ax: q(-1, vk),
                    bx: q(l, vk),
                    ay: q(-hi, 1),
                    by: q(jj, 1),
                }
            };
            row.push(BandMap { target, sign, f });
        }
        maps.push(row);
    }
    Ok(AffineRealization {
        h: t.hs().to_vec(),
        v: t.vs().to_vec(),
        maps,
    })
}
