//! `T^m` as the m-fold composition of `T` with itself.
//!
//! `compose(X, Y)` is the type of "apply X, then Y" on a shared partition.
//! A horizontal sub-rectangle of the result inside `H^i_J` (of X) is the
//! preimage of a horizontal band `J'` of `R_k`, `k = xi_X(i, J)`; it is listed
//! bottom to top, reversed when `eps_X(i, J) = -1`. Its image lies in the
//! vertical band `(k', L') = rho_Y(k, J')`, which Y fills with the `v_X(k)`
//! columns of `R_k` left to right, reversed when `eps_Y(k, J') = -1`.
//! Signs multiply. Unrolled, this is the step-word ordering: first step as
//! primary key for rows, last step for columns.

use std::env;

use gtype_core::{GeometricType, HLabel, VLabel};
use num_bigint::BigUint;

use crate::error::AlgebraError;

pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Word budget: `GTYPE_BUDGET` if set and parseable, else [`DEFAULT_BUDGET`].
pub fn default_budget() -> u64 {
    env::var("GTYPE_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// `alpha(T^m)` read off `A(T)^m` without building the power.
pub fn projected_alpha(t: &GeometricType, m: usize) -> BigUint {
    t.incidence_matrix().pow(m as u32).total()
}

fn check_budget(t: &GeometricType, m: usize, budget: u64) -> Result<(), AlgebraError> {
    let projected = projected_alpha(t, m);
    if projected > BigUint::from(budget) {
        return Err(AlgebraError::Budget { m, projected, budget });
    }
    Ok(())
}

pub(crate) fn compose(x: &GeometricType, y: &GeometricType) -> GeometricType {
    let n = x.n();
    let yinv = y.rho_inverse();

    let mut h = vec![0usize; n];
    for (i, hi) in h.iter_mut().enumerate() {
        *hi = (1..=x.h(i + 1)).map(|jj| y.h(x.xi(i + 1, jj))).sum();
    }
    // voff[k'-1][L'-1]: columns of the result in R_k' left of the Y-band L'
    let mut v = vec![0usize; n];
    let mut voff: Vec<Vec<usize>> = Vec::with_capacity(n);
    for kk in 1..=n {
        let mut acc = 0;
        let mut row = Vec::with_capacity(y.v(kk));
        for ll in 1..=y.v(kk) {
            row.push(acc);
            acc += x.v(yinv[kk - 1][ll - 1].i);
        }
        voff.push(row);
        v[kk - 1] = acc;
    }

    let mut rho: Vec<Vec<VLabel>> = h.iter().map(|&hi| vec![VLabel::new(0, 0); hi]).collect();
    let mut eps: Vec<Vec<i8>> = h.iter().map(|&hi| vec![0; hi]).collect();
    for i in 1..=n {
        let mut hoff = 0;
        for jj in 1..=x.h(i) {
            let VLabel { k, l } = x.rho(i, jj);
            let ex = x.eps(i, jj);
            let hy = y.h(k);
            for jp in 1..=hy {
                let hidx = hoff + if ex > 0 { jp } else { hy + 1 - jp };
                let VLabel { k: kk, l: ll } = y.rho(k, jp);
                let ey = y.eps(k, jp);
                let vx = x.v(k);
                let vidx = voff[kk - 1][ll - 1] + if ey > 0 { l } else { vx + 1 - l };
                rho[i - 1][hidx - 1] = VLabel::new(kk, vidx);
                eps[i - 1][hidx - 1] = ex * ey;
            }
            hoff += hy;
        }
    }
    GeometricType::from_tables(h, v, rho, eps).expect("composition of valid types is valid")
}

/// `T^m` under the word budget from [`default_budget`].
pub fn power(t: &GeometricType, m: usize) -> Result<GeometricType, AlgebraError> {
    power_with_budget(t, m, default_budget())
}

pub fn power_with_budget(t: &GeometricType, m: usize, budget: u64) -> Result<GeometricType, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::ZeroPower);
    }
    check_budget(t, m, budget)?;
    let mut cur = t.clone();
    for _ in 1..m {
        cur = compose(&cur, t);
    }
    Ok(cur)
}

/// Successive powers `T, T^2, ...`, each built from the previous one.
/// Records the largest exponent ever materialized.
pub struct PowerSeq<'a> {
    base: &'a GeometricType,
    current: Option<GeometricType>,
    m: usize,
    budget: u64,
}

impl<'a> PowerSeq<'a> {
    pub fn new(base: &'a GeometricType, budget: u64) -> Self {
        PowerSeq {
            base,
            current: None,
            m: 0,
            budget,
        }
    }

    /// Exponent of the last materialized power, 0 before the first call to `advance`.
    pub fn max_materialized(&self) -> usize {
        self.m
    }

    pub fn current(&self) -> Option<&GeometricType> {
        self.current.as_ref()
    }

    /// Materializes the next power and returns it with its exponent.
    pub fn advance(&mut self) -> Result<(usize, &GeometricType), AlgebraError> {
        let next_m = self.m + 1;
        check_budget(self.base, next_m, self.budget)?;
        let next = match &self.current {
            None => self.base.clone(),
            Some(c) => compose(c, self.base),
        };
        self.current = Some(next);
        self.m = next_m;
        Ok((next_m, self.current.as_ref().unwrap()))
    }
}

/// Step word of a horizontal sub-rectangle of `T^m`: the chain of labels of `T`
/// it visits. Used by tests to check the word description of powers.
pub fn step_words(t: &GeometricType, m: usize) -> Vec<Vec<HLabel>> {
    let mut words: Vec<Vec<HLabel>> = t.labels().map(|hl| vec![hl]).collect();
    for _ in 1..m {
        let mut next = Vec::new();
        for w in &words {
            let last = *w.last().unwrap();
            let k = t.xi(last.i, last.j);
            for j in 1..=t.h(k) {
                let mut w2 = w.clone();
                w2.push(HLabel::new(k, j));
                next.push(w2);
            }
        }
        words = next;
    }
    words
}
