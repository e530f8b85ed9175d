use gtype_core::IncidenceMatrix;
use num_traits::ToPrimitive;

use crate::error::AlgebraError;
use crate::mixing::positive_exponent;

/// Spectral radius of a mixing matrix by power iteration. Iterates until the
/// Collatz-Wielandt bounds `min (Ax)_i/x_i <= lambda <= max (Ax)_i/x_i` agree
/// to 1e-12 relative.
pub fn perron_root(a: &IncidenceMatrix) -> Result<f64, AlgebraError> {
    if positive_exponent(a).is_none() {
        return Err(AlgebraError::NotMixing);
    }
    let n = a.n();
    let m: Vec<Vec<f64>> = a
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::MAX)).collect())
        .collect();
    let mut x = vec![1.0f64; n];
    let mut estimate = 0.0;
    for _ in 0..200_000 {
        let y: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|k| m[i][k] * x[k]).sum())
            .collect();
        let ratios = y.iter().zip(&x).map(|(a, b)| a / b);
        let (lo, hi) = ratios.fold((f64::INFINITY, 0.0f64), |(lo, hi), r| (lo.min(r), hi.max(r)));
        estimate = 0.5 * (lo + hi);
        if hi - lo <= 1e-12 * hi {
            return Ok(estimate);
        }
        let norm = y.iter().cloned().fold(0.0, f64::max);
        x = y.into_iter().map(|v| v / norm).collect();
    }
    Ok(estimate)
}
