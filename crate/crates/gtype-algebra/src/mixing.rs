use gtype_core::IncidenceMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixingReport {
    pub binary: bool,
    /// Some power of the matrix is entrywise positive.
    pub mixing: bool,
    /// Least `k` with `A^k > 0`.
    pub witness_exponent: Option<usize>,
    /// `A^n > 0` with `n` the dimension.
    pub positive_at_n: bool,
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    let mut out = vec![vec![false; n]; n];
    for i in 0..n {
        for t in 0..n {
            if a[i][t] {
                for k in 0..n {
                    out[i][k] |= b[t][k];
                }
            }
        }
    }
    out
}

fn all_true(a: &[Vec<bool>]) -> bool {
    a.iter().flatten().all(|&x| x)
}

/// Least `k <= (n-1)^2 + 1` with `A^k` entrywise positive. Beyond the
/// Wielandt bound no primitive matrix is still waiting, so `None` is final.
pub fn positive_exponent(a: &IncidenceMatrix) -> Option<usize> {
    let n = a.n();
    if n == 0 {
        return None;
    }
    let base = a.pattern();
    let bound = (n - 1) * (n - 1) + 1;
    let mut cur = base.clone();
    for k in 1..=bound {
        if all_true(&cur) {
            return Some(k);
        }
        cur = bool_mul(&cur, &base);
    }
    None
}

pub fn mixing_report(a: &IncidenceMatrix) -> MixingReport {
    let witness_exponent = positive_exponent(a);
    let n = a.n();
    let mut cur = a.pattern();
    let base = cur.clone();
    for _ in 1..n {
        cur = bool_mul(&cur, &base);
    }
    MixingReport {
        binary: a.is_binary(),
        mixing: witness_exponent.is_some(),
        witness_exponent,
        positive_at_n: n > 0 && all_true(&cur),
    }
}
