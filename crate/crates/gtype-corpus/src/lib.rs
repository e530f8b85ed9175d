//! Seeded random inputs: geometric types, non-negative matrices, and walks on
//! transition graphs. Everything is reproducible from a `u64` seed.

use gtype_algebra::has_double_boundary;
use gtype_core::{GeometricType, HLabel, IncidenceMatrix, VLabel};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub max_n: usize,
    pub max_h: usize,
    pub max_v: usize,
    pub allow_double_boundary: bool,
    /// Reject types whose incidence matrix has an entry above 1.
    pub binary_only: bool,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            max_n: 3,
            max_h: 3,
            max_v: 3,
            allow_double_boundary: false,
            binary_only: false,
        }
    }
}

fn attempt<R: Rng>(rng: &mut R, p: &Params) -> Option<GeometricType> {
    let n = rng.gen_range(1..=p.max_n);
    let h: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=p.max_h)).collect();
    let total: usize = h.iter().sum();
    if total < n || total > n * p.max_v {
        return None;
    }
    let mut v = vec![1usize; n];
    let mut left = total - n;
    while left > 0 {
        let k = rng.gen_range(0..n);
        if v[k] < p.max_v {
            v[k] += 1;
            left -= 1;
        }
    }
    let mut cols: Vec<VLabel> = v
        .iter()
        .enumerate()
        .flat_map(|(k, &vk)| (1..=vk).map(move |l| VLabel::new(k + 1, l)))
        .collect();
    cols.shuffle(rng);
    let mut maps = Vec::with_capacity(total);
    let mut it = cols.into_iter();
    for (i, &hi) in h.iter().enumerate() {
        for j in 1..=hi {
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            maps.push((HLabel::new(i + 1, j), it.next().unwrap(), s));
        }
    }
    let t = GeometricType::from_maps(h, v, &maps).ok()?;
    if !p.allow_double_boundary && has_double_boundary(&t).is_some() {
        return None;
    }
    if p.binary_only && !t.incidence_matrix().is_binary() {
        return None;
    }
    Some(t)
}

/// Draws until a type meeting `p` comes out.
pub fn random_type<R: Rng>(rng: &mut R, p: &Params) -> GeometricType {
    loop {
        if let Some(t) = attempt(rng, p) {
            return t;
        }
    }
}

pub fn corpus(seed: u64, count: usize, p: &Params) -> Vec<GeometricType> {
    let mut r = rng(seed);
    (0..count).map(|_| random_type(&mut r, p)).collect()
}

/// Random non-negative matrix of dimension `1..=max_n`. The density is drawn
/// per matrix so that sparse, near-permutation and dense patterns all occur.
pub fn random_matrix<R: Rng>(rng: &mut R, max_n: usize, max_entry: u64) -> IncidenceMatrix {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.1..0.9);
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(1..=max_entry) } else { 0 })
                .collect()
        })
        .collect();
    IncidenceMatrix::from_u64_rows(&rows)
}

/// Walks `len` steps along edges `a -> b` with `adj[a-1][b-1]`, starting at
/// `start`. Returns `None` on a dead end.
pub fn walk<R: Rng>(rng: &mut R, adj: &[Vec<bool>], start: usize, len: usize) -> Option<Vec<usize>> {
    let mut out = vec![start];
    let mut cur = start;
    for _ in 0..len {
        let succ: Vec<usize> = (1..=adj.len()).filter(|&b| adj[cur - 1][b - 1]).collect();
        cur = *succ.choose(rng)?;
        out.push(cur);
    }
    Some(out)
}

/// Random eventually periodic forward path from `start`: keeps walking until a
/// symbol repeats. Returns `(pre, cycle)` where the path is `pre` then `cycle`
/// repeated, `pre[0] == start` unless `pre` is empty; then `cycle[0] == start`.
pub fn eventually_periodic_path<R: Rng>(
    rng: &mut R,
    adj: &[Vec<bool>],
    start: usize,
    min_len: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut path = walk(rng, adj, start, min_len)?;
    loop {
        let last = *path.last().unwrap();
        if let Some(p) = path[..path.len() - 1].iter().position(|&x| x == last) {
            let cycle = path[p..path.len() - 1].to_vec();
            let pre = path[..p].to_vec();
            return Some((pre, cycle));
        }
        let succ: Vec<usize> = (1..=adj.len()).filter(|&b| adj[last - 1][b - 1]).collect();
        path.push(*succ.choose(rng)?);
    }
}
