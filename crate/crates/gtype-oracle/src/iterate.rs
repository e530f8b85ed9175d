use std::cmp::Ordering;

use gtype_algebra::{default_budget, projected_alpha, AlgebraError};
use gtype_core::{GeometricType, HLabel, Sign, VLabel};
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::affine::{affine_concretization, Affine, Q};
use crate::error::OracleError;

/// A horizontal strip `[y0, y1]` of source square `src` whose image under the
/// composed map `f` is a full-height column of square `cur`.
struct Piece {
    src: usize,
    y0: Q,
    cur: usize,
    f: Affine,
}

/// Reads `T^m` off the affine model: the horizontal sub-rectangles are the
/// connected components of the m-fold band intersections.
pub fn iterate_type(t: &GeometricType, m: usize) -> Result<GeometricType, OracleError> {
    if m == 0 {
        return Err(AlgebraError::ZeroPower.into());
    }
    let budget = default_budget();
    let projected = projected_alpha(t, m);
    if projected > BigUint::from(budget) {
        return Err(AlgebraError::Budget { m, projected, budget }.into());
    }
    let r = affine_concretization(t)?;
    let mut pieces: Vec<Piece> = (1..=t.n())
        .map(|i| Piece { src: i, y0: Q::zero(), cur: i, f: Affine::identity() })
        .collect();
    for _ in 0..m {
        let mut next = Vec::with_capacity(pieces.len() * 2);
        for p in &pieces {
            for j in 1..=r.h(p.cur) {
                let (b0, b1) = r.h_band(p.cur, j);
                let (a, b) = (p.f.y_inv(&b0), p.f.y_inv(&b1));
                let lo = if a < b { a } else { b };
                let bm = r.map(p.cur, j);
                next.push(Piece { src: p.src, y0: lo, cur: bm.target.k, f: p.f.then(&bm.f) });
            }
        }
        pieces = next;
    }

    let n = t.n();
    let mut h = vec![0usize; n];
    let mut v = vec![0usize; n];
    for p in &pieces {
        h[p.src - 1] += 1;
        v[p.cur - 1] += 1;
    }
    let x_left = |p: &Piece| {
        let (a, b) = (p.f.x(&Q::zero()), p.f.x(&Q::one()));
        if a < b {
            a
        } else {
            b
        }
    };
    let mut by_row: Vec<usize> = (0..pieces.len()).collect();
    by_row.sort_by(|&a, &b| (pieces[a].src, &pieces[a].y0).cmp(&(pieces[b].src, &pieces[b].y0)));
    let mut row_label = vec![HLabel::new(0, 0); pieces.len()];
    let mut j = 0;
    for (pos, &idx) in by_row.iter().enumerate() {
        if pos == 0 || pieces[by_row[pos - 1]].src != pieces[idx].src {
            j = 0;
        }
        j += 1;
        row_label[idx] = HLabel::new(pieces[idx].src, j);
    }
    let lefts: Vec<Q> = pieces.iter().map(x_left).collect();
    let mut by_col: Vec<usize> = (0..pieces.len()).collect();
    by_col.sort_by(|&a, &b| match pieces[a].cur.cmp(&pieces[b].cur) {
        Ordering::Equal => lefts[a].cmp(&lefts[b]),
        o => o,
    });
    let mut maps: Vec<(HLabel, VLabel, Sign)> = Vec::with_capacity(pieces.len());
    let mut l = 0;
    for (pos, &idx) in by_col.iter().enumerate() {
        if pos == 0 || pieces[by_col[pos - 1]].cur != pieces[idx].cur {
            l = 0;
        }
        l += 1;
        let p = &pieces[idx];
        let sign = p.f.orientation();
        maps.push((row_label[idx], VLabel::new(p.cur, l), sign));
    }
    GeometricType::from_maps(h, v, &maps)
        .map_err(|e| OracleError::Inconsistent(format!("iterate produced an invalid type: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gtype_algebra::power;
    use gtype_core::parse_geometric_type;

    #[test]
    fn first_iterate_is_identity_operation() {
        let t = parse_geometric_type(
            "GT v1\nn=2\nh=2,1\nv=2,1\nmap (1,1)->(1,1) +1\nmap (1,2)->(2,1) -1\nmap (2,1)->(1,2) +1\n",
        )
        .unwrap();
        assert_eq!(iterate_type(&t, 1).unwrap(), t);
    }

    #[test]
    fn baker_square() {
        let t = parse_geometric_type("GT v1\nn=1\nh=2\nv=2\nmap (1,1)->(1,1) +1\nmap (1,2)->(1,2) +1\n").unwrap();
        let t2 = iterate_type(&t, 2).unwrap();
        let cols: Vec<usize> = (1..=4).map(|j| t2.nu(1, j)).collect();
        assert_eq!(cols, vec![1, 3, 2, 4]);
        assert_eq!(t2, power(&t, 2).unwrap());
    }

    #[test]
    fn horseshoe_cube_matches_power() {
        let t = parse_geometric_type("GT v1\nn=1\nh=2\nv=2\nmap (1,1)->(1,1) +1\nmap (1,2)->(1,2) -1\n").unwrap();
        assert_eq!(iterate_type(&t, 3).unwrap(), power(&t, 3).unwrap());
    }
}
