use gtype_boundary::*;
use gtype_core::{parse_geometric_type, GeometricType};
use gtype_corpus::{corpus, eventually_periodic_path, rng, Params};
use proptest::prelude::*;

fn fixture(name: &str) -> GeometricType {
    let path = format!("{}/../../fixtures/{name}.gt", env!("CARGO_MANIFEST_DIR"));
    parse_geometric_type(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn pa_fixtures() -> Vec<GeometricType> {
    ["t_pa4", "t_pa7", "t_sphere"].iter().map(|n| fixture(n)).collect()
}

fn binary_corpus() -> Vec<GeometricType> {
    let p = Params { binary_only: true, ..Params::default() };
    corpus(0xb0d1, 150, &p)
}

#[test]
fn table_is_shift_equivariant() {
    for t in binary_corpus() {
        let tab = boundary_code_table(&t).unwrap();
        let n = t.n();
        for &(l, ref code) in &tab.s_codes {
            assert_eq!(code.drop(1), *tab.s_code(gamma(&t, l)), "{t:?} {l}");
            assert!(code.window() <= 2 * n);
        }
        let inv = t.invert();
        for &(l, ref code) in &tab.u_codes {
            assert_eq!(code.drop(1), *tab.u_code(gamma(&inv, l)));
            assert!(code.window() <= 2 * n);
        }
        assert!(tab.gamma_orbits.tails.iter().all(|&(_, d)| d <= 2 * n));
        assert_eq!(tab.s_codes.len(), 2 * n);
        assert!(tab.corner.is_subset(&tab.per_s) && tab.corner.is_subset(&tab.per_u));
    }
}

#[test]
fn class_types_have_distinct_codes() {
    for t in pa_fixtures() {
        assert!(gtype_obstructions::is_pseudo_anosov_class(&t).in_class);
        let tab = boundary_code_table(&t).unwrap();
        assert!(tab.s_codes_distinct());
        let distinct: std::collections::BTreeSet<_> = tab.u_codes.iter().map(|(_, c)| c).collect();
        assert_eq!(distinct.len(), 2 * t.n());
    }
}

/// A non-periodic code that enters the stable boundary right after position 0,
/// through the stripe above `H^i_j`, then shifted by `shift`.
fn split_code(b: &Boundary, seed: u64, shift: i64) -> Option<Code> {
    let t = b.geometric_type();
    let mut r = rng(seed);
    let stripes: Vec<(usize, usize)> = (1..=t.n()).flat_map(|i| (1..t.h(i)).map(move |j| (i, j))).collect();
    let (i, j) = stripes[(seed as usize) % stripes.len()];
    let side = stripe_labels(t, i, j)[(seed as usize / 7) % 2];
    let back: Vec<Vec<bool>> = {
        let a = t.incidence_matrix().pattern();
        (0..t.n()).map(|x| (0..t.n()).map(|y| a[y][x]).collect()).collect()
    };
    let (pre, cycle) = eventually_periodic_path(&mut r, &back, i, 3)?;
    let past = Tail::new(pre, cycle);
    let right = b.leaves(Leaf::S).code(side).prepend(&[i]);
    let w = Code::new(past.drop(1), right).shift(shift);
    (!w.is_periodic()).then_some(w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn literals_roundtrip(pre in proptest::collection::vec(1usize..12, 0..4),
                          cyc in proptest::collection::vec(1usize..12, 1..4),
                          core in proptest::collection::vec(1usize..12, 1..3),
                          rpre in proptest::collection::vec(1usize..12, 0..3),
                          rcyc in proptest::collection::vec(1usize..12, 1..4)) {
        let w = Code::new(Tail::new(pre, cyc), Tail::new(rpre, rcyc).prepend(&core));
        let back: Code = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn split_classes_have_two_elements(seed in 0u64..10_000, shift in -4i64..4) {
        let b = Boundary::new(&fixture("t_pa4")).unwrap();
        if let Some(w) = split_code(&b, seed, shift) {
            b.admissible(&w).unwrap();
            prop_assert!(b.stratum(&w).unwrap().on_s());
            let m = b.moves(Leaf::S, &w);
            prop_assert_eq!(m.len(), 1, "{}", w);
            let v = &m[0].to;
            prop_assert_ne!(v, &w);
            let back = b.moves(Leaf::S, v);
            prop_assert_eq!(back.len(), 1);
            prop_assert_eq!(&back[0].to, &w);
            prop_assert!(b.s_related(v, &w).unwrap().is_some());
        }
    }

    #[test]
    fn t_relation_is_shift_equivariant(seed in 0u64..10_000, shift in -3i64..3, k in -3i64..4) {
        let b = Boundary::new(&fixture("t_pa4")).unwrap();
        if let Some(w) = split_code(&b, seed, shift) {
            for v in b.t_class(&w).unwrap() {
                prop_assert!(b.t_related(&w.shift(k), &v.shift(k)).unwrap().is_some());
            }
        }
    }
}

#[test]
fn periodic_relations_are_equivalences() {
    for t in pa_fixtures().into_iter().chain([fixture("t_cat")]) {
        let b = Boundary::new(&t).unwrap();
        let tab = boundary_code_table(&t).unwrap();
        let per: Vec<&Code> = tab.per_s.iter().collect();
        let rel = |x: &Code, y: &Code| b.s_related(x, y).unwrap().is_some();
        for &x in &per {
            assert!(rel(x, x));
            for &y in &per {
                assert_eq!(rel(x, y), rel(y, x));
                for &z in &per {
                    if rel(x, y) && rel(y, z) {
                        assert!(rel(x, z));
                    }
                }
            }
        }
        let per_u: Vec<&Code> = tab.per_u.iter().collect();
        for &x in &per_u {
            for &y in &per_u {
                assert_eq!(b.u_related(x, y).unwrap().is_some(), b.u_related(y, x).unwrap().is_some());
            }
        }
    }
}

#[test]
fn t_chain_alternates_within_strata() {
    let b = Boundary::new(&fixture("t_pa4")).unwrap();
    let tab = boundary_code_table(b.geometric_type()).unwrap();
    for w in tab.per_s.union(&tab.per_u) {
        for v in b.t_class(w).unwrap() {
            let chain = b.t_related(w, &v).unwrap().unwrap();
            let mut cur = w.clone();
            for step in &chain {
                assert_eq!(step.from, cur);
                cur = step.to.clone();
            }
            assert_eq!(cur, v);
        }
    }
}

#[test]
fn split_codes_are_generated() {
    let b = Boundary::new(&fixture("t_pa4")).unwrap();
    let made = (0..200).filter(|&s| split_code(&b, s, 0).is_some()).count();
    assert!(made > 100, "{made}");
}
