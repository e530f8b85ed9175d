use gtype_core::{parse_geometric_type, serialize, validate};
use gtype_corpus::{random_type, rng, Params};
use num_bigint::BigUint;
use proptest::prelude::*;

fn any_type() -> impl Strategy<Value = gtype_core::GeometricType> {
    let p = Params {
        max_n: 4,
        max_h: 4,
        max_v: 4,
        allow_double_boundary: true,
        binary_only: false,
    };
    any::<u64>().prop_map(move |seed| random_type(&mut rng(seed), &p))
}

proptest! {
    #[test]
    fn invert_is_an_involution(t in any_type()) {
        let inv = t.invert();
        prop_assert!(validate(&inv.to_candidate()).ok);
        prop_assert_eq!(inv.invert(), t);
    }

    #[test]
    fn incidence_sums_and_transpose(t in any_type()) {
        let a = t.incidence_matrix();
        let rows: Vec<BigUint> = t.hs().iter().map(|&x| BigUint::from(x)).collect();
        let cols: Vec<BigUint> = t.vs().iter().map(|&x| BigUint::from(x)).collect();
        prop_assert_eq!(a.row_sums(), rows);
        prop_assert_eq!(a.col_sums(), cols);
        prop_assert_eq!(t.invert().incidence_matrix(), a.transpose());
    }

    #[test]
    fn serialize_reparses(t in any_type()) {
        let s = serialize(&t);
        let back = parse_geometric_type(&s).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(serialize(&back), s);
    }

    #[test]
    fn map_order_is_irrelevant(t in any_type(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let s = serialize(&t);
        let mut lines: Vec<&str> = s.lines().collect();
        let (head, maps) = lines.split_at_mut(4);
        maps.shuffle(&mut rng(seed));
        let shuffled = head.iter().chain(maps.iter()).cloned().collect::<Vec<_>>().join("\n");
        prop_assert_eq!(serialize(&parse_geometric_type(&shuffled).unwrap()), s);
    }
}
