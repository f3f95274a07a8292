use proptest::prelude::*;
use syzygy_core::labels::{blue_move, odot_pairs, red_move, syzygy_on_labels, tau_tilde};
use syzygy_core::model::PuncturedModel;
use syzygy_core::surface::{all_arcs, crossing_number, normalized_triangulations};
use syzygy_core::Field;

fn arc_pair() -> impl Strategy<Value = (usize, usize, usize)> {
    (3usize..9).prop_flat_map(|n| (Just(n), 0..n * n, 0..n * n))
}

proptest! {
    #[test]
    fn crossing_is_symmetric_and_rotation_invariant((n, a, b) in arc_pair()) {
        let arcs = all_arcs(n);
        let (x, y) = (arcs[a], arcs[b]);
        let e = crossing_number(n, &x, &y);
        prop_assert_eq!(e, crossing_number(n, &y, &x));
        prop_assert_eq!(e, crossing_number(n, &x.tau(n), &y.tau(n)));
        prop_assert_eq!(crossing_number(n, &x, &x), 0);
    }

    #[test]
    fn label_syzygy_is_a_bijection(n in 3usize..12, k in 0usize..200) {
        let pairs = odot_pairs(n);
        let (i, j) = pairs[k % pairs.len()];
        let mut img: Vec<_> = pairs.iter().map(|&(a, b)| syzygy_on_labels(n, a, b).unwrap()).collect();
        img.sort();
        prop_assert_eq!(&img, &pairs);
        let mut x = (i, j);
        for _ in 0..2 {
            x = syzygy_on_labels(n, x.0, x.1).unwrap();
        }
        prop_assert_eq!(tau_tilde(n, x.0, x.1).unwrap(), (i, j));
        let mut y = (i, j);
        for _ in 0..n {
            y = tau_tilde(n, y.0, y.1).unwrap();
        }
        prop_assert_eq!(y, (i, j));
    }

    #[test]
    fn moves_stay_in_range_and_commute(n in 4usize..12, k in 0usize..200) {
        let pairs = odot_pairs(n);
        let (i, j) = pairs[k % pairs.len()];
        let r = red_move(n, i, j);
        let b = blue_move(n, i, j);
        prop_assert!(r.is_ok() || b.is_ok());
        if let (Ok(r), Ok(b)) = (r, b) {
            prop_assert_eq!(blue_move(n, r.0, r.1).unwrap(), red_move(n, b.0, b.1).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hom_spaces_are_dual(pick in 0usize..35, a in 0usize..12, b in 0usize..12) {
        let t = normalized_triangulations(4)[pick].clone();
        let m = PuncturedModel::new(t, Field::default()).unwrap();
        let alg = m.alg();
        let mods = m.family.modules();
        let (x, y) = (&mods[a], &mods[b]);
        prop_assert_eq!(alg.hom_dim(x, y), alg.op.hom_dim(&y.dual(), &x.dual()));
    }

    #[test]
    fn decomposition_recovers_summands(pick in 0usize..126, a in 0usize..20, b in 0usize..20) {
        let t = normalized_triangulations(5)[pick].clone();
        let m = PuncturedModel::new(t, Field::default()).unwrap();
        let alg = m.alg();
        let mods = m.family.modules();
        let (x, y) = (&mods[a], &mods[b]);
        let parts = alg.decompose(&x.direct_sum(y)).unwrap();
        prop_assert_eq!(parts.len(), 2);
        let hit = |p: &syzygy_core::Rep| alg.is_isomorphic(p, x).unwrap() || alg.is_isomorphic(p, y).unwrap();
        prop_assert!(parts.iter().all(hit));
        let again = alg.decompose(&parts[0]).unwrap();
        prop_assert_eq!(again.len(), 1);
    }
}
