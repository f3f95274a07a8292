use syzygy_core::fixtures;
use syzygy_core::labels::{colored_labeling, gamma_of_labels, AnchorCase, LabelArc};
use syzygy_core::surface::*;
use syzygy_core::{Algebra, Error, Field};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn crossing_examples() {
    assert_eq!(crossing_number(4, &peripheral(0, 2), &plain(1)), 1);
    assert_eq!(crossing_number(4, &peripheral(0, 2), &plain(0)), 0);
    assert_eq!(crossing_number(4, &peripheral(0, 2), &notched(1)), 1);
    assert_eq!(crossing_number(5, &peripheral(0, 3), &peripheral(2, 1)), 2);
    // plain and notched at one point are compatible, at different points not
    assert!(compatible(4, &plain(2), &notched(2)));
    assert!(!compatible(4, &plain(1), &notched(2)));
    assert_eq!(crossing_checked(4, 5, &plain(0), &plain(1)), Err(Error::SizeMismatch(4, 5)));
}

#[test]
fn arc_counts() {
    for n in 2..9 {
        assert_eq!(all_arcs(n).len(), n * n);
    }
}

#[test]
fn translation_has_order_twice_n() {
    for n in [3, 4, 7] {
        for a in all_arcs(n) {
            let mut x = a;
            for k in 1..=2 * n {
                x = x.tau(n);
                if k == n {
                    assert_eq!(x == a, !a.is_radial() || n % 2 == 0, "{a}");
                }
            }
            assert_eq!(x, a);
            assert_eq!(a.tau(n).tau_inverse(n), a);
        }
    }
}

#[test]
fn triangulation_counts() {
    // clusters of type D_n, and the classes up to a global change of tags
    for n in 3..=6 {
        assert_eq!(enumerate_triangulations(n).len(), (3 * n - 2) * binomial(2 * n - 2, n - 1) / n);
        assert_eq!(normalized_triangulations(n).len(), binomial(2 * n - 1, n));
    }
}

#[test]
fn enumerated_sets_are_maximal() {
    for arcs in enumerate_triangulations(5) {
        assert!(is_maximal(5, &arcs));
        assert!(!is_maximal(5, &arcs[1..]));
    }
}

#[test]
fn rejects_crossing_arcs() {
    let bad = vec![plain(0), plain(1), peripheral(0, 2), plain(3)];
    assert!(matches!(Triangulation::new(4, bad), Err(Error::InvalidTriangulation(_))));
    assert!(matches!(peripheral(0, 1).validate(4), Err(Error::InvalidArc(_))));
}

#[test]
fn notched_only_triangulation_is_normalized() {
    let t = Triangulation::new(4, (0..4).map(notched).collect()).unwrap();
    assert_eq!(t, fixtures::punctured_square());
}

#[test]
fn punctured_square_potential() {
    let t = fixtures::punctured_square();
    assert_eq!(t.classify(), TriangulationType::I);
    let qp = t.quiver_with_potential().unwrap();
    assert_eq!(qp.quiver.arrow_count(), 4);
    assert_eq!(qp.potential.len(), 1);
    assert_eq!(qp.potential[0].1.len(), 4);
    let rels = qp.jacobian_relations(Field::default());
    assert_eq!(rels.len(), 4);
    assert!(rels.iter().all(|r| r.terms.len() == 1 && r.terms[0].1.arrows.len() == 3));
    let alg = Algebra::new(t.presentation(Field::default()).unwrap()).unwrap();
    assert_eq!(alg.dimension(), 12);
}

#[test]
fn two_radial_potential_is_a_square() {
    // radial arcs at 0 and 2 with both third sides arcs
    let arcs = vec![plain(0), plain(2), peripheral(0, 2), peripheral(2, 0), peripheral(2, 4), peripheral(4, 0)];
    let t = Triangulation::new(6, arcs).unwrap();
    assert_eq!(t.classify(), TriangulationType::I);
    let qp = t.quiver_with_potential().unwrap();
    assert!(qp.potential.iter().any(|(_, c)| c.len() == 4));
}

#[test]
fn fixture_types() {
    let cases = [
        (fixtures::punctured_square(), TriangulationType::I, 4, 0, 0),
        (fixtures::decagon(), TriangulationType::I, 6, 2, 0),
        (fixtures::type_ii(), TriangulationType::II, 2, 0, 1),
        (fixtures::type_iii(), TriangulationType::III, 0, 0, 1),
    ];
    for (t, ty, m, d, tt) in cases {
        assert_eq!((t.classify(), t.m(), t.d(), t.t()), (ty, m, d, tt), "{:?}", t.arcs);
    }
}

#[test]
fn decagon_labels() {
    let t = fixtures::decagon();
    let l = colored_labeling(&t).unwrap();
    assert_eq!(l.case, AnchorCase::Mixed);
    assert_eq!(l.size(), 8);
    assert_eq!(gamma_of_labels(&t, &l, 4, 3).unwrap(), LabelArc::Arc(notched(3)));
    assert_eq!(gamma_of_labels(&t, &l, 5, 4).unwrap(), LabelArc::Arc(plain(4)));
    assert_eq!(l.labels_at(0), (Some(1), Some(1)));
}

#[test]
fn punctured_square_labels() {
    let t = fixtures::punctured_square();
    let l = colored_labeling(&t).unwrap();
    assert_eq!(l.case, AnchorCase::NoInternal);
    assert_eq!(l.size(), 4);
    for q in 0..4 {
        let (r, b) = l.labels_at(q);
        assert_eq!(r, b);
    }
    assert!(matches!(colored_labeling(&fixtures::type_ii()), Err(Error::NotTypeI)));
}

#[test]
fn projectives_and_injectives_match_translated_arcs() {
    for n in 3..=5 {
        for t in normalized_triangulations(n) {
            let alg = Algebra::new(t.presentation(Field::default()).unwrap()).unwrap();
            for (i, a) in t.arcs.iter().enumerate() {
                assert_eq!(alg.projective(i).unwrap().dims, t.crossing_vector(&a.tau_inverse(n)));
                assert_eq!(alg.injective(i).unwrap().dims, t.crossing_vector(&a.tau(n)));
            }
        }
    }
}
