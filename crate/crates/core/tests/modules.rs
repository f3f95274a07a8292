use syzygy_core::fixtures;
use syzygy_core::{Algebra, Field, Matrix, Rep};

fn loop_alg() -> Algebra {
    Algebra::new(fixtures::loop_rad2()).unwrap()
}

/// Uniserial "1 over 2" for the loop example: the arrow 1 -> 2 acts as the identity.
fn uniserial_12(alg: &Algebra) -> Rep {
    let mut m = Rep::from_dims(alg.quiver(), vec![1, 1, 0]);
    m.maps[1] = Matrix::identity(1);
    m
}

#[test]
fn projectives_of_loop_example() {
    let alg = loop_alg();
    assert_eq!(alg.projective(0).unwrap().dims, vec![2, 1, 0]);
    assert_eq!(alg.projective(1).unwrap().dims, vec![0, 1, 1]);
    assert_eq!(*alg.projective(2).unwrap(), alg.simple(2));
    assert_eq!(alg.injective(0).unwrap().dims, vec![2, 0, 0]);
    for i in 0..3 {
        alg.check(alg.projective(i).unwrap()).unwrap();
        alg.check(alg.injective(i).unwrap()).unwrap();
    }
}

#[test]
fn injective_of_source_is_simple() {
    let alg = Algebra::new(fixtures::linear_a(3)).unwrap();
    assert!(alg.is_isomorphic(alg.injective(0).unwrap(), &alg.simple(0)).unwrap());
}

#[test]
fn hom_from_projective_counts_vertex() {
    let alg = loop_alg();
    let i1 = alg.injective(0).unwrap().clone();
    assert_eq!(alg.hom_basis(alg.projective(0).unwrap(), &i1).unwrap().len(), 2);
    let fixtures = [i1.clone(), alg.simple(0), uniserial_12(&alg), alg.regular()];
    for m in &fixtures {
        for i in 0..3 {
            assert_eq!(alg.hom_dim(alg.projective(i).unwrap(), m), m.dims[i]);
        }
        assert!(alg.hom_basis(m, &Rep::zero(alg.quiver())).unwrap().is_empty());
    }
}

#[test]
fn syzygies_of_loop_example() {
    let alg = loop_alg();
    let s1 = alg.simple(0);
    let om = alg.syzygy(&s1);
    let parts = alg.decompose(&om).unwrap();
    assert_eq!(parts.len(), 2);
    let want = Rep::direct_sum_all(alg.quiver(), [&alg.simple(0), &alg.simple(1)]);
    assert!(alg.is_isomorphic(&om, &want).unwrap());

    let i1 = alg.injective(0).unwrap().clone();
    let cover = alg.projective_cover(&i1).unwrap();
    assert_eq!(cover.tops, vec![0]);
    assert!(alg.is_isomorphic(&alg.syzygy(&i1), &alg.simple(1)).unwrap());
    assert!(alg.is_isomorphic(&alg.syzygy_power(&i1, 2), &alg.simple(2)).unwrap());
    assert!(alg.syzygy_power(&i1, 3).is_zero());
    for i in 0..3 {
        assert!(alg.syzygy(alg.projective(i).unwrap()).is_zero());
    }
}

#[test]
fn radical_and_top() {
    let alg = loop_alg();
    let p1 = alg.projective(0).unwrap();
    let (rad, _) = alg.radical(p1);
    let want = Rep::direct_sum_all(alg.quiver(), [&alg.simple(0), &alg.simple(1)]);
    assert!(alg.is_isomorphic(&rad, &want).unwrap());
    let (top, _) = alg.top(p1);
    assert_eq!(top, alg.simple(0));
    assert!(alg.radical(&want).0.is_zero());
}

#[test]
fn kernel_cokernel_identities() {
    let alg = loop_alg();
    let m = alg.injective(0).unwrap().clone();
    let id = syzygy_core::RepMap::identity(&m);
    assert!(alg.kernel(&m, &id).0.is_zero());
    let zero = syzygy_core::RepMap::zero(&m, &m);
    let (c, _) = alg.cokernel(&m, &zero);
    assert!(alg.is_isomorphic(&c, &m).unwrap());
}

#[test]
fn decompose_sum() {
    let alg = loop_alg();
    let m = Rep::direct_sum_all(alg.quiver(), [&alg.simple(0), &alg.simple(0), alg.projective(1).unwrap()]);
    let parts = alg.decompose(&m).unwrap();
    assert_eq!(parts.len(), 3);
    let simples = parts.iter().filter(|p| alg.is_isomorphic(p, &alg.simple(0)).unwrap()).count();
    assert_eq!(simples, 2);
    assert!(parts.iter().any(|p| alg.is_isomorphic(p, alg.projective(1).unwrap()).unwrap()));
    for p in &parts {
        assert_eq!(alg.decompose(p).unwrap().len(), 1);
    }
}

#[test]
fn same_dimension_vector_not_isomorphic() {
    let alg = loop_alg();
    let split = Rep::direct_sum_all(alg.quiver(), [&alg.simple(0), &alg.simple(1)]);
    let uni = uniserial_12(&alg);
    alg.check(&uni).unwrap();
    assert!(!alg.is_isomorphic(&split, &uni).unwrap());
    assert!(!alg.is_isomorphic(&alg.simple(0), &alg.simple(1)).unwrap());
    assert!(alg.is_isomorphic(&uni, &uni.clone()).unwrap());
}

#[test]
fn projectives_are_indecomposable() {
    for pres in [fixtures::loop_rad2(), fixtures::mata(), fixtures::cycle_truncated(4, 3), fixtures::linear_a(4)] {
        let alg = Algebra::new(pres).unwrap();
        for i in 0..alg.vertex_count() {
            assert!(alg.is_indecomposable(alg.projective(i).unwrap()).unwrap());
            assert!(alg.is_indecomposable(alg.injective(i).unwrap()).unwrap());
        }
    }
}

#[test]
fn duality_preserves_hom_dimensions() {
    let alg = loop_alg();
    let mods = [alg.simple(0), alg.simple(1), uniserial_12(&alg), alg.injective(0).unwrap().clone()];
    for m in &mods {
        for n in &mods {
            assert_eq!(alg.hom_dim(m, n), alg.op.hom_dim(&n.dual(), &m.dual()));
        }
    }
    for i in 0..3 {
        assert!(alg.op.is_isomorphic_seeded(&alg.projective(i).unwrap().dual(), alg.op.injective(i).unwrap(), 1).unwrap());
    }
}

#[test]
fn translates_invert_each_other() {
    for pres in [fixtures::loop_rad2(), fixtures::mata(), fixtures::linear_a(3), fixtures::cycle_truncated(4, 3)] {
        let alg = Algebra::new(pres).unwrap();
        for i in 0..alg.vertex_count() {
            assert!(alg.ar_translate(alg.projective(i).unwrap()).is_zero());
            assert!(alg.ar_translate_inverse(alg.injective(i).unwrap()).is_zero());
            let s = alg.simple(i);
            if !alg.is_projective(&s) {
                let t = alg.ar_translate(&s);
                alg.check(&t).unwrap();
                assert!(alg.is_isomorphic(&alg.ar_translate_inverse(&t), &s).unwrap());
            }
            if !alg.is_injective(&s) {
                let t = alg.ar_translate_inverse(&s);
                alg.check(&t).unwrap();
                assert!(alg.is_isomorphic(&alg.ar_translate(&t), &s).unwrap());
            }
        }
    }
}

#[test]
fn ar_translate_on_hereditary_a3() {
    // tau S(3) = S(2)... for 1 -> 2 -> 3: S(3) is projective, tau S(2) = S(3), tau S(1) = S(2)
    let alg = Algebra::new(fixtures::linear_a(3)).unwrap();
    assert!(alg.is_isomorphic(&alg.ar_translate(&alg.simple(1)), &alg.simple(2)).unwrap());
    assert!(alg.is_isomorphic(&alg.ar_translate(&alg.simple(0)), &alg.simple(1)).unwrap());
}

#[test]
fn ext_against_algebra_vanishes_on_projectives() {
    let alg = loop_alg();
    for i in 0..3 {
        assert_eq!(alg.ext_against_algebra(alg.projective(i).unwrap(), 1), 0);
    }
    // S(1) has a non-split extension by P-summands: Ext^1(S(1), B) != 0
    assert!(alg.ext_against_algebra(&alg.simple(1), 1) > 0);
}

#[test]
fn small_field_is_reported() {
    let mut pres = fixtures::loop_rad2();
    pres.field = Field::new(2).unwrap();
    let alg = Algebra::new(pres).unwrap();
    let m = alg.regular();
    assert!(matches!(alg.endomorphism_ring(&m), Err(syzygy_core::Error::FieldTooSmall { .. })));
}
