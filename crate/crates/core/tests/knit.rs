use syzygy_core::fixtures;
use syzygy_core::knit::DEFAULT_KNIT_LIMIT;
use syzygy_core::Algebra;

fn count(pres: syzygy_core::AlgebraPresentation) -> usize {
    let alg = Algebra::new(pres).unwrap();
    let reg = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT).unwrap();
    for m in reg.entries() {
        alg.check(m).unwrap();
        assert!(alg.is_indecomposable(m).unwrap());
    }
    reg.len()
}

#[test]
fn hereditary_a3_has_six() {
    assert_eq!(count(fixtures::linear_a(3)), 6);
    assert_eq!(count(fixtures::linear_a(5)), 15);
}

#[test]
fn loop_example_has_seven() {
    // separated quiver: A3 + A2 + A1, minus the three simples counted twice
    assert_eq!(count(fixtures::loop_rad2()), 7);
}

#[test]
fn mata_example_has_eleven() {
    // five projectives, the five simples and I(2)
    assert_eq!(count(fixtures::mata()), 11);
}

#[test]
fn selfinjective_nakayama_has_twelve() {
    assert_eq!(count(fixtures::cycle_truncated(4, 3)), 12);
}

#[test]
fn almost_split_sequences_have_expected_middle_terms() {
    // 1 -> 2 -> 3: 0 -> S(3) -> P(2) -> S(2) -> 0
    let alg = Algebra::new(fixtures::linear_a(3)).unwrap();
    let e = alg.ar_middle_term(&alg.simple(1)).unwrap();
    assert!(alg.is_isomorphic(&e, alg.projective(1).unwrap()).unwrap());
}
