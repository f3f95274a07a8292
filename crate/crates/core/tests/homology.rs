use syzygy_core::fixtures;
use syzygy_core::homology::{GorensteinVerdict, HomDim, Homology, IndecomposableList};
use syzygy_core::knit::DEFAULT_KNIT_LIMIT;
use syzygy_core::{Algebra, Error, Rep};

fn loop_alg() -> Algebra {
    Algebra::new(fixtures::loop_rad2()).unwrap()
}

#[test]
fn projective_dimensions_in_loop_example() {
    let alg = loop_alg();
    let mut h = Homology::new(&alg);
    let i1 = alg.injective(0).unwrap().clone();
    assert_eq!(h.proj_dim(&i1).unwrap(), HomDim::Finite(2));
    assert_eq!(h.proj_dim(&alg.simple(0)).unwrap(), HomDim::Infinite);
    assert_eq!(h.proj_dim(&alg.simple(1)).unwrap(), HomDim::Finite(1));
    for i in 0..3 {
        assert_eq!(h.proj_dim(alg.projective(i).unwrap()).unwrap(), HomDim::Finite(0));
    }
}

#[test]
fn igusa_todorov_worked_example() {
    let alg = loop_alg();
    let mut h = Homology::new(&alg);
    let m = alg.injective(0).unwrap().direct_sum(&alg.simple(0));
    let r = h.igusa_todorov(&m).unwrap();
    assert_eq!((r.phi, r.psi), (2, 3));
    assert_eq!(&r.ranks[..4], &[2, 2, 1, 1]);
    let p = h.igusa_todorov(alg.projective(0).unwrap()).unwrap();
    assert_eq!((p.phi, p.psi), (0, 0));
}

#[test]
fn finite_projective_dimension_equals_phi_and_psi() {
    let alg = loop_alg();
    let mut h = Homology::new(&alg);
    for m in [alg.injective(0).unwrap().clone(), alg.simple(1), alg.injective(2).unwrap().clone()] {
        let pd = h.proj_dim(&m).unwrap().finite().unwrap();
        let r = h.igusa_todorov(&m).unwrap();
        assert_eq!((r.phi, r.psi), (pd, pd));
    }
}

#[test]
fn ranks_do_not_increase() {
    let alg = Algebra::new(fixtures::mata()).unwrap();
    let mut h = Homology::new(&alg);
    let all = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT).unwrap();
    let m = Rep::direct_sum_all(alg.quiver(), all.entries().iter());
    let r = h.igusa_todorov(&m).unwrap();
    assert!(r.ranks.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn mata_example() {
    let alg = Algebra::new(fixtures::mata()).unwrap();
    let mut h = Homology::new(&alg);
    let rep = h.gorenstein_dimension().unwrap();
    assert_eq!(rep.verdict, GorensteinVerdict::NotGorenstein);
    let i2 = alg.injective(1).unwrap().clone();
    assert_eq!(i2.dims, vec![1, 1, 0, 0, 1]);
    assert_eq!(h.proj_dim(&i2).unwrap(), HomDim::Infinite);
    assert!(!h.is_torsionless(&i2).unwrap());
    assert!(alg.is_isomorphic(&alg.syzygy(&i2), &alg.simple(1)).unwrap());

    let knitted = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT).unwrap();
    let nonproj: Vec<&Rep> = knitted.entries().iter().filter(|m| !alg.is_projective(m)).collect();
    assert_eq!(nonproj.len(), 6);
    let mut listed: Vec<Rep> = (0..5).map(|i| alg.simple(i)).collect();
    listed.push(i2);
    for m in &nonproj {
        assert!(listed.iter().any(|l| alg.is_isomorphic(l, m).unwrap()));
    }
    listed.extend(alg.projectives().iter().cloned());
    let list = IndecomposableList { modules: listed, complete: true };
    assert_eq!(h.it_dimensions(&list).unwrap(), (1, 1));
    let partial = IndecomposableList { modules: list.modules.clone(), complete: false };
    assert!(matches!(h.it_dimensions(&partial), Err(Error::IncompleteIndecomposableList)));
}

#[test]
fn hereditary_is_one_gorenstein() {
    let alg = Algebra::new(fixtures::linear_a(3)).unwrap();
    let mut h = Homology::new(&alg);
    assert_eq!(h.gorenstein_dimension().unwrap().verdict, GorensteinVerdict::Gorenstein(1));
}

#[test]
fn torsionless_examples() {
    let alg = loop_alg();
    let h = Homology::new(&alg);
    for i in 0..3 {
        let rad = alg.radical(alg.projective(i).unwrap()).0;
        assert!(h.is_torsionless(&rad).unwrap());
    }
    assert!(h.is_torsionless(&alg.simple(0)).unwrap());
    assert!(!h.is_torsionless(alg.injective(0).unwrap()).unwrap());
}

#[test]
fn punctured_square_is_selfinjective() {
    let alg = Algebra::new(fixtures::cycle_truncated(4, 3)).unwrap();
    let mut h = Homology::new(&alg);
    let rep = h.selfinjective_report().unwrap();
    assert!(rep.selfinjective);
    assert_eq!(rep.nakayama, vec![2, 3, 0, 1]);
    assert_eq!(rep.order, 2);
    let all = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT).unwrap();
    let nonproj: Vec<Rep> = all.entries().iter().filter(|m| !alg.is_projective(m)).cloned().collect();
    assert_eq!(nonproj.len(), 8);
    assert!(h.verify_tau_periodicity(&nonproj).unwrap().into_iter().all(|x| x));
    assert_eq!(h.gorenstein_dimension().unwrap().verdict, GorensteinVerdict::Gorenstein(0));
    let list = IndecomposableList { modules: all.entries().to_vec(), complete: true };
    assert_eq!(h.it_dimensions(&list).unwrap(), (0, 0));
    for m in &nonproj {
        let bits = h.characterization_bits(m, 0).unwrap();
        assert_eq!(bits.a, [true; 4], "{m:?}");
        assert_eq!(bits.b, [true; 4]);
    }
}

#[test]
fn non_selfinjective_and_point() {
    let alg = loop_alg();
    let h = Homology::new(&alg);
    assert!(!h.selfinjective_report().unwrap().selfinjective);
    assert!(matches!(h.verify_tau_periodicity(&[]), Err(Error::NotSelfinjective)));
    let pt = Algebra::new(fixtures::point()).unwrap();
    let r = Homology::new(&pt).selfinjective_report().unwrap();
    assert!(r.selfinjective);
    assert_eq!(r.order, 1);
}

#[test]
fn projectives_have_no_characterization_bits() {
    let alg = Algebra::new(fixtures::cycle_truncated(4, 3)).unwrap();
    let h = Homology::new(&alg);
    let bits = h.characterization_bits(alg.projective(0).unwrap(), 0).unwrap();
    assert_eq!(bits.a, [false; 4]);
}
