use syzygy_core::cmp::{build_stable_ar_quiver, cmp_catalog, expected_size, MoveColor, StableVertex};
use syzygy_core::fixtures;
use syzygy_core::homology::Homology;
use syzygy_core::labels::{syzygy_on_labels, tau_tilde};
use syzygy_core::model::{PolygonModel, PuncturedModel};
use syzygy_core::polygon::{enumerate_polygon_triangulations, Chord, PolygonTriangulation};
use syzygy_core::surface::{normalized_triangulations, Triangulation, TriangulationType};
use syzygy_core::verify::{check_polygon, check_triangulation, stable_quiver_report};
use syzygy_core::Field;

fn model(t: Triangulation) -> PuncturedModel {
    PuncturedModel::new(t, Field::default()).unwrap()
}

#[test]
fn size_formula() {
    assert_eq!(expected_size(TriangulationType::I, 8, 0), Some(48));
    assert_eq!(expected_size(TriangulationType::I, 4, 1), Some(11));
    assert_eq!(expected_size(TriangulationType::II, 0, 0), Some(0));
    assert_eq!(expected_size(TriangulationType::III, 0, 2), Some(9));
    assert_eq!(expected_size(TriangulationType::Other, 5, 1), None);
}

#[test]
fn punctured_square_catalogue() {
    let m = model(fixtures::punctured_square());
    let cat = cmp_catalog(&m).unwrap();
    assert_eq!(cat.len(), 8);
    assert!(cat.delta.is_empty() && cat.club.is_empty());
    let mut h = Homology::new(m.alg());
    assert_eq!(h.gorenstein_dimension().unwrap().dimension(), Some(0));
    // selfinjective: every non-projective indecomposable is Cohen-Macaulay
    let nonproj = m.family.modules().iter().filter(|x| !m.alg().is_projective(x)).count();
    assert_eq!(nonproj, 8);
    let q = build_stable_ar_quiver(&cat, &m).unwrap();
    for k in 0..q.vertices.len() {
        let mut x = k;
        for step in 1..=4 {
            x = q.tau[x].unwrap();
            assert_eq!(x == k, step == 4);
        }
    }
}

#[test]
fn decagon_syzygies_follow_labels() {
    let m = model(fixtures::decagon());
    let cat = cmp_catalog(&m).unwrap();
    let l = cat.labeling.as_ref().unwrap();
    assert_eq!(cat.odot.len(), 48);
    let alg = m.alg();
    let module = |(i, j): (usize, usize)| {
        let e = cat.odot.iter().find(|e| (e.i, e.j) == (i, j)).unwrap();
        m.arc_to_rep(&e.arc.arc().unwrap())
    };
    for e in &cat.odot {
        let x = module((e.i, e.j));
        let om = alg.decompose(&alg.syzygy(&x)).unwrap();
        assert_eq!(om.len(), 1);
        assert!(alg.is_isomorphic(&om[0], &module(syzygy_on_labels(l.size(), e.i, e.j).unwrap())).unwrap());
        let back = alg.syzygy_power(&module(tau_tilde(l.size(), e.i, e.j).unwrap()), 2);
        assert!(alg.is_isomorphic(&back, &x).unwrap());
    }
}

#[test]
fn decagon_stable_quiver() {
    let m = model(fixtures::decagon());
    let (q, mesh, _) = stable_quiver_report(&m).unwrap();
    let mesh = mesh.unwrap();
    assert_eq!(q.vertices.len(), 48);
    assert_eq!((q.count(MoveColor::Red), q.count(MoveColor::Blue)), (40, 40));
    assert_eq!(mesh.two_move_sources, 32);
    assert!(mesh.sources_agree_with_mesh_rule);
    assert!(mesh.stable_hom.ok());
    let dot = q.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("color=red").count(), 40);
    assert!(dot.contains("M(r4,b3)"));
}

#[test]
fn type_ii_has_one_isolated_orbit() {
    let m = model(fixtures::type_ii());
    let (q, mesh, homs) = stable_quiver_report(&m).unwrap();
    assert!(mesh.is_none());
    assert_eq!(q.vertices.len(), 3);
    assert!(q.arrows.is_empty());
    assert!(homs.iter().all(|&h| h == 0));
    let mut x = 0;
    for step in 1..=3 {
        x = q.tau[x].unwrap();
        assert_eq!(x == 0, step == 3);
    }
}

#[test]
fn type_iii_catalogue() {
    let m = model(fixtures::type_iii());
    let cat = cmp_catalog(&m).unwrap();
    assert_eq!((cat.delta.len(), cat.club.len(), cat.len()), (1, 3, 6));
    assert!(cat.club.iter().all(|c| c.arc.is_some()));
    let (q, _, homs) = stable_quiver_report(&m).unwrap();
    assert!(q.vertices.iter().filter(|v| matches!(v, StableVertex::Club(_))).count() == 3);
    assert!(homs.iter().all(|&h| h == 0));
}

#[test]
fn small_sweep_passes_every_check() {
    for n in 3..=5 {
        for t in normalized_triangulations(n) {
            let c = check_triangulation(&t, Field::default(), 0).unwrap();
            assert!(c.cmp_match && c.size_ok() && c.it_ok(), "{:?}", t.arcs);
            for tally in [&c.calibration, &c.omega, &c.tau_tilde, &c.period3, &c.bits] {
                assert!(tally.ok(), "{:?}", t.arcs);
            }
        }
    }
}

#[test]
fn polygon_with_one_internal_triangle() {
    let chords = vec![Chord::new(6, 0, 2).unwrap(), Chord::new(6, 2, 4).unwrap(), Chord::new(6, 0, 4).unwrap()];
    let t = PolygonTriangulation::new(6, chords).unwrap();
    let c = check_polygon(&t, Field::default()).unwrap();
    assert_eq!(c.t, 1);
    assert_eq!(c.gorenstein, Some(0));
    assert!(c.cmp_match);
    assert_eq!((c.period3.pass, c.period3.fail), (3, 0));
    let pm = PolygonModel::new(t, Field::default()).unwrap();
    assert_eq!(pm.family.modules().len(), 6 * 3 / 2 - 3);
}

#[test]
fn polygons_without_internal_triangles_have_no_cmp() {
    for t in enumerate_polygon_triangulations(6) {
        if t.internal_triangles().is_empty() {
            let c = check_polygon(&t, Field::default()).unwrap();
            assert!(c.cmp_match && c.t == 0);
        }
    }
}

#[test]
fn every_small_triangulation_is_classified() {
    for n in 3..=6 {
        assert!(normalized_triangulations(n).iter().all(|t| t.classify() != TriangulationType::Other));
    }
}
