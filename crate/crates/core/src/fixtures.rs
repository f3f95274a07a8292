//! Named algebras used throughout the test suites and the CLI.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgebraPresentation, PathWord, Quiver, RelationElement};
use crate::field::Field;
use crate::surface::{notched, peripheral, plain, TaggedArc, Triangulation};

/// All paths of length exactly `k` as monomial relations.
pub fn monomial_relations(q: &Quiver, k: usize) -> Vec<RelationElement> {
    let mut frontier: Vec<PathWord> = (0..q.vertex_count()).map(PathWord::lazy).collect();
    for _ in 0..k {
        let mut next = Vec::new();
        for w in &frontier {
            for a in q.arrows_from(w.end(q)) {
                let mut arrows = w.arrows.clone();
                arrows.push(a);
                next.push(PathWord { start: w.start, arrows });
            }
        }
        frontier = next;
    }
    frontier.into_iter().map(|w| RelationElement { terms: vec![(1, w)] }).collect()
}

fn numbered(n: usize) -> Quiver {
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(format!("{i}"));
    }
    q
}

/// Linear quiver 1 → 2 → … → n without relations.
pub fn linear_a(n: usize) -> AlgebraPresentation {
    let mut q = numbered(n);
    for i in 0..n.saturating_sub(1) {
        q.add_arrow(format!("a{}", i + 1), i, i + 1);
    }
    AlgebraPresentation::new(q, Vec::new(), Field::default())
}

/// Loop at 1, arrows 1 → 2 → 3, modulo the square of the radical.
pub fn loop_rad2() -> AlgebraPresentation {
    let mut q = numbered(3);
    q.add_arrow("x", 0, 0);
    q.add_arrow("a", 0, 1);
    q.add_arrow("b", 1, 2);
    let rels = monomial_relations(&q, 2);
    AlgebraPresentation::new(q, rels, Field::default())
}

/// 1 → 2 → 3 → 4 → 5 → 2 modulo the square of the radical.
pub fn mata() -> AlgebraPresentation {
    let mut q = numbered(5);
    q.add_arrow("a", 0, 1);
    q.add_arrow("b", 1, 2);
    q.add_arrow("c", 2, 3);
    q.add_arrow("d", 3, 4);
    q.add_arrow("e", 4, 1);
    let rels = monomial_relations(&q, 2);
    AlgebraPresentation::new(q, rels, Field::default())
}

/// Oriented `n`-cycle modulo all paths of length `k`; `k = 0` means no relations.
pub fn cycle_truncated(n: usize, k: usize) -> AlgebraPresentation {
    let mut q = numbered(n);
    for i in 0..n {
        q.add_arrow(format!("a{}", i + 1), i, (i + 1) % n);
    }
    let rels = if k == 0 { Vec::new() } else { monomial_relations(&q, k) };
    AlgebraPresentation::new(q, rels, Field::default())
}

/// One vertex, no arrows.
pub fn point() -> AlgebraPresentation {
    AlgebraPresentation::new(numbered(1), Vec::new(), Field::default())
}

/// Once-punctured square with the four plain radial arcs.
pub fn punctured_square() -> Triangulation {
    Triangulation::new(4, (0..4).map(plain).collect()).expect("valid triangulation")
}

/// Ten marked points, radial arcs at `0, 1, 3, 5, 7, 8` and internal
/// triangles at the puncture on either side of the runs.
pub fn decagon() -> Triangulation {
    let mut arcs: Vec<TaggedArc> = [0, 1, 3, 5, 7, 8].into_iter().map(plain).collect();
    arcs.extend([(1, 3), (3, 5), (5, 7), (8, 0)].map(|(a, b)| peripheral(a, b)));
    Triangulation::new(10, arcs).expect("valid triangulation")
}

/// Two consecutive radial arcs and one internal triangle away from the
/// puncture.
pub fn type_ii() -> Triangulation {
    let arcs = vec![plain(0), plain(1), peripheral(1, 0), peripheral(1, 3), peripheral(3, 5), peripheral(1, 5)];
    Triangulation::new(6, arcs).expect("valid triangulation")
}

/// A self-folded pair at `0`, both remaining sides of the loop triangle
/// arcs, and one internal triangle away from the puncture.
pub fn type_iii() -> Triangulation {
    let arcs = vec![plain(0), notched(0), peripheral(0, 2), peripheral(0, 4), peripheral(2, 4), peripheral(4, 0)];
    Triangulation::new(6, arcs).expect("valid triangulation")
}

/// Builtin inputs by name.
pub fn triangulation(name: &str) -> Option<Triangulation> {
    match name {
        "punctured-square" => Some(punctured_square()),
        "decagon" => Some(decagon()),
        "type-ii" => Some(type_ii()),
        "type-iii" => Some(type_iii()),
        _ => None,
    }
}

pub fn algebra(name: &str) -> Option<AlgebraPresentation> {
    match name {
        "loop-rad2" => Some(loop_rad2()),
        "mata" => Some(mata()),
        _ => None,
    }
}

pub const TRIANGULATION_FIXTURES: [&str; 4] = ["punctured-square", "decagon", "type-ii", "type-iii"];
pub const ALGEBRA_FIXTURES: [&str; 2] = ["loop-rad2", "mata"];
