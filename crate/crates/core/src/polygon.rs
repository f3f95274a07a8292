//! Triangulations of the unpunctured polygon (type A).

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{AlgebraPresentation, PathWord, Quiver, RelationElement};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::surface::{Side, ARROWS_FOLLOW_TRAVERSAL};

/// A diagonal `{a, b}` of the `n`-gon, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    pub a: usize,
    pub b: usize,
}

impl Chord {
    pub fn new(n: usize, x: usize, y: usize) -> Result<Chord> {
        let (a, b) = (x.min(y), x.max(y));
        if x >= n || y >= n || b - a < 2 || (a == 0 && b == n - 1) {
            return Err(Error::InvalidArc(format!("chord {{{x},{y}}} of a {n}-gon")));
        }
        Ok(Chord { a, b })
    }

    fn raw(n: usize, x: usize, y: usize) -> Option<Chord> {
        Chord::new(n, x % n, y % n).ok()
    }

    pub fn tau(&self, n: usize) -> Chord {
        Chord::raw(n, self.a + 1, self.b + 1).expect("rotation of a diagonal")
    }

    pub fn tau_inverse(&self, n: usize) -> Chord {
        Chord::raw(n, self.a + n - 1, self.b + n - 1).expect("rotation of a diagonal")
    }

    pub fn name(&self) -> alloc::string::String {
        format!("c{}_{}", self.a, self.b)
    }
}

impl core::fmt::Display for Chord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

pub fn chords_cross(x: &Chord, y: &Chord) -> bool {
    let inside = |p: usize| x.a < p && p < x.b;
    let shared = x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
    !shared && (inside(y.a) != inside(y.b))
}

pub fn all_chords(n: usize) -> Vec<Chord> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            if let Ok(c) = Chord::new(n, a, b) {
                out.push(c);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolygonTriangulation {
    pub n: usize,
    pub chords: Vec<Chord>,
}

/// A triangle `x < y < z` of a polygon triangulation with its sides
/// `[(x,y), (y,z), (x,z)]` in clockwise traversal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolygonTriangle {
    pub vertices: [usize; 3],
    pub sides: [Side; 3],
}

impl PolygonTriangle {
    pub fn is_internal(&self) -> bool {
        self.sides.iter().all(|s| matches!(s, Side::Arc(_)))
    }
}

impl PolygonTriangulation {
    pub fn new(n: usize, chords: Vec<Chord>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidTriangulation(format!("{n}-gon")));
        }
        if chords.len() != n - 3 {
            return Err(Error::InvalidTriangulation(format!("{} chords, expected {}", chords.len(), n - 3)));
        }
        for (i, c) in chords.iter().enumerate() {
            Chord::new(n, c.a, c.b)?;
            for d in &chords[..i] {
                if c == d || chords_cross(c, d) {
                    return Err(Error::InvalidTriangulation(format!("{c} and {d} are not compatible")));
                }
            }
        }
        Ok(PolygonTriangulation { n, chords })
    }

    pub fn index_of(&self, c: &Chord) -> Option<usize> {
        self.chords.iter().position(|x| x == c)
    }

    pub fn contains(&self, c: &Chord) -> bool {
        self.chords.contains(c)
    }

    pub fn crossing_vector(&self, g: &Chord) -> Vec<usize> {
        self.chords.iter().map(|c| usize::from(chords_cross(g, c))).collect()
    }

    fn side(&self, x: usize, y: usize) -> Option<Side> {
        let n = self.n;
        if y == x + 1 || (x == 0 && y == n - 1) {
            return Some(Side::Boundary);
        }
        self.index_of(&Chord { a: x, b: y }).map(Side::Arc)
    }

    pub fn triangles(&self) -> Vec<PolygonTriangle> {
        let n = self.n;
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    if let (Some(s1), Some(s2), Some(s3)) = (self.side(x, y), self.side(y, z), self.side(x, z)) {
                        out.push(PolygonTriangle { vertices: [x, y, z], sides: [s1, s2, s3] });
                    }
                }
            }
        }
        out
    }

    pub fn internal_triangles(&self) -> Vec<PolygonTriangle> {
        self.triangles().into_iter().filter(PolygonTriangle::is_internal).collect()
    }

    pub fn presentation(&self, f: Field) -> Result<AlgebraPresentation> {
        let mut q = Quiver::new();
        for c in &self.chords {
            q.add_vertex(c.name());
        }
        let mut cycles = Vec::new();
        for t in self.triangles() {
            let mut cyc = Vec::new();
            for i in 0..3 {
                let (a, b) = if ARROWS_FOLLOW_TRAVERSAL { (t.sides[i], t.sides[(i + 1) % 3]) } else { (t.sides[(i + 1) % 3], t.sides[i]) };
                if let (Side::Arc(a), Side::Arc(b)) = (a, b) {
                    let k = q.arrow_count();
                    cyc.push(q.add_arrow(format!("a{k}"), a, b));
                }
            }
            if cyc.len() == 3 {
                if !ARROWS_FOLLOW_TRAVERSAL {
                    cyc.reverse();
                }
                cycles.push(cyc);
            }
        }
        // derivatives of a sum of disjoint 3-cycles: each length-2 subpath
        let mut relations = Vec::new();
        for cyc in &cycles {
            for k in 0..3 {
                let arrows = alloc::vec![cyc[(k + 1) % 3], cyc[(k + 2) % 3]];
                let start = q.arrows[arrows[0]].source;
                relations.push(RelationElement { terms: alloc::vec![(1, PathWord { start, arrows })] });
            }
        }
        AlgebraPresentation::new(q, relations, f).validate()
    }

    /// For each internal triangle the three chords obtained by moving one
    /// endpoint of each side counterclockwise into the triangle.
    pub fn internal_triangle_cmp_arcs(&self) -> Vec<[Chord; 3]> {
        let n = self.n;
        self.internal_triangles()
            .iter()
            .map(|t| {
                let [x, y, z] = t.vertices;
                let mv = |p: usize, q: usize| Chord::raw(n, p, q).expect("move through an internal triangle");
                [mv(x + n - 1, y), mv(y - 1, z), mv(x, z - 1)]
            })
            .collect()
    }
}

pub fn enumerate_polygon_triangulations(n: usize) -> Vec<PolygonTriangulation> {
    let chords = all_chords(n);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(k: usize, chords: &[Chord], start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<Chord>>) {
        if chosen.len() == k {
            out.push(chosen.iter().map(|&i| chords[i]).collect());
            return;
        }
        for i in start..chords.len() {
            if chosen.iter().all(|&j| !chords_cross(&chords[i], &chords[j])) {
                chosen.push(i);
                rec(k, chords, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut sets = Vec::new();
    if n >= 3 {
        rec(n - 3, &chords, 0, &mut chosen, &mut sets);
    }
    for s in sets {
        out.push(PolygonTriangulation::new(n, s).expect("enumerated sets are triangulations"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132];
        for n in 3..=8 {
            assert_eq!(enumerate_polygon_triangulations(n).len(), catalan[n - 2]);
        }
    }

    #[test]
    fn fan_has_no_internal_triangle() {
        let n = 7;
        let fan: Vec<Chord> = (2..n - 1).map(|b| Chord::new(n, 0, b).unwrap()).collect();
        let t = PolygonTriangulation::new(n, fan).unwrap();
        assert!(t.internal_triangles().is_empty());
        assert!(t.internal_triangle_cmp_arcs().is_empty());
        let p = t.presentation(Field::default()).unwrap();
        assert!(p.relations.is_empty());
        assert_eq!(p.quiver.arrow_count(), n - 4);
    }

    #[test]
    fn one_internal_triangle() {
        let t = PolygonTriangulation::new(
            6,
            alloc::vec![Chord::new(6, 0, 2).unwrap(), Chord::new(6, 2, 4).unwrap(), Chord::new(6, 0, 4).unwrap()],
        )
        .unwrap();
        assert_eq!(t.internal_triangles().len(), 1);
        let p = t.presentation(Field::default()).unwrap();
        assert_eq!(p.quiver.arrow_count(), 3);
        assert_eq!(p.relations.len(), 3);
        let arcs = t.internal_triangle_cmp_arcs();
        assert_eq!(arcs.len(), 1);
        for c in arcs[0] {
            assert_eq!(t.crossing_vector(&c).iter().sum::<usize>(), 1);
        }
    }

    #[test]
    fn rotation_has_order_n() {
        let n = 7;
        for c in all_chords(n) {
            let mut x = c;
            for _ in 0..n {
                x = x.tau(n);
            }
            assert_eq!(x, c);
            assert_eq!(c.tau(n).tau_inverse(n), c);
        }
    }
}
