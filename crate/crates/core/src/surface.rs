//! Tagged arcs of the once-punctured disc, triangulations, their adjacency
//! quivers with potential, and chords of the unpunctured polygon.
//!
//! Boundary points are `0..n` in clockwise order, so the clockwise
//! neighbour of `q` is `q + 1 mod n`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgebraPresentation, PathWord, Quiver, RelationElement};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Plain,
    Notched,
}

impl Tag {
    pub fn flip(self) -> Tag {
        match self {
            Tag::Plain => Tag::Notched,
            Tag::Notched => Tag::Plain,
        }
    }
}

/// An arc of the punctured disc with `n` boundary points.
///
/// `Peripheral { from: q, to: s }` runs clockwise around the puncture from
/// `q` to `s`; it cuts off the boundary points `q+1, ..., s-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TaggedArc {
    Radial { at: usize, tag: Tag },
    Peripheral { from: usize, to: usize },
}

use TaggedArc::{Peripheral, Radial};

pub fn plain(at: usize) -> TaggedArc {
    Radial { at, tag: Tag::Plain }
}

pub fn notched(at: usize) -> TaggedArc {
    Radial { at, tag: Tag::Notched }
}

pub fn peripheral(from: usize, to: usize) -> TaggedArc {
    Peripheral { from, to }
}

/// Whether `x` lies strictly inside the clockwise interval from `q` to `s`.
fn strictly_inside(n: usize, q: usize, s: usize, x: usize) -> bool {
    let len = (s + n - q) % n;
    let off = (x + n - q) % n;
    off > 0 && off < len
}

impl TaggedArc {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            Radial { at, .. } if at < n => Ok(()),
            Peripheral { from, to } if from < n && to < n && to != from && to != (from + 1) % n => Ok(()),
            _ => Err(Error::InvalidArc(format!("{self:?} on {n} points"))),
        }
    }

    pub fn is_radial(&self) -> bool {
        matches!(self, Radial { .. })
    }

    /// Cut-off boundary points of a peripheral arc.
    pub fn cut_off(&self, n: usize) -> Vec<usize> {
        match *self {
            Peripheral { from, to } => {
                let len = (to + n - from) % n;
                (1..len).map(|k| (from + k) % n).collect()
            }
            Radial { .. } => Vec::new(),
        }
    }

    pub fn tau(&self, n: usize) -> TaggedArc {
        match *self {
            Radial { at, tag } => Radial { at: (at + 1) % n, tag: tag.flip() },
            Peripheral { from, to } => Peripheral { from: (from + 1) % n, to: (to + 1) % n },
        }
    }

    pub fn tau_inverse(&self, n: usize) -> TaggedArc {
        match *self {
            Radial { at, tag } => Radial { at: (at + n - 1) % n, tag: tag.flip() },
            Peripheral { from, to } => Peripheral { from: (from + n - 1) % n, to: (to + n - 1) % n },
        }
    }

    pub fn flip_tag(&self) -> TaggedArc {
        match *self {
            Radial { at, tag } => Radial { at, tag: tag.flip() },
            p => p,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Radial { at, tag: Tag::Plain } => format!("r{at}"),
            Radial { at, tag: Tag::Notched } => format!("n{at}"),
            Peripheral { from, to } => format!("g{from}_{to}"),
        }
    }
}

impl core::fmt::Display for TaggedArc {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            Radial { at, tag: Tag::Plain } => write!(f, "γ({at},{at})"),
            Radial { at, tag: Tag::Notched } => write!(f, "γ⋈({at},{at})"),
            Peripheral { from, to } => write!(f, "γ({from},{to})"),
        }
    }
}

/// Crossing number of two tagged arcs on a disc with `n` boundary points.
pub fn crossing_number(n: usize, a: &TaggedArc, b: &TaggedArc) -> usize {
    match (*a, *b) {
        (Radial { at: p, tag: s }, Radial { at: q, tag: t }) => usize::from(s != t && p != q),
        (Radial { at, .. }, Peripheral { from, to }) | (Peripheral { from, to }, Radial { at, .. }) => {
            usize::from(strictly_inside(n, from, to, at))
        }
        (Peripheral { from: q, to: s }, Peripheral { from: q2, to: s2 }) => {
            let x = usize::from(strictly_inside(n, q, s, q2)) + usize::from(strictly_inside(n, q, s, s2));
            let y = usize::from(strictly_inside(n, q2, s2, q)) + usize::from(strictly_inside(n, q2, s2, s));
            x.min(y)
        }
    }
}

pub fn crossing_checked(n: usize, m: usize, a: &TaggedArc, b: &TaggedArc) -> Result<usize> {
    if n != m {
        return Err(Error::SizeMismatch(n, m));
    }
    Ok(crossing_number(n, a, b))
}

pub fn compatible(n: usize, a: &TaggedArc, b: &TaggedArc) -> bool {
    a != b && crossing_number(n, a, b) == 0
}

/// All `n^2` tagged arcs, in a fixed order.
pub fn all_arcs(n: usize) -> Vec<TaggedArc> {
    let mut out = Vec::with_capacity(n * n);
    for q in 0..n {
        out.push(plain(q));
        out.push(notched(q));
    }
    for q in 0..n {
        for k in 2..n {
            out.push(peripheral(q, (q + k) % n));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangulationType {
    I,
    II,
    III,
    Other,
}

impl core::fmt::Display for TriangulationType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let s = match self {
            TriangulationType::I => "I",
            TriangulationType::II => "II",
            TriangulationType::III => "III",
            TriangulationType::Other => "other",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Arc(usize),
    Boundary,
}

impl Side {
    pub fn arc(self) -> Option<usize> {
        match self {
            Side::Arc(i) => Some(i),
            Side::Boundary => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleKind {
    /// Between radial `k` and radial `k+1` (clockwise); sides are
    /// `[third side, radial k+1, radial k]`.
    Sector(usize),
    /// Boundary points `x, y, z` clockwise; sides `[(x,y), (y,z), (x,z)]`.
    Outer { x: usize, y: usize, z: usize },
    /// Sides `[(q,x), (x,q), loop]` around a self-folded triangle at `q`;
    /// the loop is represented by the notched radial.
    AroundLoop { q: usize, x: usize },
}

/// A triangle with its sides listed in clockwise traversal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub sides: [Side; 3],
    pub kind: TriangleKind,
}

impl Triangle {
    pub fn is_internal(&self) -> bool {
        self.sides.iter().all(|s| matches!(s, Side::Arc(_)))
    }

    pub fn at_puncture(&self) -> bool {
        matches!(self.kind, TriangleKind::Sector(_))
    }
}

/// A tagged triangulation of the punctured disc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    pub n: usize,
    pub arcs: Vec<TaggedArc>,
}

impl Triangulation {
    /// Validates arcs, compatibility and maximality; normalizes tags so
    /// that not every radial arc is notched.
    pub fn new(n: usize, arcs: Vec<TaggedArc>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidTriangulation(format!("{n} boundary points")));
        }
        for a in &arcs {
            a.validate(n)?;
        }
        if arcs.len() != n {
            return Err(Error::InvalidTriangulation(format!("{} arcs, expected {n}", arcs.len())));
        }
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[..i] {
                if a == b {
                    return Err(Error::InvalidTriangulation(format!("repeated arc {a}")));
                }
                if crossing_number(n, a, b) != 0 {
                    return Err(Error::InvalidTriangulation(format!("{a} crosses {b}")));
                }
            }
        }
        let mut t = Triangulation { n, arcs };
        if t.arcs.iter().filter(|a| a.is_radial()).all(|a| matches!(a, Radial { tag: Tag::Notched, .. })) {
            t.arcs = t.arcs.iter().map(TaggedArc::flip_tag).collect();
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, a: &TaggedArc) -> bool {
        self.arcs.contains(a)
    }

    pub fn index_of(&self, a: &TaggedArc) -> Option<usize> {
        self.arcs.iter().position(|x| x == a)
    }

    /// Crossing numbers of `g` with the arcs of the triangulation.
    pub fn crossing_vector(&self, g: &TaggedArc) -> Vec<usize> {
        self.arcs.iter().map(|a| crossing_number(self.n, g, a)).collect()
    }

    /// Boundary points carrying a radial arc, in increasing order.
    pub fn radial_points(&self) -> Vec<usize> {
        let set: BTreeSet<usize> =
            self.arcs.iter().filter_map(|a| if let Radial { at, .. } = a { Some(*at) } else { None }).collect();
        set.into_iter().collect()
    }

    /// The point of a self-folded pair (plain and notched radial at one point).
    pub fn self_folded_point(&self) -> Option<usize> {
        let pts = self.radial_points();
        let count = self.arcs.iter().filter(|a| a.is_radial()).count();
        (pts.len() == 1 && count == 2).then(|| pts[0])
    }

    /// Number of plain radial arcs at distinct points (0 for a self-folded pair).
    pub fn m(&self) -> usize {
        if self.self_folded_point().is_some() {
            0
        } else {
            self.radial_points().len()
        }
    }

    fn side(&self, x: usize, y: usize) -> Side {
        if (x + 1) % self.n == y {
            Side::Boundary
        } else {
            Side::Arc(self.index_of(&peripheral(x, y)).expect("side of a triangle lies in the triangulation"))
        }
    }

    fn is_side(&self, x: usize, y: usize) -> bool {
        (x + 1) % self.n == y || self.contains(&peripheral(x, y))
    }

    /// Triangle on the cut-off side of the clockwise span from `x` to `z`.
    fn inner_triangle(&self, x: usize, z: usize) -> Option<usize> {
        let n = self.n;
        let len = if x == z { n } else { (z + n - x) % n };
        (1..len).map(|k| (x + k) % n).find(|&y| self.is_side(x, y) && self.is_side(y, z))
    }

    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        if let Some(q) = self.self_folded_point() {
            let x = self.inner_triangle(q, q).expect("self-folded triangulation has an outer triangle");
            let l = self.index_of(&notched(q)).expect("notched radial");
            out.push(Triangle { sides: [self.side(q, x), self.side(x, q), Side::Arc(l)], kind: TriangleKind::AroundLoop { q, x } });
        } else {
            let pts = self.radial_points();
            let m = pts.len();
            for k in 0..m {
                let (a, b) = (pts[k], pts[(k + 1) % m]);
                let ra = self.index_of(&plain(a)).expect("plain radial");
                let rb = self.index_of(&plain(b)).expect("plain radial");
                out.push(Triangle { sides: [self.side(a, b), Side::Arc(rb), Side::Arc(ra)], kind: TriangleKind::Sector(k) });
            }
        }
        for a in &self.arcs {
            if let Peripheral { from, to } = *a {
                let y = self.inner_triangle(from, to).expect("arc bounds a triangle on its cut-off side");
                out.push(Triangle {
                    sides: [self.side(from, y), self.side(y, to), self.side(from, to)],
                    kind: TriangleKind::Outer { x: from, y, z: to },
                });
            }
        }
                out
    }

    pub fn classify(&self) -> TriangulationType {
        let n = self.n;
        if self.self_folded_point().is_some() {
            let tri = &self.triangles()[0];
            let arcs = tri.sides[..2].iter().filter(|s| matches!(s, Side::Arc(_))).count();
            return match arcs {
                1 => TriangulationType::II,
                2 => TriangulationType::III,
                _ => TriangulationType::Other,
            };
        }
        let pts = self.radial_points();
        match pts.len() {
            0 | 1 => TriangulationType::Other,
            2 => {
                let (a, b) = (pts[0], pts[1]);
                let consecutive = (a + 1) % n == b || (b + 1) % n == a;
                if consecutive {
                    TriangulationType::II
                } else {
                    TriangulationType::I
                }
            }
            _ => TriangulationType::I,
        }
    }

    /// Internal triangles off the puncture, and with a self-folded pair the
    /// triangle around the loop is excluded as well.
    pub fn off_puncture_internal(&self) -> Vec<Triangle> {
        self.triangles()
            .into_iter()
            .filter(|t| matches!(t.kind, TriangleKind::Outer { .. }) && t.is_internal())
            .collect()
    }

    /// For distinct plain radials at `q_0 < ... < q_(m-1)`: whether the
    /// triangle between radial `k` and radial `k+1` is internal.
    pub fn sector_internal(&self) -> Vec<bool> {
        if self.self_folded_point().is_some() {
            return Vec::new();
        }
        let pts = self.radial_points();
        let m = pts.len();
        (0..m).map(|k| (pts[k] + 1) % self.n != pts[(k + 1) % m]).collect()
    }

    /// Maximal runs of consecutive internal triangles at the puncture, as
    /// sector indices in clockwise order. `None` when every triangle at
    /// the puncture is internal.
    pub fn internal_runs(&self) -> Option<Vec<Vec<usize>>> {
        let int = self.sector_internal();
        let m = int.len();
        if m > 0 && int.iter().all(|&b| b) {
            return None;
        }
        let mut runs = Vec::new();
        for k in 0..m {
            if int[k] && !int[(k + m - 1) % m] {
                let mut run = vec![k];
                let mut j = (k + 1) % m;
                while int[j] {
                    run.push(j);
                    j = (j + 1) % m;
                }
                runs.push(run);
            }
        }
        Some(runs)
    }

    /// `d = sum (|E_i| - 1)`, or `m` when all triangles at the puncture are internal.
    pub fn d(&self) -> usize {
        match self.internal_runs() {
            None => self.m(),
            Some(runs) => runs.iter().map(|r| r.len() - 1).sum(),
        }
    }

    /// Number of internal triangles not incident to the puncture.
    pub fn t(&self) -> usize {
        self.off_puncture_internal().len()
    }
}

/// Arrow orientation inside a triangle: from each side to the next one in
/// clockwise traversal order when true.
pub const ARROWS_FOLLOW_TRAVERSAL: bool = false;

/// A quiver with potential given by cycles with coefficients.
#[derive(Clone, Debug)]
pub struct QuiverWithPotential {
    pub quiver: Quiver,
    pub potential: Vec<(u32, Vec<usize>)>,
}

impl QuiverWithPotential {
    /// Cyclic derivatives of the potential as relations.
    pub fn jacobian_relations(&self, f: Field) -> Vec<RelationElement> {
        let mut out = Vec::new();
        for a in 0..self.quiver.arrow_count() {
            let mut terms: Vec<(u32, PathWord)> = Vec::new();
            for (c, cyc) in &self.potential {
                for (i, &b) in cyc.iter().enumerate() {
                    if b != a {
                        continue;
                    }
                    let len = cyc.len();
                    let arrows: Vec<usize> = (1..len).map(|k| cyc[(i + k) % len]).collect();
                    let start = self.quiver.arrows[arrows[0]].source;
                    let w = PathWord { start, arrows };
                    match terms.iter_mut().find(|(_, x)| *x == w) {
                        Some(t) => t.0 = f.add(t.0, *c),
                        None => terms.push((*c, w)),
                    }
                }
            }
            terms.retain(|(c, _)| *c != 0);
            if !terms.is_empty() {
                out.push(RelationElement { terms });
            }
        }
        out
    }
}

struct QpBuilder {
    quiver: Quiver,
    potential: Vec<(u32, Vec<usize>)>,
}

impl QpBuilder {
    fn arrow(&mut self, s: usize, t: usize) -> usize {
        let k = self.quiver.arrow_count();
        self.quiver.add_arrow(format!("a{k}"), s, t)
    }

    /// Arrows among the arc sides of a triangle; returns the 3-cycle when internal.
    fn triangle(&mut self, sides: &[Side; 3]) -> Option<Vec<usize>> {
        let mut cyc = Vec::new();
        for i in 0..3 {
            let (a, b) = if ARROWS_FOLLOW_TRAVERSAL { (sides[i], sides[(i + 1) % 3]) } else { (sides[(i + 1) % 3], sides[i]) };
            if let (Side::Arc(a), Side::Arc(b)) = (a, b) {
                cyc.push(self.arrow(a, b));
            }
        }
        if cyc.len() == 3 {
            if !ARROWS_FOLLOW_TRAVERSAL {
                cyc.reverse();
            }
            Some(cyc)
        } else {
            None
        }
    }
}

impl Triangulation {
    pub fn quiver_with_potential(&self) -> Result<QuiverWithPotential> {
        let mut q = Quiver::new();
        for a in &self.arcs {
            q.add_vertex(a.name());
        }
        let mut b = QpBuilder { quiver: q, potential: Vec::new() };
        let tris = self.triangles();
        let f = Field::default();
        for t in &tris {
            if let TriangleKind::Outer { .. } = t.kind {
                if let Some(c) = b.triangle(&t.sides) {
                    b.potential.push((1, c));
                }
            }
        }
        if let Some(q0) = self.self_folded_point() {
            let t = &tris[0];
            let r = self.index_of(&plain(q0)).expect("plain radial of the self-folded pair");
            let l = self.index_of(&notched(q0)).expect("notched radial");
            let cyc = b.triangle(&t.sides);
            // the plain radial mirrors the arrows at the loop
            let mut mirrored = Vec::new();
            let existing: Vec<(usize, usize)> = b.quiver.arrows.iter().map(|a| (a.source, a.target)).collect();
            for (s, tt) in existing {
                if s == l {
                    mirrored.push((tt, b.arrow(r, tt)));
                } else if tt == l {
                    mirrored.push((s, b.arrow(s, r)));
                }
            }
            if let Some(c) = cyc {
                // swap the two arrows at the loop for their mirrors
                let twin: Vec<usize> = c
                    .iter()
                    .map(|&a| {
                        let arr = &b.quiver.arrows[a];
                        if arr.source == l || arr.target == l {
                            let other = if arr.source == l { arr.target } else { arr.source };
                            let from_loop = arr.source == l;
                            b.quiver
                                .arrows
                                .iter()
                                .enumerate()
                                .find(|(_, x)| {
                                    if from_loop {
                                        x.source == r && x.target == other
                                    } else {
                                        x.target == r && x.source == other
                                    }
                                })
                                .map(|(i, _)| i)
                                .expect("mirror arrow")
                        } else {
                            a
                        }
                    })
                    .collect();
                b.potential.push((1, c));
                b.potential.push((f.neg(1), twin));
            }
        } else {
            let m = self.radial_points().len();
            let sectors: Vec<&Triangle> = tris.iter().filter(|t| t.at_puncture()).collect();
            if m >= 3 {
                let mut radial_arrows = vec![0usize; m];
                for t in &sectors {
                    let TriangleKind::Sector(k) = t.kind else { unreachable!() };
                    let before = b.quiver.arrow_count();
                    let cyc = b.triangle(&t.sides);
                    let (rk1, rk) = (t.sides[1].arc().unwrap(), t.sides[2].arc().unwrap());
                    radial_arrows[k] = (before..b.quiver.arrow_count())
                        .find(|&a| {
                            let x = &b.quiver.arrows[a];
                            (x.source == rk1 && x.target == rk) || (x.source == rk && x.target == rk1)
                        })
                        .expect("arrow between consecutive radials");
                    if let Some(c) = cyc {
                        b.potential.push((1, c));
                    }
                }
                // the cycle around the puncture, composed along the arrows
                let mut cyc = Vec::with_capacity(m);
                let mut cur = radial_arrows[0];
                for _ in 0..m {
                    cyc.push(cur);
                    let tgt = b.quiver.arrows[cur].target;
                    cur = *radial_arrows.iter().find(|&&a| b.quiver.arrows[a].source == tgt).expect("puncture cycle");
                }
                b.potential.push((1, cyc));
            } else if m == 2 {
                // the 2-cycle between the radials cancels; what remains of the two
                // sector triangles is a 4-cycle when both third sides are arcs
                let mut halves = Vec::new();
                for t in &sectors {
                    let (rk1, rk) = (t.sides[1].arc().unwrap(), t.sides[2].arc().unwrap());
                    if let Side::Arc(x) = t.sides[0] {
                        let (p1, p2) = if ARROWS_FOLLOW_TRAVERSAL { ((x, rk1), (rk, x)) } else { ((rk1, x), (x, rk)) };
                        let a1 = b.arrow(p1.0, p1.1);
                        let a2 = b.arrow(p2.0, p2.1);
                        // path through x between the two radials
                        halves.push(if b.quiver.arrows[a1].target == x { vec![a1, a2] } else { vec![a2, a1] });
                    }
                }
                if halves.len() == 2 {
                    let (h0, h1) = (&halves[0], &halves[1]);
                    let mut cyc = h0.clone();
                    cyc.extend(h1.iter().copied());
                    if b.quiver.arrows[h0[1]].target != b.quiver.arrows[h1[0]].source {
                        cyc = h1.clone();
                        cyc.extend(h0.iter().copied());
                    }
                    b.potential.push((1, cyc));
                }
            } else {
                return Err(Error::UnsupportedTaggedConfiguration(format!("{} radial arcs", m)));
            }
        }
        Ok(QuiverWithPotential { quiver: b.quiver, potential: b.potential })
    }

    /// The Jacobian algebra of the triangulation.
    pub fn presentation(&self, f: Field) -> Result<AlgebraPresentation> {
        let qp = self.quiver_with_potential()?;
        let relations = qp.jacobian_relations(f);
        AlgebraPresentation::new(qp.quiver, relations, f).validate()
    }
}

/// All tagged triangulations of the punctured disc with `n` boundary points,
/// before tag normalization.
pub fn enumerate_triangulations(n: usize) -> Vec<Vec<TaggedArc>> {
    let arcs = all_arcs(n);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(n: usize, arcs: &[TaggedArc], start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<TaggedArc>>) {
        if chosen.len() == n {
            out.push(chosen.iter().map(|&i| arcs[i]).collect());
            return;
        }
        for i in start..arcs.len() {
            if chosen.iter().all(|&j| compatible(n, &arcs[i], &arcs[j])) {
                chosen.push(i);
                rec(n, arcs, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(n, &arcs, 0, &mut chosen, &mut out);
    out
}

/// Validated triangulations with tags normalized, without duplicates.
pub fn normalized_triangulations(n: usize) -> Vec<Triangulation> {
    let mut seen: BTreeSet<Vec<TaggedArc>> = BTreeSet::new();
    let mut out = Vec::new();
    for arcs in enumerate_triangulations(n) {
        let t = Triangulation::new(n, arcs).expect("enumerated sets are triangulations");
        let mut key = t.arcs.clone();
        key.sort();
        if seen.insert(key) {
            out.push(t);
        }
    }
    out
}

/// Whether the arc set admits no further compatible arc.
pub fn is_maximal(n: usize, arcs: &[TaggedArc]) -> bool {
    all_arcs(n).iter().all(|g| arcs.contains(g) || arcs.iter().any(|a| !compatible(n, g, a)))
}
