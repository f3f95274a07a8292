//! Geometric catalogue of indecomposable non-projective Cohen-Macaulay
//! modules over cluster-tilted algebras of type D, and the stable
//! Auslander-Reiten quiver of the puncture family.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::labels::{
    blue_move, colored_labeling, gamma_of_labels, odot_pairs, red_move, tau_tilde, ColoredLabeling, LabelArc,
};
use crate::model::PuncturedModel;
use crate::polygon::{Chord, PolygonTriangulation};
use crate::rep::Rep;
use crate::surface::{peripheral, plain, TaggedArc, Triangulation, TriangleKind, TriangulationType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdotEntry {
    pub i: usize,
    pub j: usize,
    pub arc: LabelArc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaEntry {
    /// Boundary points `x < y < z` (clockwise) of the internal triangle.
    pub triangle: [usize; 3],
    pub arcs: [TaggedArc; 3],
}

#[derive(Clone, Debug)]
pub struct ClubEntry {
    pub module: Rep,
    pub arc: Option<TaggedArc>,
}

#[derive(Clone, Debug)]
pub struct CmpCatalog {
    pub ty: TriangulationType,
    pub labeling: Option<ColoredLabeling>,
    pub t: usize,
    pub odot: Vec<OdotEntry>,
    pub delta: Vec<DeltaEntry>,
    pub club: Vec<ClubEntry>,
}

/// Catalogue size predicted for a triangulation type: `N(N-2) + 3t`
/// with `N = m + d` for type I, `3t` for type II and `3(t+1)` for type III.
pub fn expected_size(ty: TriangulationType, n_labels: usize, t: usize) -> Option<usize> {
    match ty {
        TriangulationType::I => Some(n_labels * n_labels.saturating_sub(2) + 3 * t),
        TriangulationType::II => Some(3 * t),
        TriangulationType::III => Some(3 * (t + 1)),
        TriangulationType::Other => None,
    }
}

/// Arcs obtained by moving one endpoint of each side of an internal
/// triangle `x, y, z` counterclockwise so that it runs through the triangle.
pub fn delta_arcs(n: usize, x: usize, y: usize, z: usize) -> [TaggedArc; 3] {
    [peripheral((x + n - 1) % n, y), peripheral((y + n - 1) % n, z), peripheral(x, (z + n - 1) % n)]
}

pub fn delta_entries(t: &Triangulation) -> Vec<DeltaEntry> {
    t.off_puncture_internal()
        .iter()
        .filter_map(|tri| match tri.kind {
            TriangleKind::Outer { x, y, z } => Some(DeltaEntry { triangle: [x, y, z], arcs: delta_arcs(t.n, x, y, z) }),
            _ => None,
        })
        .collect()
}

impl CmpCatalog {
    pub fn len(&self) -> usize {
        self.odot.len() + 3 * self.delta.len() + self.club.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label_count(&self) -> usize {
        self.labeling.as_ref().map_or(0, ColoredLabeling::size)
    }

    pub fn expected_size(&self) -> Option<usize> {
        expected_size(self.ty, self.label_count(), self.t)
    }

    /// Modules of all entries, in catalogue order.
    pub fn modules(&self, model: &PuncturedModel) -> Vec<Rep> {
        let mut out = Vec::with_capacity(self.len());
        let zero = Rep::zero(model.alg().quiver());
        for e in &self.odot {
            out.push(e.arc.arc().map_or_else(|| zero.clone(), |a| model.arc_to_rep(&a)));
        }
        for e in &self.delta {
            for a in &e.arcs {
                out.push(model.arc_to_rep(a));
            }
        }
        for e in &self.club {
            out.push(e.module.clone());
        }
        out
    }
}

/// The geometric catalogue. The puncture family needs type I; the
/// triangle family applies to every type; type III adds the
/// non-projective radical summands of `P(a)`, `P(c)`, `P(d)` around the
/// self-folded pair that are not in the triangle family.
pub fn cmp_catalog(model: &PuncturedModel) -> Result<CmpCatalog> {
    let tri = &model.tri;
    let ty = tri.classify();
    if ty == TriangulationType::Other {
        return Err(Error::TypeOther);
    }
    let delta = delta_entries(tri);
    let mut odot = Vec::new();
    let mut labeling = None;
    if ty == TriangulationType::I {
        let l = colored_labeling(tri)?;
        for (i, j) in odot_pairs(l.size()) {
            odot.push(OdotEntry { i, j, arc: gamma_of_labels(tri, &l, i, j)? });
        }
        labeling = Some(l);
    }
    let mut club = Vec::new();
    if ty == TriangulationType::III {
        let q = tri.self_folded_point().ok_or(Error::TypeOther)?;
        let around = tri.triangles().into_iter().find(|t| matches!(t.kind, TriangleKind::AroundLoop { .. }));
        let mut tops = alloc::vec![tri.index_of(&plain(q)).ok_or(Error::TypeOther)?];
        if let Some(t) = around {
            tops.extend(t.sides[..2].iter().filter_map(|s| s.arc()));
        }
        let alg = model.alg();
        // summands already in the triangle family belong to it
        let mut found: Vec<Rep> = delta.iter().flat_map(|e| e.arcs.iter().map(|a| model.arc_to_rep(a))).collect();
        let skip = found.len();
        for v in tops {
            let rad = alg.radical(alg.projective(v)?).0;
            for s in alg.decompose(&rad)? {
                if alg.is_projective(&s) {
                    continue;
                }
                let mut dup = false;
                for f in &found {
                    if alg.is_isomorphic(f, &s)? {
                        dup = true;
                        break;
                    }
                }
                if !dup {
                    found.push(s);
                }
            }
        }
        for m in found.into_iter().skip(skip) {
            let arc = model.family.arc_of(&m)?;
            club.push(ClubEntry { module: m, arc });
        }
    }
    Ok(CmpCatalog { ty, labeling, t: tri.t(), odot, delta, club })
}

/// The triangle family of a polygon triangulation, three chords per
/// internal triangle.
pub fn polygon_catalog(t: &PolygonTriangulation) -> Vec<[Chord; 3]> {
    t.internal_triangle_cmp_arcs()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveColor {
    Red,
    Blue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StableVertex {
    Odot(usize, usize),
    Delta(usize, usize),
    Club(usize),
}

impl StableVertex {
    pub fn label(&self) -> String {
        match *self {
            StableVertex::Odot(i, j) => format!("M(r{i},b{j})"),
            StableVertex::Delta(t, k) => format!("Δ{t}.{k}"),
            StableVertex::Club(k) => format!("♣{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableArQuiver {
    pub vertices: Vec<StableVertex>,
    pub arcs: Vec<Option<TaggedArc>>,
    pub arrows: Vec<(usize, usize, MoveColor)>,
    /// Translation on vertices.
    pub tau: Vec<Option<usize>>,
}

impl StableArQuiver {
    pub fn index_of(&self, v: &StableVertex) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.1 == v).count()
    }

    pub fn count(&self, c: MoveColor) -> usize {
        self.arrows.iter().filter(|a| a.2 == c).count()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph stable_cmp {\n  node [shape=plaintext];\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let arc = self.arcs[k].map(|a| format!("\\n{a}")).unwrap_or_default();
            s.push_str(&format!("  v{k} [label=\"{}{arc}\"];\n", v.label()));
        }
        for &(a, b, c) in &self.arrows {
            let color = match c {
                MoveColor::Red => "red",
                MoveColor::Blue => "blue",
            };
            s.push_str(&format!("  v{a} -> v{b} [color={color}];\n"));
        }
        for (k, t) in self.tau.iter().enumerate() {
            if let Some(t) = t {
                s.push_str(&format!("  v{k} -> v{t} [style=dashed, color=gray, constraint=false];\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Stable AR quiver: red and blue moves with the label translation on
/// the puncture family; the triangle and self-folded families carry no
/// arrows and are translated by the syzygy, computed algebraically.
pub fn build_stable_ar_quiver(catalog: &CmpCatalog, model: &PuncturedModel) -> Result<StableArQuiver> {
    let mut vertices = Vec::new();
    let mut arcs = Vec::new();
    for e in &catalog.odot {
        vertices.push(StableVertex::Odot(e.i, e.j));
        arcs.push(e.arc.arc());
    }
    for (t, e) in catalog.delta.iter().enumerate() {
        for (k, a) in e.arcs.iter().enumerate() {
            vertices.push(StableVertex::Delta(t, k));
            arcs.push(Some(*a));
        }
    }
    for (k, e) in catalog.club.iter().enumerate() {
        vertices.push(StableVertex::Club(k));
        arcs.push(e.arc);
    }
    let n = catalog.label_count();
    let pos = |v: StableVertex| vertices.iter().position(|x| *x == v);
    let mut arrows = Vec::new();
    let mut tau = alloc::vec![None; vertices.len()];
    for (k, e) in catalog.odot.iter().enumerate() {
        if let Ok((a, b)) = red_move(n, e.i, e.j) {
            arrows.push((k, pos(StableVertex::Odot(a, b)).expect("move target in catalogue"), MoveColor::Red));
        }
        if let Ok((a, b)) = blue_move(n, e.i, e.j) {
            arrows.push((k, pos(StableVertex::Odot(a, b)).expect("move target in catalogue"), MoveColor::Blue));
        }
        let (a, b) = tau_tilde(n, e.i, e.j)?;
        tau[k] = pos(StableVertex::Odot(a, b));
    }
    let mods = catalog.modules(model);
    let alg = model.alg();
    let start = catalog.odot.len();
    for k in start..vertices.len() {
        let om = alg.decompose(&alg.syzygy(&mods[k]))?;
        if om.len() != 1 {
            continue;
        }
        for (l, other) in mods.iter().enumerate().skip(start) {
            if alg.is_isomorphic(&om[0], other)? {
                tau[k] = Some(l);
                break;
            }
        }
    }
    Ok(StableArQuiver { vertices, arcs, arrows, tau })
}

