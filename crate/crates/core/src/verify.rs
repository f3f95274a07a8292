//! Per-triangulation verification suites shared by the command line and
//! the acceptance harness.

use alloc::vec::Vec;

use crate::bound::Algebra;
use crate::cmp::{build_stable_ar_quiver, cmp_catalog, CmpCatalog, MoveColor, StableArQuiver};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{Homology, IndecomposableList};
use crate::labels::{
    blue_move, colored_labeling, gamma_of_labels, odot_pairs, red_move, syzygy_on_labels, tau_tilde, ColoredLabeling, LabelArc, PointColor,
};
use crate::model::{PolygonModel, PuncturedModel};
use crate::polygon::PolygonTriangulation;
use crate::rep::Rep;
use crate::surface::{TaggedArc, Triangulation, TriangulationType};

/// Names of the twelve configurations of a puncture-family module.
pub const OMEGA_CASES: [&str; 12] = ["1a", "1b", "1c", "2a", "2b", "2c", "3a", "3b", "3c", "d", "e", "f"];

/// The single indecomposable summand of `m`, if there is exactly one.
fn single(alg: &Algebra, m: &Rep) -> Result<Option<Rep>> {
    if m.is_zero() {
        return Ok(None);
    }
    let mut parts = alg.decompose(m)?;
    Ok(if parts.len() == 1 { parts.pop() } else { None })
}

fn label_module(model: &PuncturedModel, l: &ColoredLabeling, (i, j): (usize, usize)) -> Result<Rep> {
    Ok(match gamma_of_labels(&model.tri, l, i, j)? {
        LabelArc::Arc(a) => model.arc_to_rep(&a),
        _ => Rep::zero(model.alg().quiver()),
    })
}

fn next_colored(l: &ColoredLabeling, p: usize) -> usize {
    (1..=l.n).map(|k| (p + k) % l.n).find(|&q| l.colors[q] != PointColor::Uncolored).unwrap_or(p)
}

/// Position of `M(r_i, b_j)` in [`OMEGA_CASES`].
///
/// The digit records `r_i, b_i`: on one point, on neighbouring colored
/// points with `r_i` red and blue, or with `r_i` red only. The letter
/// records `r_(j-1), b_j`: neighbouring, further apart with `b_j` red and
/// blue, or `b_j` blue only. Three configurations take precedence: `d` if
/// the arc is radial at a point without a radial arc of the triangulation,
/// `e` if it is the notched copy of one, `f` if the syzygy is radial.
pub fn omega_case(tri: &Triangulation, l: &ColoredLabeling, i: usize, j: usize) -> Result<usize> {
    let n = l.size();
    let jm = (j + n - 2) % n + 1;
    if let Some(TaggedArc::Radial { at, .. }) = gamma_of_labels(tri, l, i, j)?.arc() {
        return Ok(if tri.radial_points().contains(&at) { 10 } else { 9 });
    }
    if gamma_of_labels(tri, l, jm, i)?.arc().is_some_and(|a| a.is_radial()) {
        return Ok(11);
    }
    let (ri, bi) = (l.red_point(i)?, l.blue_point(i)?);
    let row = if ri == bi {
        0
    } else if l.colors[ri] == PointColor::RedBlue {
        1
    } else {
        2
    };
    let (rj, bj) = (l.red_point(jm)?, l.blue_point(j)?);
    let col = if l.colors[bj] != PointColor::RedBlue {
        2
    } else if next_colored(l, rj) == bj {
        0
    } else {
        1
    };
    Ok(3 * row + col)
}

/// Configurations met by the puncture family of a type I triangulation,
/// without building its algebra.
pub fn case_histogram(tri: &Triangulation) -> Result<[usize; 12]> {
    let l = colored_labeling(tri)?;
    let mut out = [0; 12];
    for (i, j) in odot_pairs(l.size()) {
        if gamma_of_labels(tri, &l, i, j)?.arc().is_some() {
            out[omega_case(tri, &l, i, j)?] += 1;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
}

impl Tally {
    pub fn record(&mut self, ok: bool) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
        }
    }

    pub fn merge(&mut self, o: &Tally) {
        self.pass += o.pass;
        self.fail += o.fail;
    }

    pub fn ok(&self) -> bool {
        self.fail == 0
    }
}

/// Outcome of every check on one punctured-disc triangulation.
#[derive(Clone, Debug)]
pub struct TriangulationCheck {
    pub n: usize,
    pub ty: TriangulationType,
    pub gorenstein: Option<usize>,
    /// `P(a)` and `I(a)` against the modules of `tau^-1 a` and `tau a`.
    pub calibration: Tally,
    pub catalog_size: usize,
    pub expected_size: Option<usize>,
    /// Geometric catalogue equals the algebraic CMP set, without repeats.
    pub cmp_match: bool,
    pub omega: Tally,
    pub omega_cases: [usize; 12],
    pub tau_tilde: Tally,
    /// Triangle and self-folded entries: syzygy returns to the family
    /// with period 3.
    pub period3: Tally,
    pub bits: Tally,
    pub phi: Option<usize>,
    pub psi: Option<usize>,
}

impl TriangulationCheck {
    pub fn size_ok(&self) -> bool {
        self.expected_size.is_some_and(|e| e == self.catalog_size)
    }

    pub fn it_ok(&self) -> bool {
        matches!(self.gorenstein, Some(0 | 1)) && self.phi == self.gorenstein && self.psi == self.gorenstein
    }
}

fn calibration(model: &PuncturedModel) -> Result<Tally> {
    let tri = &model.tri;
    let alg = model.alg();
    let mut t = Tally::default();
    for (i, a) in tri.arcs.iter().enumerate() {
        let p = model.arc_to_rep(&a.tau_inverse(tri.n));
        let q = model.arc_to_rep(&a.tau(tri.n));
        t.record(p.dims == alg.projective(i)?.dims && q.dims == alg.injective(i)?.dims);
    }
    Ok(t)
}

fn class_ids(model: &PuncturedModel, mods: &[Rep]) -> Result<Vec<Option<usize>>> {
    let alg = model.alg();
    mods.iter()
        .map(|m| if m.is_zero() { Ok(None) } else { model.family.registry.find(alg, m, alg.seed) })
        .collect()
}

/// Catalogue against `{M : M non-projective, torsionless, Ext^i(M, B) = 0
/// for 1 <= i <= d}` over the arc family.
pub fn algebraic_cmp(model: &PuncturedModel, h: &Homology<'_>, d: usize) -> Result<Vec<usize>> {
    let alg = model.alg();
    let mut out = Vec::new();
    for (k, m) in model.family.modules().iter().enumerate() {
        if !alg.is_projective(m) && h.is_torsionless(m)? && h.is_cmp(m, d) {
            out.push(model.family.ids[k]);
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn catalog_matches(model: &PuncturedModel, cat: &CmpCatalog, alg_set: &[usize]) -> Result<bool> {
    let ids = class_ids(model, &cat.modules(model))?;
    let mut geo: Vec<usize> = Vec::with_capacity(ids.len());
    for id in ids {
        match id {
            Some(x) => geo.push(x),
            None => return Ok(false),
        }
    }
    let total = geo.len();
    geo.sort_unstable();
    geo.dedup();
    Ok(geo.len() == total && geo == alg_set)
}

fn omega_and_tau(model: &PuncturedModel, cat: &CmpCatalog, chk: &mut TriangulationCheck) -> Result<()> {
    let Some(l) = &cat.labeling else { return Ok(()) };
    let alg = model.alg();
    let n = l.size();
    for e in &cat.odot {
        let m = label_module(model, l, (e.i, e.j))?;
        chk.omega_cases[omega_case(&model.tri, l, e.i, e.j)?] += 1;
        let want = label_module(model, l, syzygy_on_labels(n, e.i, e.j)?)?;
        let ok = match single(alg, &alg.syzygy(&m))? {
            Some(om) if !want.is_zero() => alg.is_isomorphic(&om, &want)?,
            _ => false,
        };
        chk.omega.record(ok);
        // the syzygy is an autoequivalence of the stable category, so the
        // inverse square is read off from the square of the target
        let target = label_module(model, l, tau_tilde(n, e.i, e.j)?)?;
        let ok = match single(alg, &alg.syzygy_power(&target, 2))? {
            Some(t) => alg.is_isomorphic(&t, &m)?,
            None => false,
        };
        chk.tau_tilde.record(ok);
    }
    Ok(())
}

fn period_three(model: &PuncturedModel, cat: &CmpCatalog) -> Result<Tally> {
    let alg = model.alg();
    let mods = cat.modules(model);
    let family = &mods[cat.odot.len()..];
    let mut t = Tally::default();
    for m in family {
        let mut cur = m.clone();
        let mut ok = true;
        for step in 1..=3 {
            let Some(next) = single(alg, &alg.syzygy(&cur))? else {
                ok = false;
                break;
            };
            let back = alg.is_isomorphic(&next, m)?;
            if back != (step == 3) {
                ok = false;
                break;
            }
            let mut inside = false;
            for x in family {
                if alg.is_isomorphic(&next, x)? {
                    inside = true;
                    break;
                }
            }
            ok &= inside;
            cur = next;
        }
        t.record(ok);
    }
    Ok(t)
}

/// Runs every check on one triangulation.
pub fn check_triangulation(tri: &Triangulation, f: Field, seed: u64) -> Result<TriangulationCheck> {
    let model = PuncturedModel::with_seed(tri.clone(), f, seed)?;
    let alg = model.alg();
    let mut h = Homology::new(alg);
    let gorenstein = h.gorenstein_dimension()?.dimension();
    let ty = tri.classify();
    let mut chk = TriangulationCheck {
        n: tri.n,
        ty,
        gorenstein,
        calibration: calibration(&model)?,
        catalog_size: 0,
        expected_size: None,
        cmp_match: false,
        omega: Tally::default(),
        omega_cases: [0; 12],
        tau_tilde: Tally::default(),
        period3: Tally::default(),
        bits: Tally::default(),
        phi: None,
        psi: None,
    };
    if let Some(d) = gorenstein {
        if ty != TriangulationType::Other {
            let cat = cmp_catalog(&model)?;
            chk.catalog_size = cat.len();
            chk.expected_size = cat.expected_size();
            chk.cmp_match = catalog_matches(&model, &cat, &algebraic_cmp(&model, &h, d)?)?;
            omega_and_tau(&model, &cat, &mut chk)?;
            chk.period3 = period_three(&model, &cat)?;
        }
        if d <= 1 {
            for m in model.family.modules() {
                chk.bits.record(h.characterization_bits(m, d)?.consistent());
            }
        }
    }
    let list = IndecomposableList { modules: model.family.modules().to_vec(), complete: true };
    let (phi, psi) = h.it_dimensions(&list)?;
    chk.phi = Some(phi);
    chk.psi = Some(psi);
    Ok(chk)
}

/// Checks merged over many triangulations.
#[derive(Clone, Debug, Default)]
pub struct SweepSummary {
    pub triangulations: usize,
    /// Counts for types I, II, III and other.
    pub by_type: [usize; 4],
    /// Counts by Gorenstein dimension; the last slot collects the rest.
    pub by_gorenstein: [usize; 3],
    pub calibration: Tally,
    pub cmp: Tally,
    pub sizes: Tally,
    pub omega: Tally,
    pub omega_cases: [usize; 12],
    pub tau_tilde: Tally,
    pub period3: Tally,
    pub bits: Tally,
    /// Algebras on which the characterization bits were evaluated.
    pub one_gorenstein: usize,
    pub it: Tally,
    /// Arcs of the first few triangulations failing some check.
    pub failures: Vec<Vec<TaggedArc>>,
}

impl SweepSummary {
    pub fn absorb(&mut self, tri: &Triangulation, c: &TriangulationCheck) {
        self.triangulations += 1;
        self.by_type[match c.ty {
            TriangulationType::I => 0,
            TriangulationType::II => 1,
            TriangulationType::III => 2,
            TriangulationType::Other => 3,
        }] += 1;
        self.by_gorenstein[c.gorenstein.map_or(2, |d| d.min(2))] += 1;
        self.calibration.merge(&c.calibration);
        let classified = c.ty != TriangulationType::Other && c.gorenstein.is_some();
        if classified {
            self.cmp.record(c.cmp_match);
            self.sizes.record(c.size_ok());
        }
        self.omega.merge(&c.omega);
        for (a, b) in self.omega_cases.iter_mut().zip(c.omega_cases) {
            *a += b;
        }
        self.tau_tilde.merge(&c.tau_tilde);
        self.period3.merge(&c.period3);
        self.bits.merge(&c.bits);
        self.one_gorenstein += usize::from(matches!(c.gorenstein, Some(0 | 1)));
        self.it.record(c.it_ok());
        let ok = c.calibration.ok()
            && (!classified || (c.cmp_match && c.size_ok()))
            && c.omega.ok()
            && c.tau_tilde.ok()
            && c.period3.ok()
            && c.bits.ok()
            && c.it_ok();
        if !ok && self.failures.len() < 8 {
            self.failures.push(tri.arcs.clone());
        }
    }

    pub fn merge(&mut self, o: &SweepSummary) {
        self.triangulations += o.triangulations;
        for (a, b) in self.by_type.iter_mut().zip(o.by_type) {
            *a += b;
        }
        for (a, b) in self.by_gorenstein.iter_mut().zip(o.by_gorenstein) {
            *a += b;
        }
        for (a, b) in self.omega_cases.iter_mut().zip(o.omega_cases) {
            *a += b;
        }
        for (a, b) in [
            (&mut self.calibration, &o.calibration),
            (&mut self.cmp, &o.cmp),
            (&mut self.sizes, &o.sizes),
            (&mut self.omega, &o.omega),
            (&mut self.tau_tilde, &o.tau_tilde),
            (&mut self.period3, &o.period3),
            (&mut self.bits, &o.bits),
            (&mut self.it, &o.it),
        ] {
            a.merge(b);
        }
        self.one_gorenstein += o.one_gorenstein;
        for f in &o.failures {
            if self.failures.len() < 8 {
                self.failures.push(f.clone());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of the checks on one polygon triangulation.
#[derive(Clone, Debug)]
pub struct PolygonCheck {
    pub n: usize,
    pub t: usize,
    pub gorenstein: Option<usize>,
    pub cmp_match: bool,
    pub period3: Tally,
}

pub fn check_polygon(tri: &PolygonTriangulation, f: Field) -> Result<PolygonCheck> {
    let model = PolygonModel::new(tri.clone(), f)?;
    let alg = model.alg();
    let mut h = Homology::new(alg);
    let gorenstein = h.gorenstein_dimension()?.dimension();
    let d = gorenstein.ok_or(Error::NotGorenstein)?;
    let mut alg_set = Vec::new();
    for (k, m) in model.family.modules().iter().enumerate() {
        if !alg.is_projective(m) && h.is_torsionless(m)? && h.is_cmp(m, d) {
            alg_set.push(model.family.ids[k]);
        }
    }
    alg_set.sort_unstable();
    let triples = tri.internal_triangle_cmp_arcs();
    let mut geo: Vec<usize> = triples.iter().flatten().filter_map(|c| model.family.id_of(c)).collect();
    let total = 3 * triples.len();
    geo.sort_unstable();
    geo.dedup();
    let cmp_match = geo.len() == total && geo == alg_set;
    let mut period3 = Tally::default();
    for tr in &triples {
        let mods: Vec<Rep> = tr.iter().map(|c| model.arc_to_rep(c)).collect();
        for (k, m) in mods.iter().enumerate() {
            let mut ok = false;
            if let Some(om) = single(alg, &alg.syzygy(m))? {
                ok = alg.is_isomorphic(&om, &mods[(k + 1) % 3])? || alg.is_isomorphic(&om, &mods[(k + 2) % 3])?;
                ok &= alg.is_isomorphic(&alg.syzygy_power(m, 3), m)?;
            }
            period3.record(ok);
        }
    }
    Ok(PolygonCheck { n: tri.n, t: triples.len(), gorenstein, cmp_match, period3 })
}

/// Shape of the puncture component of a stable AR quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshReport {
    pub vertices: usize,
    pub red: usize,
    pub blue: usize,
    pub two_move_sources: usize,
    /// Vertices satisfying `j not in {i+1, i+2}` and `i not in {j+1, j+2}`.
    pub literal_rule_sources: usize,
    /// Vertices with two outgoing moves for which `j != i+2`, `j != i-1`.
    pub mesh_rule_sources: usize,
    pub sources_agree_with_mesh_rule: bool,
    /// Moves whose stable Hom space is nonzero.
    pub stable_hom: Tally,
}

pub fn mesh_report(q: &StableArQuiver, l: &ColoredLabeling, model: &PuncturedModel) -> Result<MeshReport> {
    use crate::cmp::StableVertex;
    let n = l.size();
    let alg = model.alg();
    let plus = |x: usize, k: usize| (x + k - 1) % n + 1;
    let mut two = 0;
    let mut literal = 0;
    let mut mesh = 0;
    let mut agree = true;
    let mut vertices = 0;
    for (k, v) in q.vertices.iter().enumerate() {
        let StableVertex::Odot(i, j) = *v else { continue };
        vertices += 1;
        let deg2 = q.out_degree(k) == 2;
        two += usize::from(deg2);
        let lit = j != plus(i, 1) && j != plus(i, 2) && i != plus(j, 1) && i != plus(j, 2);
        literal += usize::from(lit);
        let rule = j != plus(i, 2) && i != plus(j, 1);
        mesh += usize::from(rule);
        agree &= deg2 == rule;
        agree &= red_move(n, i, j).is_ok() == (j != plus(i, n - 1));
        agree &= blue_move(n, i, j).is_ok() == (j != plus(i, 2));
    }
    let mods: Vec<Rep> = q
        .vertices
        .iter()
        .map(|v| match *v {
            StableVertex::Odot(i, j) => label_module(model, l, (i, j)),
            _ => Ok(Rep::zero(alg.quiver())),
        })
        .collect::<Result<_>>()?;
    let mut stable_hom = Tally::default();
    for &(a, b, _) in &q.arrows {
        stable_hom.record(alg.stable_hom_dim(&mods[a], &mods[b]) > 0);
    }
    Ok(MeshReport {
        vertices,
        red: q.count(MoveColor::Red),
        blue: q.count(MoveColor::Blue),
        two_move_sources: two,
        literal_rule_sources: literal,
        mesh_rule_sources: mesh,
        sources_agree_with_mesh_rule: agree,
        stable_hom,
    })
}

/// Stable quiver, its mesh report, and the stable Hom dimensions between
/// distinct triangle-family entries.
pub fn stable_quiver_report(model: &PuncturedModel) -> Result<(StableArQuiver, Option<MeshReport>, Vec<usize>)> {
    let cat = cmp_catalog(model)?;
    let q = build_stable_ar_quiver(&cat, model)?;
    let mesh = match &cat.labeling {
        Some(l) => Some(mesh_report(&q, l, model)?),
        None => None,
    };
    let alg = model.alg();
    let mods = cat.modules(model);
    let rest = &mods[cat.odot.len()..];
    let mut homs = Vec::new();
    for (a, x) in rest.iter().enumerate() {
        for (b, y) in rest.iter().enumerate() {
            if a != b {
                homs.push(alg.stable_hom_dim(x, y));
            }
        }
    }
    Ok((q, mesh, homs))
}
