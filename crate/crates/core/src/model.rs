//! Arc families: the indecomposable modules of a triangulation's algebra
//! indexed by the arcs outside the triangulation.

use alloc::format;
use alloc::vec::Vec;

use crate::bound::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::knit::DEFAULT_KNIT_LIMIT;
use crate::linalg::Matrix;
use crate::polygon::{all_chords, Chord, PolygonTriangulation};
use crate::registry::IsoRegistry;
use crate::rep::Rep;
use crate::surface::{all_arcs, TaggedArc, Triangulation};

/// How the module of an arc was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcRoute {
    /// Crossing numbers all at most one; identity on every arrow inside
    /// the support satisfies the relations and gives an indecomposable.
    Thin,
    /// The unique knitted indecomposable with the crossing vector as
    /// dimension vector.
    Catalog,
}

#[derive(Clone, Debug)]
pub struct ArcFamily<A> {
    pub alg: Algebra,
    pub registry: IsoRegistry,
    pub arcs: Vec<A>,
    pub ids: Vec<usize>,
    pub routes: Vec<ArcRoute>,
    modules: Vec<Rep>,
}

/// The thin candidate with identity maps along the support, if it is a
/// valid indecomposable module.
pub fn thin_module(alg: &Algebra, dims: &[usize]) -> Result<Option<Rep>> {
    if dims.iter().any(|&d| d > 1) || dims.iter().all(|&d| d == 0) {
        return Ok(None);
    }
    let q = alg.quiver();
    let mut m = Rep::from_dims(q, dims.to_vec());
    for (k, a) in q.arrows.iter().enumerate() {
        if dims[a.source] == 1 && dims[a.target] == 1 {
            m.maps[k] = Matrix::identity(1);
        }
    }
    if m.check_relations(&alg.pres).is_err() || !alg.is_indecomposable(&m)? {
        return Ok(None);
    }
    Ok(Some(m))
}

impl<A: Copy + PartialEq + core::fmt::Display> ArcFamily<A> {
    /// Knits the indecomposables and matches each arc by its crossing
    /// vector; fails unless this is a bijection.
    pub fn build(alg: Algebra, arcs: Vec<A>, crossing: impl Fn(&A) -> Vec<usize>) -> Result<Self> {
        let registry = alg.knit_indecomposables(DEFAULT_KNIT_LIMIT)?;
        let mut ids = Vec::with_capacity(arcs.len());
        let mut routes = Vec::with_capacity(arcs.len());
        let mut modules = Vec::with_capacity(arcs.len());
        for g in &arcs {
            let dims = crossing(g);
            let hits: Vec<usize> = (0..registry.len()).filter(|&i| registry.get(i).dims == dims).collect();
            if hits.len() != 1 {
                return Err(Error::NotIndecomposable(format!(
                    "{} indecomposables with the dimension vector {:?} of {g}",
                    hits.len(),
                    dims
                )));
            }
            let id = hits[0];
            match thin_module(&alg, &dims)? {
                Some(m) => {
                    if !alg.is_isomorphic(&m, registry.get(id))? {
                        return Err(Error::NotIndecomposable(format!("thin module of {g} differs from the knitted one")));
                    }
                    routes.push(ArcRoute::Thin);
                    modules.push(m);
                }
                None => {
                    routes.push(ArcRoute::Catalog);
                    modules.push(registry.get(id).clone());
                }
            }
            ids.push(id);
        }
        let mut seen = ids.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != ids.len() || seen.len() != registry.len() {
            return Err(Error::IncompleteIndecomposableList);
        }
        Ok(ArcFamily { alg, registry, arcs, ids, routes, modules })
    }

    pub fn position(&self, g: &A) -> Option<usize> {
        self.arcs.iter().position(|x| x == g)
    }

    /// Module of an arc; `None` when the arc belongs to the triangulation.
    pub fn module(&self, g: &A) -> Option<&Rep> {
        self.position(g).map(|k| &self.modules[k])
    }

    pub fn id_of(&self, g: &A) -> Option<usize> {
        self.position(g).map(|k| self.ids[k])
    }

    /// The arc whose module is isomorphic to `m` (an indecomposable).
    pub fn arc_of(&self, m: &Rep) -> Result<Option<A>> {
        let id = self.registry.find(&self.alg, m, self.alg.seed)?;
        Ok(id.and_then(|id| self.ids.iter().position(|&x| x == id).map(|k| self.arcs[k])))
    }

    pub fn modules(&self) -> &[Rep] {
        &self.modules
    }
}

/// A punctured-disc triangulation with its algebra and arc modules.
#[derive(Clone, Debug)]
pub struct PuncturedModel {
    pub tri: Triangulation,
    pub family: ArcFamily<TaggedArc>,
}

impl PuncturedModel {
    pub fn new(tri: Triangulation, f: Field) -> Result<Self> {
        Self::with_seed(tri, f, 0)
    }

    pub fn with_seed(tri: Triangulation, f: Field, seed: u64) -> Result<Self> {
        let alg = Algebra::new(tri.presentation(f)?)?.with_seed(seed);
        let arcs: Vec<TaggedArc> = all_arcs(tri.n).into_iter().filter(|g| !tri.contains(g)).collect();
        let t = tri.clone();
        let family = ArcFamily::build(alg, arcs, move |g| t.crossing_vector(g))?;
        Ok(PuncturedModel { tri, family })
    }

    pub fn alg(&self) -> &Algebra {
        &self.family.alg
    }

    /// Module of an arc, zero for arcs of the triangulation.
    pub fn arc_to_rep(&self, g: &TaggedArc) -> Rep {
        match self.family.module(g) {
            Some(m) => m.clone(),
            None => Rep::zero(self.alg().quiver()),
        }
    }
}

/// A polygon triangulation with its algebra and chord modules.
#[derive(Clone, Debug)]
pub struct PolygonModel {
    pub tri: PolygonTriangulation,
    pub family: ArcFamily<Chord>,
}

impl PolygonModel {
    pub fn new(tri: PolygonTriangulation, f: Field) -> Result<Self> {
        let alg = Algebra::new(tri.presentation(f)?)?;
        let arcs: Vec<Chord> = all_chords(tri.n).into_iter().filter(|c| !tri.contains(c)).collect();
        let t = tri.clone();
        let family = ArcFamily::build(alg, arcs, move |c| t.crossing_vector(c))?;
        Ok(PolygonModel { tri, family })
    }

    pub fn alg(&self) -> &Algebra {
        &self.family.alg
    }

    pub fn arc_to_rep(&self, c: &Chord) -> Rep {
        match self.family.module(c) {
            Some(m) => m.clone(),
            None => Rep::zero(self.alg().quiver()),
        }
    }
}
