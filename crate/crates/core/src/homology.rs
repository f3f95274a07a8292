//! Homological invariants: projective and injective dimension, Gorenstein
//! dimension, Cohen-Macaulay membership, the syzygy characterization bits
//! and the Igusa-Todorov functions.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bound::{Algebra, BoundAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::registry::IsoRegistry;
use crate::rep::Rep;

pub const DEFAULT_ORBIT_BOUND: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomDim {
    Finite(usize),
    Infinite,
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(k) => Some(k),
            HomDim::Infinite => None,
        }
    }
}

impl core::fmt::Display for HomDim {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HomDim::Finite(k) => write!(f, "{k}"),
            HomDim::Infinite => write!(f, "inf"),
        }
    }
}

/// Iso classes of indecomposables met along syzygy orbits, with the
/// decomposed syzygy of each class.
#[derive(Clone, Debug)]
pub struct SyzygyGraph {
    pub registry: IsoRegistry,
    /// All summand classes of the syzygy of each class, with multiplicity.
    succ: Vec<Option<Vec<usize>>>,
    pd: Vec<Option<HomDim>>,
    bound: usize,
    seed: u64,
}

impl SyzygyGraph {
    pub fn new(bound: usize, seed: u64) -> Self {
        SyzygyGraph { registry: IsoRegistry::new(), succ: Vec::new(), pd: Vec::new(), bound, seed }
    }

    fn class(&mut self, alg: &BoundAlgebra, m: Rep) -> Result<usize> {
        let (id, new) = self.registry.insert(alg, m, self.seed)?;
        if new {
            if self.registry.len() > self.bound {
                return Err(Error::UndeterminedOrbit(self.bound));
            }
            self.succ.push(None);
            self.pd.push(None);
        }
        Ok(id)
    }

    /// Classes of the indecomposable summands of `m`, with multiplicity.
    pub fn summands(&mut self, alg: &BoundAlgebra, m: &Rep) -> Result<Vec<usize>> {
        let parts = alg.decompose_seeded(m, self.seed)?;
        let mut ids = Vec::with_capacity(parts.len());
        for p in parts {
            ids.push(self.class(alg, p)?);
        }
        ids.sort_unstable();
        Ok(ids)
    }

    pub fn is_projective(&self, id: usize) -> bool {
        self.registry.is_projective(id)
    }

    /// Summand classes of the syzygy of class `id`.
    pub fn syzygy_of(&mut self, alg: &BoundAlgebra, id: usize) -> Result<Vec<usize>> {
        if let Some(s) = &self.succ[id] {
            return Ok(s.clone());
        }
        let om = alg.syzygy(self.registry.get(id));
        let s = self.summands(alg, &om)?;
        self.succ[id] = Some(s.clone());
        Ok(s)
    }

    fn nonprojective_syzygy_of(&mut self, alg: &BoundAlgebra, id: usize) -> Result<Vec<usize>> {
        Ok(self.syzygy_of(alg, id)?.into_iter().filter(|&c| !self.is_projective(c)).collect())
    }

    pub fn proj_dim_class(&mut self, alg: &BoundAlgebra, id: usize) -> Result<HomDim> {
        // iterative depth-first search; a back edge means an infinite orbit
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Fresh,
            Open,
        }
        let mut marks: Vec<Mark> = Vec::new();
        let mut stack: Vec<(usize, usize)> = vec![(id, 0)];
        let grow = |marks: &mut Vec<Mark>, n: usize| {
            if marks.len() < n {
                marks.resize(n, Mark::Fresh);
            }
        };
        grow(&mut marks, self.registry.len());
        marks[id] = Mark::Open;
        while let Some(&(c, k)) = stack.last() {
            if self.pd[c].is_some() {
                stack.pop();
                grow(&mut marks, self.registry.len());
                marks[c] = Mark::Fresh;
                continue;
            }
            if self.is_projective(c) {
                self.pd[c] = Some(HomDim::Finite(0));
                continue;
            }
            let next = self.nonprojective_syzygy_of(alg, c)?;
            grow(&mut marks, self.registry.len());
            if k < next.len() {
                stack.last_mut().unwrap().1 += 1;
                let d = next[k];
                if self.pd[d].is_some() {
                    continue;
                }
                if marks[d] == Mark::Open {
                    self.pd[d] = Some(HomDim::Infinite);
                    continue;
                }
                marks[d] = Mark::Open;
                stack.push((d, 0));
                continue;
            }
            let mut best = HomDim::Finite(1);
            for d in next {
                match self.pd[d].expect("visited") {
                    HomDim::Infinite => best = HomDim::Infinite,
                    HomDim::Finite(x) => {
                        if let HomDim::Finite(b) = best {
                            best = HomDim::Finite(b.max(x + 1));
                        }
                    }
                }
            }
            self.pd[c] = Some(best);
        }
        Ok(self.pd[id].expect("computed"))
    }

    pub fn proj_dim(&mut self, alg: &BoundAlgebra, m: &Rep) -> Result<HomDim> {
        let mut best = HomDim::Finite(0);
        for id in self.summands(alg, m)? {
            best = best.max(self.proj_dim_class(alg, id)?);
        }
        Ok(best)
    }
}

/// Outcome of an Igusa-Todorov computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItReport {
    pub phi: usize,
    pub psi: usize,
    /// Ranks of `L^t <add M>` for `t = 0..=fitting`, constant from `phi` on.
    pub ranks: Vec<usize>,
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn integer_rank(rows: &[Vec<i128>]) -> Result<usize> {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    let overflow = || Error::UndeterminedOrbit(0);
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for c in col + 1..ncols {
                let x = a[rank][col].checked_mul(a[r][c]).ok_or_else(overflow)?;
                let y = a[r][col].checked_mul(a[rank][c]).ok_or_else(overflow)?;
                a[r][c] = x.checked_sub(y).ok_or_else(overflow)? / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    Ok(rank)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GorensteinVerdict {
    Gorenstein(usize),
    NotGorenstein,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    /// `proj.dim D(B)`.
    pub d_left: HomDim,
    /// `inj.dim B`.
    pub d_right: HomDim,
    pub verdict: GorensteinVerdict,
}

impl GorensteinReport {
    pub fn dimension(&self) -> Option<usize> {
        match self.verdict {
            GorensteinVerdict::Gorenstein(d) => Some(d),
            GorensteinVerdict::NotGorenstein => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CharacterizationBits {
    pub a: [bool; 4],
    pub b: [bool; 4],
}

impl CharacterizationBits {
    pub fn consistent(&self) -> bool {
        self.a.iter().all(|&x| x == self.a[0]) && self.b.iter().all(|&x| x == self.b[0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfinjectiveReport {
    pub selfinjective: bool,
    /// `P(i) = I(nakayama[i])`, when selfinjective.
    pub nakayama: Vec<usize>,
    pub order: usize,
}

/// A list of indecomposables, optionally certified complete.
#[derive(Clone, Debug)]
pub struct IndecomposableList {
    pub modules: Vec<Rep>,
    pub complete: bool,
}

/// Homological computations over one algebra, sharing the syzygy graphs.
#[derive(Debug)]
pub struct Homology<'a> {
    pub alg: &'a Algebra,
    pub fwd: SyzygyGraph,
    pub op: SyzygyGraph,
}

impl<'a> Homology<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        Homology::with_bound(alg, DEFAULT_ORBIT_BOUND)
    }

    pub fn with_bound(alg: &'a Algebra, bound: usize) -> Self {
        Homology { alg, fwd: SyzygyGraph::new(bound, alg.seed), op: SyzygyGraph::new(bound, alg.seed) }
    }

    pub fn proj_dim(&mut self, m: &Rep) -> Result<HomDim> {
        self.fwd.proj_dim(&self.alg.fwd, m)
    }

    pub fn inj_dim(&mut self, m: &Rep) -> Result<HomDim> {
        self.op.proj_dim(&self.alg.op, &m.dual())
    }

    pub fn gorenstein_dimension(&mut self) -> Result<GorensteinReport> {
        let mut d_left = HomDim::Finite(0);
        let mut d_right = HomDim::Finite(0);
        for i in 0..self.alg.vertex_count() {
            let inj = self.alg.injective(i)?.clone();
            d_left = d_left.max(self.proj_dim(&inj)?);
            let proj = self.alg.projective(i)?.clone();
            d_right = d_right.max(self.inj_dim(&proj)?);
        }
        let verdict = match (d_left, d_right) {
            (HomDim::Finite(a), HomDim::Finite(b)) if a == b => GorensteinVerdict::Gorenstein(a),
            _ => GorensteinVerdict::NotGorenstein,
        };
        Ok(GorensteinReport { d_left, d_right, verdict })
    }

    /// Whether `m` embeds into a free module.
    pub fn is_torsionless(&self, m: &Rep) -> Result<bool> {
        torsionless(&self.alg.fwd, m)
    }

    /// Whether `m` is a quotient of an injective module.
    pub fn is_cotorsionless(&self, m: &Rep) -> Result<bool> {
        torsionless(&self.alg.op, &m.dual())
    }

    pub fn is_cmp(&self, m: &Rep, d: usize) -> bool {
        (1..=d).all(|i| self.alg.ext_against_algebra(m, i) == 0)
    }

    pub fn is_cmi(&self, m: &Rep, d: usize) -> bool {
        (1..=d).all(|i| self.alg.ext_from_dual(m, i) == 0)
    }

    /// The statements (a1)-(a4) and (b1)-(b4), each from its own definition.
    pub fn characterization_bits(&self, m: &Rep, d: usize) -> Result<CharacterizationBits> {
        let alg = self.alg;
        let proj = alg.is_projective(m);
        let inj = alg.is_injective(m);
        let tau = alg.ar_translate(m);
        let tau_inv = alg.ar_translate_inverse(m);
        let a = [
            !proj && self.is_torsionless(m)?,
            !proj && self.is_cmp(m, d),
            alg.is_isomorphic(&alg.syzygy_power(&tau, 2), m)?,
            !proj && alg.is_isomorphic(&alg.cosyzygy_power(m, 2), &tau)?,
        ];
        let b = [
            !inj && self.is_cotorsionless(m)?,
            !inj && self.is_cmi(m, d),
            alg.is_isomorphic(&alg.cosyzygy_power(&tau_inv, 2), m)?,
            !inj && alg.is_isomorphic(&alg.syzygy_power(m, 2), &tau_inv)?,
        ];
        Ok(CharacterizationBits { a, b })
    }

    /// Igusa-Todorov functions of `m`.
    pub fn igusa_todorov(&mut self, m: &Rep) -> Result<ItReport> {
        let start = self.fwd.summands(&self.alg.fwd, m)?;
        self.igusa_todorov_classes(start)
    }

    /// Igusa-Todorov functions of the direct sum of `parts`, without
    /// forming the sum.
    pub fn igusa_todorov_sum(&mut self, parts: &[Rep]) -> Result<ItReport> {
        let mut start = Vec::new();
        for p in parts {
            start.extend(self.fwd.summands(&self.alg.fwd, p)?);
        }
        start.sort_unstable();
        self.igusa_todorov_classes(start)
    }

    fn igusa_todorov_classes(&mut self, start: Vec<usize>) -> Result<ItReport> {
        let alg = &self.alg.fwd;
        let g = &mut self.fwd;
        let mut gens: Vec<usize> = start.iter().copied().filter(|&c| !g.is_projective(c)).collect();
        gens.sort_unstable();
        gens.dedup();
        // classes reachable by syzygies span an L-invariant lattice
        let mut reach: Vec<usize> = gens.clone();
        let mut seen: BTreeSet<usize> = gens.iter().copied().collect();
        let mut head = 0;
        while head < reach.len() {
            let c = reach[head];
            head += 1;
            for d in g.nonprojective_syzygy_of(alg, c)? {
                if seen.insert(d) {
                    reach.push(d);
                }
            }
        }
        let pos = |c: usize| reach.iter().position(|&x| x == c).expect("reachable");
        let dim = reach.len();
        let mut succ: Vec<Vec<usize>> = Vec::with_capacity(dim);
        for &c in &reach {
            succ.push(g.nonprojective_syzygy_of(alg, c)?.into_iter().map(pos).collect());
        }
        let mut vecs: Vec<Vec<i128>> = gens
            .iter()
            .map(|&c| {
                let mut v = vec![0i128; dim];
                v[pos(c)] = 1;
                v
            })
            .collect();
        // beyond the Fitting index the rank no longer changes
        let mut ranks = Vec::with_capacity(dim + 1);
        for t in 0..=dim {
            ranks.push(integer_rank(&vecs)?);
            if t == dim {
                break;
            }
            for v in vecs.iter_mut() {
                let mut w = vec![0i128; dim];
                for (i, &x) in v.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for &j in &succ[i] {
                        w[j] = w[j].checked_add(x).ok_or(Error::UndeterminedOrbit(t))?;
                    }
                }
                *v = w;
            }
        }
        let last = *ranks.last().unwrap_or(&0);
        let phi = ranks.iter().position(|&r| r == last).unwrap_or(0);
        // summands of the phi-th syzygy
        let mut layer: BTreeSet<usize> = start.into_iter().collect();
        for _ in 0..phi {
            let mut next = BTreeSet::new();
            for c in layer {
                if !g.is_projective(c) {
                    next.extend(g.syzygy_of(alg, c)?);
                }
            }
            layer = next;
        }
        let mut k = 0;
        for c in layer {
            if let HomDim::Finite(x) = g.proj_dim_class(alg, c)? {
                k = k.max(x);
            }
        }
        Ok(ItReport { phi, psi: phi + k, ranks })
    }

    /// `phi dim` and `psi dim` from a certified complete list.
    pub fn it_dimensions(&mut self, list: &IndecomposableList) -> Result<(usize, usize)> {
        if !list.complete {
            return Err(Error::IncompleteIndecomposableList);
        }
        let r = self.igusa_todorov_sum(&list.modules)?;
        Ok((r.phi, r.psi))
    }

    pub fn selfinjective_report(&self) -> Result<SelfinjectiveReport> {
        let alg = self.alg;
        let n = alg.vertex_count();
        let mut nakayama = Vec::with_capacity(n);
        for i in 0..n {
            let p = alg.projective(i)?;
            let mut hit = None;
            for j in 0..n {
                if alg.is_isomorphic(p, alg.injective(j)?)? {
                    hit = Some(j);
                    break;
                }
            }
            match hit {
                Some(j) => nakayama.push(j),
                None => return Ok(SelfinjectiveReport { selfinjective: false, nakayama: Vec::new(), order: 0 }),
            }
        }
        let mut order = 1;
        let mut cur: Vec<usize> = nakayama.clone();
        while cur.iter().enumerate().any(|(i, &x)| i != x) {
            cur = cur.iter().map(|&x| nakayama[x]).collect();
            order += 1;
        }
        Ok(SelfinjectiveReport { selfinjective: true, nakayama, order })
    }

    /// Checks `tau^(2m) M = M` for the given non-projective indecomposables.
    pub fn verify_tau_periodicity(&self, modules: &[Rep]) -> Result<Vec<bool>> {
        let rep = self.selfinjective_report()?;
        if !rep.selfinjective {
            return Err(Error::NotSelfinjective);
        }
        let alg = self.alg;
        modules
            .iter()
            .map(|m| {
                let t = (0..2 * rep.order).fold(m.clone(), |acc, _| alg.ar_translate(&acc));
                alg.is_isomorphic(&t, m)
            })
            .collect()
    }
}

fn torsionless(alg: &BoundAlgebra, m: &Rep) -> Result<bool> {
    let f = alg.field();
    let homs = alg.hom_basis(m, &alg.regular())?;
    for v in 0..m.dims.len() {
        let mut stack = Matrix::zeros(0, m.dims[v]);
        for h in &homs {
            stack = stack.vstack(&h.blocks[v]);
        }
        if stack.rank(f) < m.dims[v] {
            return Ok(false);
        }
    }
    Ok(true)
}
