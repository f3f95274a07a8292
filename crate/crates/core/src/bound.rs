//! Module-theoretic operations over a bound quiver algebra: projectives,
//! injectives, Hom spaces, covers, syzygies and the Auslander-Reiten
//! translates.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{compute_path_basis, AlgebraPresentation, PathBasis, PathWord, Quiver, DEFAULT_MAX_LEN};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{complement_columns, Matrix};
use crate::rep::{Rep, RepMap};

/// A presentation together with its path basis.
#[derive(Clone, Debug)]
pub struct BoundAlgebra {
    pub pres: AlgebraPresentation,
    pub basis: PathBasis,
    /// Position of each basis word inside its `pair` list.
    slot: Vec<usize>,
    arrow_word: Vec<usize>,
    projectives: Vec<Rep>,
    injectives: Vec<Rep>,
}

/// A projective cover `P0 -> M` with the tops of its indecomposable summands.
#[derive(Clone, Debug)]
pub struct Cover {
    pub projective: Rep,
    pub tops: Vec<usize>,
    pub epi: RepMap,
}

impl BoundAlgebra {
    pub fn new(pres: AlgebraPresentation, max_len: usize) -> Result<Self> {
        let pres = pres.validate()?;
        let basis = compute_path_basis(&pres, max_len)?;
        let mut slot = vec![0; basis.dimension()];
        for row in &basis.pair {
            for list in row {
                for (k, &w) in list.iter().enumerate() {
                    slot[w] = k;
                }
            }
        }
        let arrow_word = (0..pres.quiver.arrow_count())
            .map(|a| {
                let w = PathWord { start: pres.quiver.arrows[a].source, arrows: vec![a] };
                basis.index_of(&w).expect("arrow vanishes in an admissible quotient")
            })
            .collect();
        let mut alg = BoundAlgebra { pres, basis, slot, arrow_word, projectives: Vec::new(), injectives: Vec::new() };
        alg.projectives = (0..alg.vertex_count()).map(|i| alg.build_projective(i)).collect();
        alg.injectives = (0..alg.vertex_count()).map(|i| alg.build_injective(i)).collect();
        Ok(alg)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.pres.quiver
    }

    pub fn field(&self) -> Field {
        self.pres.field
    }

    pub fn vertex_count(&self) -> usize {
        self.pres.quiver.vertex_count()
    }

    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    fn build_projective(&self, i: usize) -> Rep {
        let q = self.quiver();
        let n = self.vertex_count();
        let dims: Vec<usize> = (0..n).map(|j| self.basis.pair_dim(i, j)).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let (j, k) = (arr.source, arr.target);
                let mut m = Matrix::zeros(dims[k], dims[j]);
                for (col, &w) in self.basis.pair[i][j].iter().enumerate() {
                    for &(r, c) in self.basis.mul_words(w, self.arrow_word[a]) {
                        m.set(self.slot[r], col, c);
                    }
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    fn build_injective(&self, i: usize) -> Rep {
        let q = self.quiver();
        let n = self.vertex_count();
        let dims: Vec<usize> = (0..n).map(|j| self.basis.pair_dim(j, i)).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let (j, k) = (arr.source, arr.target);
                let mut m = Matrix::zeros(dims[k], dims[j]);
                for (row, &w2) in self.basis.pair[k][i].iter().enumerate() {
                    for &(w, c) in self.basis.mul_words(self.arrow_word[a], w2) {
                        m.set(row, self.slot[w], c);
                    }
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    pub fn projective(&self, i: usize) -> Result<&Rep> {
        self.projectives.get(i).ok_or_else(|| Error::UnknownVertex(alloc::format!("{i}")))
    }

    pub fn injective(&self, i: usize) -> Result<&Rep> {
        self.injectives.get(i).ok_or_else(|| Error::UnknownVertex(alloc::format!("{i}")))
    }

    pub fn projectives(&self) -> &[Rep] {
        &self.projectives
    }

    pub fn injectives(&self) -> &[Rep] {
        &self.injectives
    }

    pub fn simple(&self, i: usize) -> Rep {
        Rep::simple(self.quiver(), i)
    }

    /// The regular right module.
    pub fn regular(&self) -> Rep {
        Rep::direct_sum_all(self.quiver(), self.projectives.iter())
    }

    pub fn check(&self, m: &Rep) -> Result<()> {
        m.check_relations(&self.pres)
    }

    fn hom_system(&self, m: &Rep, n: &Rep) -> (Matrix, Vec<usize>) {
        let f = self.field();
        let q = self.quiver();
        let mut offsets = Vec::with_capacity(m.dims.len() + 1);
        let mut total = 0;
        for v in 0..m.dims.len() {
            offsets.push(total);
            total += m.dims[v] * n.dims[v];
        }
        offsets.push(total);
        let neqs: usize = q.arrows.iter().map(|a| n.dims[a.target] * m.dims[a.source]).sum();
        let mut sys = Matrix::zeros(neqs, total);
        let mut row = 0;
        for (ai, a) in q.arrows.iter().enumerate() {
            let (s, t) = (a.source, a.target);
            let na = &n.maps[ai];
            let ma = &m.maps[ai];
            for r in 0..n.dims[t] {
                for c in 0..m.dims[s] {
                    // (N(a) phi_s)[r][c] - (phi_t M(a))[r][c]
                    for k in 0..n.dims[s] {
                        let x = na.get(r, k);
                        if x != 0 {
                            let idx = offsets[s] + k * m.dims[s] + c;
                            sys.set(row, idx, f.add(sys.get(row, idx), x));
                        }
                    }
                    for k in 0..m.dims[t] {
                        let x = ma.get(k, c);
                        if x != 0 {
                            let idx = offsets[t] + r * m.dims[t] + k;
                            sys.set(row, idx, f.sub(sys.get(row, idx), x));
                        }
                    }
                    row += 1;
                }
            }
        }
        (sys, offsets)
    }

    /// Basis of `Hom(M, N)`.
    pub fn hom_basis(&self, m: &Rep, n: &Rep) -> Result<Vec<RepMap>> {
        m.check_shape(self.quiver())?;
        n.check_shape(self.quiver())?;
        let f = self.field();
        let (sys, offsets) = self.hom_system(m, n);
        let ker = sys.nullspace(f);
        Ok((0..ker.cols())
            .map(|c| {
                let blocks = (0..m.dims.len())
                    .map(|v| {
                        let data = (offsets[v]..offsets[v + 1]).map(|i| ker.get(i, c)).collect();
                        Matrix::from_vec(n.dims[v], m.dims[v], data)
                    })
                    .collect();
                RepMap { blocks }
            })
            .collect())
    }

    pub fn hom_dim(&self, m: &Rep, n: &Rep) -> usize {
        if m.is_zero() || n.is_zero() {
            return 0;
        }
        let (sys, offsets) = self.hom_system(m, n);
        offsets[offsets.len() - 1] - sys.rank(self.field())
    }

    /// Kernel of `g: M -> N` with its inclusion into `M`.
    pub fn kernel(&self, m: &Rep, g: &RepMap) -> (Rep, RepMap) {
        let f = self.field();
        let sub: Vec<Matrix> = g.blocks.iter().map(|b| b.nullspace(f)).collect();
        (m.restrict(self.quiver(), f, &sub), RepMap { blocks: sub })
    }

    /// Image of `g: M -> N` as a submodule of `N`, with its inclusion.
    pub fn image(&self, n: &Rep, g: &RepMap) -> (Rep, RepMap) {
        let f = self.field();
        let sub: Vec<Matrix> = g.blocks.iter().map(|b| b.column_basis(f)).collect();
        (n.restrict(self.quiver(), f, &sub), RepMap { blocks: sub })
    }

    /// Cokernel of `g: M -> N` with the projection from `N`.
    pub fn cokernel(&self, n: &Rep, g: &RepMap) -> (Rep, RepMap) {
        let f = self.field();
        let sub: Vec<Matrix> = g.blocks.iter().map(|b| b.column_basis(f)).collect();
        n.quotient(self.quiver(), f, &sub)
    }

    /// Vertexwise basis of the radical: the span of all arrow images.
    pub fn radical_subspaces(&self, m: &Rep) -> Vec<Matrix> {
        let f = self.field();
        let q = self.quiver();
        (0..m.dims.len())
            .map(|v| {
                let mut acc = Matrix::zeros(m.dims[v], 0);
                for a in q.arrows_into(v) {
                    acc = acc.hstack(&m.maps[a]);
                }
                acc.column_basis(f)
            })
            .collect()
    }

    pub fn radical(&self, m: &Rep) -> (Rep, RepMap) {
        let sub = self.radical_subspaces(m);
        (m.restrict(self.quiver(), self.field(), &sub), RepMap { blocks: sub })
    }

    pub fn top(&self, m: &Rep) -> (Rep, RepMap) {
        let sub = self.radical_subspaces(m);
        m.quotient(self.quiver(), self.field(), &sub)
    }

    pub fn top_dims(&self, m: &Rep) -> Vec<usize> {
        self.radical_subspaces(m).iter().zip(&m.dims).map(|(r, d)| d - r.cols()).collect()
    }

    /// Socle dimensions: the common kernel of all outgoing arrows.
    pub fn socle_dims(&self, m: &Rep) -> Vec<usize> {
        let f = self.field();
        let q = self.quiver();
        (0..m.dims.len())
            .map(|v| {
                let mut acc = Matrix::zeros(0, m.dims[v]);
                for a in q.arrows_from(v) {
                    acc = acc.vstack(&m.maps[a]);
                }
                m.dims[v] - acc.rank(f)
            })
            .collect()
    }

    pub fn is_projective(&self, m: &Rep) -> bool {
        let tops = self.top_dims(m);
        let mut dims = vec![0usize; m.dims.len()];
        for (i, &c) in tops.iter().enumerate() {
            for (v, d) in dims.iter_mut().enumerate() {
                *d += c * self.projectives[i].dims[v];
            }
        }
        dims == m.dims
    }

    pub fn is_injective(&self, m: &Rep) -> bool {
        let socs = self.socle_dims(m);
        let mut dims = vec![0usize; m.dims.len()];
        for (i, &c) in socs.iter().enumerate() {
            for (v, d) in dims.iter_mut().enumerate() {
                *d += c * self.injectives[i].dims[v];
            }
        }
        dims == m.dims
    }

    /// Image of a vector `x` in `M_v` under all basis words starting at `v`,
    /// laid out like the vertex spaces of `P(v)`.
    fn generator_map(&self, m: &Rep, v: usize, x: &[u32]) -> Vec<Matrix> {
        let f = self.field();
        let _q = self.quiver();
        (0..self.vertex_count())
            .map(|j| {
                let cols: Vec<Vec<u32>> = self.basis.pair[v][j]
                    .iter()
                    .map(|&w| m.path_action(f, &self.basis.words[w]).mul_vec(f, x))
                    .collect();
                Matrix::from_columns(m.dims[j], &cols)
            })
            .collect()
    }

    /// Minimal projective cover.
    pub fn projective_cover(&self, m: &Rep) -> Result<Cover> {
        if m.is_zero() {
            return Err(Error::ZeroModule);
        }
        let f = self.field();
        let rad = self.radical_subspaces(m);
        let mut tops = Vec::new();
        let mut blocks: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect();
        for v in 0..m.dims.len() {
            let gens = complement_columns(f, &rad[v]);
            for c in 0..gens.cols() {
                let part = self.generator_map(m, v, &gens.column(c));
                for (b, p) in blocks.iter_mut().zip(&part) {
                    *b = b.hstack(p);
                }
                tops.push(v);
            }
        }
        let projective = Rep::direct_sum_all(self.quiver(), tops.iter().map(|&v| &self.projectives[v]));
        Ok(Cover { projective, tops, epi: RepMap { blocks } })
    }

    /// Syzygy with its inclusion into the projective cover.
    pub fn syzygy_with_cover(&self, m: &Rep) -> Result<(Rep, RepMap, Cover)> {
        let cover = self.projective_cover(m)?;
        let (k, inc) = self.kernel(&cover.projective, &cover.epi);
        debug_assert!({
            let rad = self.radical_subspaces(&cover.projective);
            let f = self.field();
            inc.blocks.iter().zip(&rad).all(|(i, r)| r.hstack(i).rank(f) == r.cols())
        });
        Ok((k, inc, cover))
    }

    pub fn syzygy(&self, m: &Rep) -> Rep {
        if m.is_zero() {
            return m.clone();
        }
        self.syzygy_with_cover(m).map(|(k, _, _)| k).expect("nonzero module has a cover")
    }

    /// `dim Ext^1(M, N)`.
    pub fn ext1_dim(&self, m: &Rep, n: &Rep) -> usize {
        if m.is_zero() || n.is_zero() {
            return 0;
        }
        let (om, _, cover) = self.syzygy_with_cover(m).expect("nonzero");
        let hom_p0: usize = cover.tops.iter().map(|&j| n.dims[j]).sum();
        self.hom_dim(&om, n) + self.hom_dim(m, n) - hom_p0
    }

    /// Dimension of the stable Hom space: maps modulo those factoring
    /// through a projective, which all factor through the cover of `n`.
    pub fn stable_hom_dim(&self, m: &Rep, n: &Rep) -> usize {
        if m.is_zero() || n.is_zero() {
            return 0;
        }
        let f = self.field();
        let all = self.hom_dim(m, n);
        let cover = self.projective_cover(n).expect("nonzero");
        let through = self.hom_basis(m, &cover.projective).expect("same algebra");
        let cols: Vec<Vec<u32>> = through.iter().map(|g| cover.epi.compose(f, g).flatten()).collect();
        let len = cols.first().map_or(0, Vec::len);
        all - Matrix::from_columns(len, &cols).rank(f)
    }

    /// AR translate through the Nakayama functor applied to a minimal
    /// projective presentation.
    pub fn ar_translate(&self, m: &Rep) -> Rep {
        if m.is_zero() {
            return m.clone();
        }
        let f = self.field();
        let q = self.quiver();
        let (om, inc, cover) = self.syzygy_with_cover(m).expect("nonzero");
        if om.is_zero() {
            return Rep::zero(q);
        }
        let n = self.vertex_count();
        let js = &cover.tops;
        // generators of the syzygy, as elements of P0
        let rad = self.radical_subspaces(&om);
        let mut gens: Vec<(usize, Vec<u32>)> = Vec::new();
        for v in 0..n {
            let c = complement_columns(f, &rad[v]);
            for k in 0..c.cols() {
                gens.push((v, inc.blocks[v].mul_vec(f, &c.column(k))));
            }
        }
        // x[t][s]: component of generator t on P(j_s), an element of e_{j_s} B e_{i_t}
        let xs: Vec<Vec<Vec<(usize, u32)>>> = gens
            .iter()
            .map(|(i, g)| {
                let mut off = 0;
                js.iter()
                    .map(|&j| {
                        let words = &self.basis.pair[j][*i];
                        let x = words.iter().enumerate().filter(|(k, _)| g[off + k] != 0).map(|(k, &w)| (w, g[off + k])).collect();
                        off += words.len();
                        x
                    })
                    .collect()
            })
            .collect();
        let is: Vec<usize> = gens.iter().map(|(i, _)| *i).collect();
        let nu_p1 = Rep::direct_sum_all(q, is.iter().map(|&i| &self.injectives[i]));
        let nu_p0 = Rep::direct_sum_all(q, js.iter().map(|&j| &self.injectives[j]));
        let blocks = (0..n)
            .map(|k| self.nu_block(k, js, &is, &xs, Matrix::zeros(nu_p0.dims[k], nu_p1.dims[k])))
            .collect();
        let nuf = RepMap { blocks };
        debug_assert!(nuf.is_intertwiner(q, f, &nu_p1, &nu_p0));
        self.kernel(&nu_p1, &nuf).0
    }

    fn nu_block(
        &self,
        k: usize,
        js: &[usize],
        is: &[usize],
        xs: &[Vec<Vec<(usize, u32)>>],
        mut mat: Matrix,
    ) -> Matrix {
        let f = self.field();
        let mut row_off = 0;
        for (s, &j) in js.iter().enumerate() {
            let rows = &self.basis.pair[k][j];
            let mut col_off = 0;
            for (t, &i) in is.iter().enumerate() {
                let cols = &self.basis.pair[k][i];
                for (r, &w) in rows.iter().enumerate() {
                    for &(z, c) in &self.basis.mul(f, &[(w, 1)], &xs[t][s]) {
                        mat.set(row_off + r, col_off + self.slot[z], c);
                    }
                }
                col_off += cols.len();
            }
            row_off += rows.len();
        }
        mat
    }
}

/// An algebra together with its opposite, for the dual constructions.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub fwd: BoundAlgebra,
    pub op: BoundAlgebra,
    pub seed: u64,
}

impl core::ops::Deref for Algebra {
    type Target = BoundAlgebra;
    fn deref(&self) -> &BoundAlgebra {
        &self.fwd
    }
}

impl Algebra {
    pub fn new(pres: AlgebraPresentation) -> Result<Self> {
        Algebra::with_max_len(pres, DEFAULT_MAX_LEN)
    }

    pub fn with_max_len(pres: AlgebraPresentation, max_len: usize) -> Result<Self> {
        let op = BoundAlgebra::new(pres.opposite(), max_len)?;
        let fwd = BoundAlgebra::new(pres, max_len)?;
        Ok(Algebra { fwd, op, seed: 0 })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn cosyzygy(&self, m: &Rep) -> Rep {
        self.op.syzygy(&m.dual()).dual()
    }

    pub fn ar_translate_inverse(&self, m: &Rep) -> Rep {
        self.op.ar_translate(&m.dual()).dual()
    }

    /// Transpose: a module over the opposite algebra.
    pub fn transpose(&self, m: &Rep) -> Rep {
        self.fwd.ar_translate(m).dual()
    }

    pub fn syzygy_power(&self, m: &Rep, k: usize) -> Rep {
        (0..k).fold(m.clone(), |acc, _| self.fwd.syzygy(&acc))
    }

    pub fn cosyzygy_power(&self, m: &Rep, k: usize) -> Rep {
        (0..k).fold(m.clone(), |acc, _| self.cosyzygy(&acc))
    }

    /// `dim Ext^i(M, B)` for `i >= 1`.
    pub fn ext_against_algebra(&self, m: &Rep, i: usize) -> usize {
        assert!(i >= 1);
        let shifted = self.syzygy_power(m, i - 1);
        self.fwd.ext1_dim(&shifted, &self.fwd.regular())
    }

    /// `dim Ext^i(D B, M)`, the dual test for injective Cohen-Macaulay modules.
    pub fn ext_from_dual(&self, m: &Rep, i: usize) -> usize {
        assert!(i >= 1);
        let shifted = self.cosyzygy_power(m, i - 1);
        self.op.ext1_dim(&shifted.dual(), &self.op.regular())
    }
}
