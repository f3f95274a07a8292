//! Representations of bound quivers and morphisms between them.
//!
//! An arrow `a: s -> t` acts by a matrix of shape `dims[t] x dims[s]` on
//! column vectors. Paths compose left to right, so the word `a b` acts as
//! `M(b) M(a)`.

use alloc::vec::Vec;

use crate::algebra::{AlgebraPresentation, PathWord, Quiver};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{complement_columns, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl Rep {
    pub fn zero(q: &Quiver) -> Rep {
        Rep::from_dims(q, alloc::vec![0; q.vertex_count()])
    }

    /// Representation with the given dimensions and all arrows zero.
    pub fn from_dims(q: &Quiver, dims: Vec<usize>) -> Rep {
        let maps = q.arrows.iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        Rep { dims, maps }
    }

    pub fn simple(q: &Quiver, v: usize) -> Rep {
        let mut dims = alloc::vec![0; q.vertex_count()];
        dims[v] = 1;
        Rep::from_dims(q, dims)
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Checks shapes against the quiver.
    pub fn check_shape(&self, q: &Quiver) -> Result<()> {
        if self.dims.len() != q.vertex_count() || self.maps.len() != q.arrow_count() {
            return Err(Error::AlgebraMismatch);
        }
        for (a, m) in q.arrows.iter().zip(&self.maps) {
            if m.shape() != (self.dims[a.target], self.dims[a.source]) {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok(())
    }

    pub fn path_action(&self, f: Field, w: &PathWord) -> Matrix {
        let mut acc = Matrix::identity(self.dims[w.start]);
        for &a in &w.arrows {
            acc = self.maps[a].mul(f, &acc);
        }
        acc
    }

    /// Verifies that every relation acts as zero.
    pub fn check_relations(&self, pres: &AlgebraPresentation) -> Result<()> {
        self.check_shape(&pres.quiver)?;
        let f = pres.field;
        for (k, r) in pres.relations.iter().enumerate() {
            let (s, t) = {
                let w = &r.terms[0].1;
                (w.start, w.end(&pres.quiver))
            };
            let mut acc = Matrix::zeros(self.dims[t], self.dims[s]);
            for (c, w) in &r.terms {
                acc.axpy(f, *c, &self.path_action(f, w));
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(k));
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        Rep {
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect(),
        }
    }

    pub fn direct_sum_all<'a>(q: &Quiver, parts: impl IntoIterator<Item = &'a Rep>) -> Rep {
        parts.into_iter().fold(Rep::zero(q), |acc, m| acc.direct_sum(m))
    }

    /// Vector-space dual; a representation of the opposite quiver.
    pub fn dual(&self) -> Rep {
        Rep { dims: self.dims.clone(), maps: self.maps.iter().map(Matrix::transpose).collect() }
    }

    /// Submodule spanned vertexwise by the columns of `sub` (full column rank,
    /// invariant under all arrows).
    pub fn restrict(&self, q: &Quiver, f: Field, sub: &[Matrix]) -> Rep {
        let dims = sub.iter().map(Matrix::cols).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let image = self.maps[i].mul(f, &sub[a.source]);
                sub[a.target].solve(f, &image).expect("subspace is not invariant")
            })
            .collect();
        Rep { dims, maps }
    }

    /// Quotient by an invariant subspace, with the projection blocks.
    pub fn quotient(&self, q: &Quiver, f: Field, sub: &[Matrix]) -> (Rep, RepMap) {
        let mut reps = Vec::with_capacity(sub.len());
        let mut proj = Vec::with_capacity(sub.len());
        for (v, s) in sub.iter().enumerate() {
            let c = complement_columns(f, s);
            let full = s.hstack(&c);
            let inv = full.inverse(f).expect("subspace basis is not independent");
            let p = inv.submatrix(s.cols()..self.dims[v], 0..self.dims[v]);
            reps.push(c);
            proj.push(p);
        }
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| proj[a.target].mul(f, &self.maps[i].mul(f, &reps[a.source])))
            .collect();
        let dims = reps.iter().map(Matrix::cols).collect();
        (Rep { dims, maps }, RepMap { blocks: proj })
    }

    /// Transports the structure along vertexwise invertible base changes:
    /// the result has `maps'[a] = g_t^{-1} M(a) g_s`.
    pub fn change_basis(&self, q: &Quiver, f: Field, g: &[Matrix]) -> Rep {
        let inv: Vec<Matrix> = g.iter().map(|m| m.inverse(f).expect("singular base change")).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| inv[a.target].mul(f, &self.maps[i].mul(f, &g[a.source])))
            .collect();
        Rep { dims: self.dims.clone(), maps }
    }
}

/// Vertexwise blocks of a module homomorphism: `blocks[v]` has shape
/// `target.dims[v] x source.dims[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMap {
    pub blocks: Vec<Matrix>,
}

impl RepMap {
    pub fn zero(m: &Rep, n: &Rep) -> RepMap {
        RepMap { blocks: m.dims.iter().zip(&n.dims).map(|(&a, &b)| Matrix::zeros(b, a)).collect() }
    }

    pub fn identity(m: &Rep) -> RepMap {
        RepMap { blocks: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// `self` after `other`.
    pub fn compose(&self, f: Field, other: &RepMap) -> RepMap {
        RepMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(f, b)).collect() }
    }

    pub fn add(&self, f: Field, other: &RepMap) -> RepMap {
        RepMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(f, b)).collect() }
    }

    pub fn scale(&self, f: Field, s: u32) -> RepMap {
        RepMap { blocks: self.blocks.iter().map(|a| a.scale(f, s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_intertwiner(&self, q: &Quiver, f: Field, m: &Rep, n: &Rep) -> bool {
        q.arrows.iter().enumerate().all(|(i, a)| {
            n.maps[i].mul(f, &self.blocks[a.source]) == self.blocks[a.target].mul(f, &m.maps[i])
        })
    }

    pub fn is_invertible(&self, f: Field) -> bool {
        self.blocks.iter().all(|b| b.is_invertible(f))
    }

    pub fn rank(&self, f: Field) -> usize {
        self.blocks.iter().map(|b| b.rank(f)).sum()
    }

    /// Flattened coordinates, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }
}
