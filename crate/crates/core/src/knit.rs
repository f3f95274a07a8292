//! Enumeration of the indecomposable modules of a representation-finite
//! algebra by walking its Auslander-Reiten quiver.
//!
//! Starting from the projectives and injectives, every module found
//! contributes its translates and its direct predecessors: the summands of
//! the radical for projectives, the middle term of the almost split sequence
//! otherwise. A finite connected component of the AR quiver is the whole
//! module category, so termination certifies completeness for connected
//! algebras.

use alloc::vec::Vec;

use crate::bound::{Algebra, BoundAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{complement_columns, Matrix};
use crate::registry::IsoRegistry;
use crate::rep::{Rep, RepMap};

pub const DEFAULT_KNIT_LIMIT: usize = 2000;

fn coords(vs: &[RepMap]) -> Matrix {
    let cols: Vec<Vec<u32>> = vs.iter().map(RepMap::flatten).collect();
    let rows = cols.first().map_or(0, Vec::len);
    Matrix::from_columns(rows, &cols)
}

impl BoundAlgebra {
    /// Middle term of the almost split sequence ending at the indecomposable
    /// non-projective `m`.
    pub fn ar_middle_term(&self, m: &Rep) -> Result<Rep> {
        let f = self.field();
        let (om, inc, cover) = self.syzygy_with_cover(m)?;
        let t = self.ar_translate(m);
        let v = self.hom_basis(&om, &t)?;
        let vm = coords(&v);
        let k = v.len();
        let restricted: Vec<RepMap> =
            self.hom_basis(&cover.projective, &t)?.iter().map(|phi| phi.compose(f, &inc)).collect();
        let r = if restricted.is_empty() {
            Matrix::zeros(k, 0)
        } else {
            vm.solve(f, &coords(&restricted)).expect("restrictions lie in the Hom space").column_basis(f)
        };
        let comp = complement_columns(f, &r);
        let full = r.hstack(&comp);
        let proj = full.inverse(f).expect("basis").submatrix(r.cols()..k, 0..k);
        let end = self.endomorphisms(&t)?;
        let mut cond = Matrix::zeros(0, k);
        for j in 0..end.radical_dim() {
            let g = end.combine(f, &end.radical.column(j));
            let gv: Vec<RepMap> = v.iter().map(|x| g.compose(f, x)).collect();
            let gk = vm.solve(f, &coords(&gv)).expect("closed under composition");
            cond = cond.vstack(&proj.mul(f, &gk));
        }
        let socle = if cond.rows() == 0 { Matrix::identity(k) } else { cond.nullspace(f) };
        let c = (0..socle.cols())
            .map(|i| socle.column(i))
            .find(|c| r.hstack(&Matrix::from_columns(k, core::slice::from_ref(c))).rank(f) > r.cols())
            .ok_or(Error::Inconclusive)?;
        let mut h = RepMap::zero(&om, &t);
        for (x, vi) in c.iter().zip(&v) {
            if *x != 0 {
                h = h.add(f, &vi.scale(f, *x));
            }
        }
        let target = cover.projective.direct_sum(&t);
        let blocks = inc.blocks.iter().zip(&h.blocks).map(|(a, b)| a.vstack(&b.scale(f, f.neg(1)))).collect();
        let (e, _) = self.cokernel(&target, &RepMap { blocks });
        debug_assert!(e.dims.iter().zip(m.dims.iter().zip(&t.dims)).all(|(a, (b, c))| *a == b + c));
        Ok(e)
    }

}

impl Algebra {
    /// All indecomposable modules, when the walk closes up within `limit`.
    pub fn knit_indecomposables(&self, limit: usize) -> Result<IsoRegistry> {
        let seed = self.seed;
        let alg = &self.fwd;
        let mut reg = IsoRegistry::new();
        let mut queue = Vec::new();
        for p in alg.projectives().iter().chain(alg.injectives()) {
            let (id, new) = reg.insert(alg, p.clone(), seed)?;
            if new {
                queue.push(id);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let m = reg.get(queue[head]).clone();
            head += 1;
            let mut found = Vec::new();
            if reg.is_projective(queue[head - 1]) {
                found.extend(alg.decompose_seeded(&alg.radical(&m).0, seed)?);
            } else {
                found.push(alg.ar_translate(&m));
                found.extend(alg.decompose_seeded(&alg.ar_middle_term(&m)?, seed)?);
            }
            if !alg.is_injective(&m) {
                found.push(self.ar_translate_inverse(&m));
            }
            for x in found {
                if x.is_zero() {
                    continue;
                }
                let (id, new) = reg.insert(alg, x, seed)?;
                if new {
                    if reg.len() > limit {
                        return Err(Error::EnumerationLimit(limit));
                    }
                    queue.push(id);
                }
            }
        }
        Ok(reg)
    }
}
