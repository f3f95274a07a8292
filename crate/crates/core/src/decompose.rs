//! Endomorphism rings, indecomposability, Krull-Schmidt decomposition and
//! isomorphism testing.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bound::{Algebra, BoundAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rep::{Rep, RepMap};

const TRIALS: usize = 24;
const SPLIT_ATTEMPTS: usize = 64;

/// Basis of `End(M)` with the basis of its Jacobson radical.
#[derive(Clone, Debug)]
pub struct Endomorphisms {
    pub basis: Vec<RepMap>,
    /// Coordinates of radical elements in `basis`, one per column.
    pub radical: Matrix,
}

impl Endomorphisms {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn radical_dim(&self) -> usize {
        self.radical.cols()
    }

    pub fn is_local(&self) -> bool {
        self.dim() > 0 && self.dim() - self.radical_dim() == 1
    }

    pub fn combine(&self, f: Field, coeffs: &[u32]) -> RepMap {
        let mut acc = RepMap { blocks: self.basis[0].blocks.iter().map(|b| Matrix::zeros(b.rows(), b.cols())).collect() };
        for (c, e) in coeffs.iter().zip(&self.basis) {
            if *c != 0 {
                acc = acc.add(f, &e.scale(f, *c));
            }
        }
        acc
    }
}

fn trace(f: Field, x: &RepMap) -> u32 {
    x.blocks.iter().fold(0, |acc, b| f.add(acc, b.trace(f)))
}

fn map_power(f: Field, x: &RepMap, mut e: usize) -> RepMap {
    let mut base = x.clone();
    let mut acc = RepMap { blocks: x.blocks.iter().map(|b| Matrix::identity(b.rows())).collect() };
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.compose(f, &base);
        }
        base = base.compose(f, &base);
        e >>= 1;
    }
    acc
}

/// Eigenvalues in the prime field of a random Krylov polynomial of `x`.
fn some_eigenvalue(f: Field, x: &RepMap, rng: &mut ChaCha8Rng) -> Option<u32> {
    let mats: Vec<&Matrix> = x.blocks.iter().filter(|b| b.rows() > 0).collect();
    let n: usize = mats.iter().map(|b| b.rows()).sum();
    if n == 0 {
        return None;
    }
    let p = f.characteristic();
    let apply = |v: &[u32]| -> Vec<u32> {
        let mut out = Vec::with_capacity(n);
        let mut off = 0;
        for b in &mats {
            out.extend(b.mul_vec(f, &v[off..off + b.rows()]));
            off += b.rows();
        }
        out
    };
    let v0: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
    let mut krylov = vec![v0];
    let coeffs = loop {
        let next = apply(krylov.last().unwrap());
        let cols: Vec<Vec<u32>> = krylov.clone();
        let k = Matrix::from_columns(n, &cols);
        if let Some(sol) = k.solve(f, &Matrix::from_columns(n, core::slice::from_ref(&next))) {
            break sol.column(0);
        }
        krylov.push(next);
    };
    // x^d - sum coeffs[i] x^i
    let d = coeffs.len();
    let horner = |l: u32| {
        let mut acc = 1u32;
        for i in (0..d).rev() {
            acc = f.sub(f.mul(acc, l), coeffs[i]);
        }
        acc
    };
    let start = rng.gen_range(0..p);
    (0..p).map(|k| (start + k) % p).find(|&l| horner(l) == 0)
}

impl BoundAlgebra {
    pub fn endomorphisms(&self, m: &Rep) -> Result<Endomorphisms> {
        let f = self.field();
        if (f.characteristic() as usize) <= m.dim() {
            return Err(Error::FieldTooSmall { p: f.characteristic(), dim: m.dim() });
        }
        let basis = self.hom_basis(m, m)?;
        let k = basis.len();
        let mut gram = Matrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let t = trace(f, &basis[i].compose(f, &basis[j]));
                gram.set(i, j, t);
                gram.set(j, i, t);
            }
        }
        let radical = gram.nullspace(f);
        Ok(Endomorphisms { basis, radical })
    }

    pub fn is_indecomposable_seeded(&self, m: &Rep, seed: u64) -> Result<bool> {
        if m.is_zero() {
            return Ok(false);
        }
        let end = self.endomorphisms(m)?;
        if end.is_local() {
            return Ok(true);
        }
        Ok(self.split_once(m, &end, seed)?.is_none())
    }

    /// Fitting decomposition along a random endomorphism shifted by an
    /// eigenvalue; `None` when no split was found.
    fn split_once(&self, m: &Rep, end: &Endomorphisms, seed: u64) -> Result<Option<(Rep, Rep)>> {
        let f = self.field();
        let q = self.quiver();
        let p = f.characteristic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0ff1_771e);
        for _ in 0..SPLIT_ATTEMPTS {
            let coeffs: Vec<u32> = (0..end.dim()).map(|_| rng.gen_range(0..p)).collect();
            let a = end.combine(f, &coeffs);
            let Some(l) = some_eigenvalue(f, &a, &mut rng) else { continue };
            let y = a.add(f, &RepMap::identity(m).scale(f, f.neg(l)));
            let yn = map_power(f, &y, m.dim());
            let ker: Vec<Matrix> = yn.blocks.iter().map(|b| b.nullspace(f)).collect();
            let im: Vec<Matrix> = yn.blocks.iter().map(|b| b.column_basis(f)).collect();
            let kd: usize = ker.iter().map(Matrix::cols).sum();
            if kd == 0 || kd == m.dim() {
                continue;
            }
            return Ok(Some((m.restrict(q, f, &ker), m.restrict(q, f, &im))));
        }
        Ok(None)
    }

    /// Indecomposable summands, each exactly once per multiplicity.
    pub fn decompose_seeded(&self, m: &Rep, seed: u64) -> Result<Vec<Rep>> {
        let mut out = Vec::new();
        let mut stack = vec![m.clone()];
        let mut round = 0u64;
        while let Some(x) = stack.pop() {
            if x.is_zero() {
                continue;
            }
            let end = self.endomorphisms(&x)?;
            if end.is_local() {
                out.push(x);
                continue;
            }
            round += 1;
            match self.split_once(&x, &end, seed.wrapping_add(round))? {
                Some((a, b)) => {
                    stack.push(a);
                    stack.push(b);
                }
                None => out.push(x),
            }
        }
        Ok(out)
    }

    pub fn is_isomorphic_seeded(&self, m: &Rep, n: &Rep, seed: u64) -> Result<bool> {
        m.check_shape(self.quiver())?;
        n.check_shape(self.quiver())?;
        if m.dims != n.dims {
            return Ok(false);
        }
        if m.is_zero() {
            return Ok(true);
        }
        if m == n {
            return Ok(true);
        }
        let f = self.field();
        let p = f.characteristic();
        let homs = self.hom_basis(m, n)?;
        let k = homs.len();
        if k == 0 || self.hom_dim(n, m) != k || self.hom_dim(m, m) != k || self.hom_dim(n, n) != k {
            return Ok(false);
        }
        let combine = |c: &[u32]| {
            let mut acc = RepMap::zero(m, n);
            for (x, h) in c.iter().zip(&homs) {
                if *x != 0 {
                    acc = acc.add(f, &h.scale(f, *x));
                }
            }
            acc
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..TRIALS {
            let c: Vec<u32> = (0..k).map(|_| rng.gen_range(0..p)).collect();
            if combine(&c).is_invertible(f) {
                return Ok(true);
            }
        }
        let deg = m.dim();
        if k <= 4 && (deg as u64 + 1).pow(k as u32) <= 1 << 20 {
            // a nonzero polynomial of degree deg does not vanish on a grid of side deg + 1
            let side = deg as u32 + 1;
            let total = (side as u64).pow(k as u32);
            for idx in 0..total {
                let mut r = idx;
                let c: Vec<u32> = (0..k)
                    .map(|_| {
                        let x = (r % side as u64) as u32;
                        r /= side as u64;
                        x
                    })
                    .collect();
                if combine(&c).is_invertible(f) {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        // Schwartz-Zippel: each trial misses an existing isomorphism with
        // probability at most deg / p
        if (deg as f64 / p as f64) < 1.0 / 8.0 {
            return Ok(false);
        }
        Err(Error::Inconclusive)
    }
}

impl Algebra {
    pub fn endomorphism_ring(&self, m: &Rep) -> Result<Endomorphisms> {
        self.fwd.endomorphisms(m)
    }

    pub fn is_indecomposable(&self, m: &Rep) -> Result<bool> {
        self.fwd.is_indecomposable_seeded(m, self.seed)
    }

    pub fn decompose(&self, m: &Rep) -> Result<Vec<Rep>> {
        self.fwd.decompose_seeded(m, self.seed)
    }

    pub fn is_isomorphic(&self, m: &Rep, n: &Rep) -> Result<bool> {
        self.fwd.is_isomorphic_seeded(m, n, self.seed)
    }
}
