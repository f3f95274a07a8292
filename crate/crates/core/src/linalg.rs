//! Dense matrices over a prime field.
//!
//! Matrices are row-major. A matrix of shape `rows x cols` acts on column
//! vectors of length `cols`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, f: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        let p = f.characteristic() as u64;
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let brow = other.row(k);
                for (j, &b) in brow.iter().enumerate() {
                    acc[j] = (acc[j] + a * b as u64) % p;
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.set(i, j, v as u32);
            }
        }
        out
    }

    pub fn mul_vec(&self, f: Field, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u32;
                for (k, &x) in v.iter().enumerate() {
                    if x != 0 {
                        acc = f.add(acc, f.mul(self.get(i, k), x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, f: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, f: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: Field, s: u32) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn axpy(&mut self, f: Field, s: u32, other: &Matrix) {
        assert_eq!(self.shape(), other.shape());
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(s, b));
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c));
            }
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, other);
        m
    }

    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.set(i, j, self.get(r, c));
            }
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, idx.len());
        for (j, &c) in idx.iter().enumerate() {
            for r in 0..self.rows {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            for c in 0..self.cols {
                m.set(i, c, self.get(r, c));
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self, f: Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(piv) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..self.cols {
                    self.data.swap(piv * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col));
            for c in col..self.cols {
                let v = self.get(row, c);
                self.set(row, c, f.mul(v, inv));
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self, f: Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place(f);
        (m, p)
    }

    pub fn rank(&self, f: Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}` as the columns of the result.
    pub fn nullspace(&self, f: Field) -> Matrix {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Basis of the column space: a subset of the original columns.
    pub fn column_basis(&self, f: Field) -> Matrix {
        let pivots = self.rref(f).1;
        self.select_columns(&pivots)
    }

    /// Solves `self * X = b` for one particular solution, or `None`.
    pub fn solve(&self, f: Field, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref(f);
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, r.get(i, self.cols + c));
            }
        }
        Some(x)
    }

    pub fn inverse(&self, f: Field) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(f, &Matrix::identity(self.rows))?;
        if self.rank(f) == self.rows {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self, f: Field) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    pub fn trace(&self, f: Field) -> u32 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }
}

/// Columns completing the columns of `sub` (assumed independent) to a basis
/// of the whole space: chosen among standard basis vectors.
pub fn complement_columns(f: Field, sub: &Matrix) -> Matrix {
    let n = sub.rows();
    let mut current = sub.clone();
    let mut chosen = Vec::new();
    let mut rank = current.rank(f);
    for e in 0..n {
        if rank == n {
            break;
        }
        let mut unit = Matrix::zeros(n, 1);
        unit.set(e, 0, 1);
        let trial = current.hstack(&unit);
        let r = trial.rank(f);
        if r > rank {
            rank = r;
            current = trial;
            chosen.push(e);
        }
    }
    let mut out = Matrix::zeros(n, chosen.len());
    for (k, &e) in chosen.iter().enumerate() {
        out.set(e, k, 1);
    }
    out
}

/// Basis of the intersection of the column spaces of `a` and `b`.
pub fn intersect_columns(f: Field, a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.rows(), b.rows());
    // a x = b y  <=>  [a | -b] (x; y) = 0
    let negb = b.scale(f, f.neg(1));
    let ker = a.hstack(&negb).nullspace(f);
    let xs = ker.submatrix(0..a.cols(), 0..ker.cols());
    a.mul(f, &xs).column_basis(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::new(101).unwrap()
    }

    #[test]
    fn nullspace_is_annihilated() {
        let f = f();
        let a = Matrix::from_rows(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 0, 1]], 4);
        let n = a.nullspace(f);
        assert_eq!(n.cols(), 2);
        assert!(a.mul(f, &n).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f();
        let a = Matrix::from_rows(&[vec![2, 1], vec![7, 5]], 2);
        let inv = a.inverse(f).unwrap();
        assert_eq!(a.mul(f, &inv), Matrix::identity(2));
        let singular = Matrix::from_rows(&[vec![1, 2], vec![2, 4]], 2);
        assert!(singular.inverse(f).is_none());
    }

    #[test]
    fn solve_inconsistent() {
        let f = f();
        let a = Matrix::from_rows(&[vec![1, 1], vec![1, 1]], 2);
        let b = Matrix::from_rows(&[vec![1], vec![2]], 1);
        assert!(a.solve(f, &b).is_none());
    }

    #[test]
    fn intersection_of_planes() {
        let f = f();
        let a = Matrix::from_columns(3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Matrix::from_columns(3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = intersect_columns(f, &a, &b);
        assert_eq!(i.cols(), 1);
        assert_eq!(i.column(0).iter().filter(|&&x| x != 0).count(), 1);
        assert_ne!(i.get(1, 0), 0);
    }

    #[test]
    fn complement_spans() {
        let f = f();
        let a = Matrix::from_columns(3, &[vec![1, 1, 0]]);
        let c = complement_columns(f, &a);
        assert_eq!(a.hstack(&c).rank(f), 3);
    }
}
