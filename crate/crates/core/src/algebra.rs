//! Bound quiver algebras `kQ/I` and explicit path bases.
//!
//! Paths are read left to right along arrows. The basis is obtained by exact
//! linear algebra in the truncated path algebra: the ideal generated by the
//! relations is closed under multiplication by arrows, paths longer than the
//! current truncation are dropped, and the truncation grows until every path
//! of the top length lies in the ideal.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

pub const DEFAULT_MAX_LEN: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Quiver::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        self.vertices.push(name.into());
        self.vertices.len() - 1
    }

    pub fn add_arrow(&mut self, name: impl Into<String>, source: usize, target: usize) -> usize {
        self.arrows.push(Arrow { name: name.into(), source, target });
        self.arrows.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(i, _)| i)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(i, _)| i)
    }

    fn validate(&self) -> Result<()> {
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::MalformedQuiver(format!("duplicate vertex id {v}")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::MalformedQuiver(format!("duplicate arrow id {}", a.name)));
            }
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::MalformedQuiver(format!(
                    "arrow {} has an undeclared endpoint",
                    a.name
                )));
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A path: a start vertex followed by composable arrows. The empty arrow
/// sequence is the lazy path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn lazy(v: usize) -> Self {
        PathWord { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }

    pub fn is_composable(&self, q: &Quiver) -> bool {
        let mut at = self.start;
        for &a in &self.arrows {
            match q.arrows.get(a) {
                Some(arr) if arr.source == at => at = arr.target,
                _ => return false,
            }
        }
        at < q.vertex_count()
    }

    /// Builds a path from arrow ids; the start is the source of the first arrow.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let start = match arrows.first() {
            Some(&a) => q.arrows.get(a).ok_or_else(|| Error::IncomposablePath(format!("{arrows:?}")))?.source,
            None => return Err(Error::IncomposablePath("empty arrow list".into())),
        };
        let w = PathWord { start, arrows };
        if w.is_composable(q) {
            Ok(w)
        } else {
            Err(Error::IncomposablePath(w.display(q)))
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices.get(self.start).map_or("?", |s| s.as_str()));
        }
        let names: Vec<&str> =
            self.arrows.iter().map(|&a| q.arrows.get(a).map_or("?", |x| x.name.as_str())).collect();
        names.join("*")
    }

    pub fn reversed(&self, q: &Quiver) -> PathWord {
        let end = self.end(q);
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        PathWord { start: end, arrows }
    }

    fn concat(&self, other: &PathWord) -> PathWord {
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        PathWord { start: self.start, arrows }
    }
}

/// A linear combination of parallel paths, all of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationElement {
    pub terms: Vec<(u32, PathWord)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: Vec<RelationElement>,
    pub field: Field,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, relations: Vec<RelationElement>, field: Field) -> Self {
        AlgebraPresentation { quiver, relations, field }
    }

    /// Checks the quiver and the relation invariants.
    pub fn validate(self) -> Result<Self> {
        self.quiver.validate()?;
        for (k, r) in self.relations.iter().enumerate() {
            if r.terms.iter().all(|(c, _)| *c % self.field.characteristic() == 0) {
                return Err(Error::NonAdmissibleRelation(k, "all coefficients vanish".into()));
            }
            for (_, w) in &r.terms {
                if !w.is_composable(&self.quiver) {
                    return Err(Error::IncomposablePath(w.display(&self.quiver)));
                }
            }
            let (s0, t0) = {
                let w = &r.terms[0].1;
                (w.start, w.end(&self.quiver))
            };
            if r.terms.iter().any(|(_, w)| w.start != s0 || w.end(&self.quiver) != t0) {
                return Err(Error::NonParallelRelation(k));
            }
            if let Some((_, w)) = r.terms.iter().find(|(_, w)| w.len() < 2) {
                return Err(Error::NonAdmissibleRelation(
                    k,
                    format!("summand {} has length {}", w.display(&self.quiver), w.len()),
                ));
            }
        }
        Ok(self)
    }

    pub fn opposite(&self) -> AlgebraPresentation {
        let q = self.quiver.opposite();
        let relations = self
            .relations
            .iter()
            .map(|r| RelationElement {
                terms: r.terms.iter().map(|(c, w)| (*c, w.reversed(&self.quiver))).collect(),
            })
            .collect();
        AlgebraPresentation { quiver: q, relations, field: self.field }
    }

    /// Relation with all terms reduced into the field and identical paths merged.
    fn normalized_relation(&self, r: &RelationElement) -> BTreeMap<PathWord, u32> {
        let f = self.field;
        let mut m: BTreeMap<PathWord, u32> = BTreeMap::new();
        for (c, w) in &r.terms {
            let e = m.entry(w.clone()).or_insert(0);
            *e = f.add(*e, *c % f.characteristic());
        }
        m.retain(|_, c| *c != 0);
        m
    }
}

/// Sparse vector over the path basis.
pub type Sparse = Vec<(usize, u32)>;

#[derive(Clone, Debug)]
pub struct PathBasis {
    pub words: Vec<PathWord>,
    /// `pair[i][j]` lists the basis indices of words from `i` to `j`.
    pub pair: Vec<Vec<Vec<usize>>>,
    /// Paths longer than this are zero in the algebra.
    pub nilpotency: usize,
    /// Number of basis words of each length; ends in zero.
    pub layer_dims: Vec<usize>,
    reductions: BTreeMap<PathWord, Sparse>,
    /// `products[a]` maps `b` to the reduced product `words[a] * words[b]`.
    products: Vec<BTreeMap<usize, Sparse>>,
    word_index: BTreeMap<PathWord, usize>,
}

impl PathBasis {
    pub fn dimension(&self) -> usize {
        self.words.len()
    }

    pub fn pair_dim(&self, i: usize, j: usize) -> usize {
        self.pair[i][j].len()
    }

    pub fn index_of(&self, w: &PathWord) -> Option<usize> {
        self.word_index.get(w).copied()
    }

    /// Lazy path index at vertex `v`.
    pub fn lazy(&self, v: usize) -> usize {
        self.word_index[&PathWord::lazy(v)]
    }

    /// Reduction of a path of arbitrary length to the basis.
    pub fn reduce_sparse(&self, q: &Quiver, w: &PathWord) -> Result<Sparse> {
        if !w.is_composable(q) {
            return Err(Error::IncomposablePath(w.display(q)));
        }
        if w.len() > self.nilpotency {
            return Ok(Vec::new());
        }
        Ok(self.reductions.get(w).cloned().unwrap_or_default())
    }

    /// Dense coefficient vector of `w` modulo the ideal.
    pub fn reduce_path(&self, q: &Quiver, w: &PathWord) -> Result<Vec<u32>> {
        let mut v = vec![0u32; self.dimension()];
        for (i, c) in self.reduce_sparse(q, w)? {
            v[i] = c;
        }
        Ok(v)
    }

    /// Reduced product of two basis words (empty when not composable).
    pub fn mul_words(&self, a: usize, b: usize) -> &[(usize, u32)] {
        self.products[a].get(&b).map_or(&[], |v| v.as_slice())
    }

    /// Product of two sparse elements.
    pub fn mul(&self, f: Field, x: &[(usize, u32)], y: &[(usize, u32)]) -> Sparse {
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                let c = f.mul(ca, cb);
                for &(k, ck) in self.mul_words(a, b) {
                    let e = acc.entry(k).or_insert(0);
                    *e = f.add(*e, f.mul(c, ck));
                }
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }
}

fn enumerate_paths(q: &Quiver, max_len: usize) -> Vec<PathWord> {
    let mut all: Vec<PathWord> = (0..q.vertex_count()).map(PathWord::lazy).collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let end = w.end(q);
            for a in q.arrows_from(end) {
                let mut arrows = w.arrows.clone();
                arrows.push(a);
                next.push(PathWord { start: w.start, arrows });
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Incrementally maintained row-echelon span with a pivot lookup.
struct Span {
    f: Field,
    rows: Vec<Vec<u32>>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: BTreeMap<usize, usize>,
}

impl Span {
    fn new(f: Field) -> Self {
        Span { f, rows: Vec::new(), pivot_of_row: Vec::new(), row_of_pivot: BTreeMap::new() }
    }

    /// Inserts `v`; returns true when it enlarged the span.
    fn insert(&mut self, mut v: Vec<u32>) -> bool {
        let f = self.f;
        for (r, row) in self.rows.iter().enumerate() {
            let p = self.pivot_of_row[r];
            let c = v[p];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // keep earlier rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.row_of_pivot.insert(p, self.rows.len());
        self.pivot_of_row.push(p);
        self.rows.push(v);
        true
    }
}

/// Attempts the basis with truncation `len`: returns `None` if some path of
/// length `len` survives in the quotient.
fn try_truncation(pres: &AlgebraPresentation, len: usize) -> Option<PathBasis> {
    let q = &pres.quiver;
    let f = pres.field;
    let mut paths = enumerate_paths(q, len);
    // longest first so that pivots land on long paths
    paths.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let col: BTreeMap<PathWord, usize> = paths.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let ncols = paths.len();

    let to_dense = |m: &BTreeMap<PathWord, u32>| -> Vec<u32> {
        let mut v = vec![0u32; ncols];
        for (w, c) in m {
            if let Some(&i) = col.get(w) {
                v[i] = f.add(v[i], *c);
            }
        }
        v
    };

    let mut span = Span::new(f);
    let mut queue: Vec<Vec<u32>> = Vec::new();
    for r in &pres.relations {
        let v = to_dense(&pres.normalized_relation(r));
        if span.insert(v.clone()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        for (ai, arrow) in q.arrows.iter().enumerate() {
            // left and right multiples by the arrow, truncated
            let mut left = vec![0u32; ncols];
            let mut right = vec![0u32; ncols];
            let mut any_left = false;
            let mut any_right = false;
            for (i, &c) in v.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let w = &paths[i];
                if w.len() + 1 > len {
                    continue;
                }
                if w.start == arrow.target {
                    let mut arrows = vec![ai];
                    arrows.extend_from_slice(&w.arrows);
                    let lw = PathWord { start: arrow.source, arrows };
                    left[col[&lw]] = c;
                    any_left = true;
                }
                if w.end(q) == arrow.source {
                    let mut arrows = w.arrows.clone();
                    arrows.push(ai);
                    let rw = PathWord { start: w.start, arrows };
                    right[col[&rw]] = c;
                    any_right = true;
                }
            }
            if any_left && span.insert(left.clone()) {
                queue.push(left);
            }
            if any_right && span.insert(right.clone()) {
                queue.push(right);
            }
        }
    }

    // every path of the top length must lie in the ideal
    let top_len_paths = paths.iter().enumerate().filter(|(_, w)| w.len() == len);
    for (i, _) in top_len_paths {
        if !span.row_of_pivot.contains_key(&i) {
            return None;
        }
    }

    // fully reduce rows so that pivot expressions only involve free columns
    let mut rref = Matrix::from_rows(&span.rows, ncols);
    let pivots = rref.rref_in_place(f);
    let pivot_row: BTreeMap<usize, usize> = pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();

    let mut free: Vec<usize> = (0..ncols).filter(|c| !pivot_row.contains_key(c)).collect();
    free.sort_by(|&a, &b| paths[a].start.cmp(&paths[b].start).then(paths[a].len().cmp(&paths[b].len())).then(paths[a].cmp(&paths[b])));
    let basis_of_col: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let words: Vec<PathWord> = free.iter().map(|&c| paths[c].clone()).collect();

    let mut reductions: BTreeMap<PathWord, Sparse> = BTreeMap::new();
    for (c, w) in paths.iter().enumerate() {
        let red: Sparse = if let Some(&k) = basis_of_col.get(&c) {
            vec![(k, 1)]
        } else {
            let r = pivot_row[&c];
            free.iter()
                .filter_map(|&fc| {
                    let x = rref.get(r, fc);
                    (x != 0).then(|| (basis_of_col[&fc], f.neg(x)))
                })
                .collect()
        };
        reductions.insert(w.clone(), red);
    }

    let n = q.vertex_count();
    let mut pair = vec![vec![Vec::new(); n]; n];
    for (k, w) in words.iter().enumerate() {
        pair[w.start][w.end(q)].push(k);
    }
    let max_word = words.iter().map(|w| w.len()).max().unwrap_or(0);
    let mut layer_dims = vec![0usize; max_word + 2];
    for w in &words {
        layer_dims[w.len()] += 1;
    }
    let word_index: BTreeMap<PathWord, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

    let mut products = vec![BTreeMap::new(); words.len()];
    for (a, wa) in words.iter().enumerate() {
        let end = wa.end(q);
        for (b, wb) in words.iter().enumerate() {
            if wb.start != end {
                continue;
            }
            let cat = wa.concat(wb);
            let red = if cat.len() > len { Vec::new() } else { reductions[&cat].clone() };
            products[a].insert(b, red);
        }
    }

    Some(PathBasis { words, pair, nilpotency: len, layer_dims, reductions, products, word_index })
}

/// Basis of `kQ/I` as a vector space over the prime field.
pub fn compute_path_basis(pres: &AlgebraPresentation, max_len: usize) -> Result<PathBasis> {
    for len in 0..=max_len {
        if let Some(b) = try_truncation(pres, len) {
            return Ok(b);
        }
    }
    Err(Error::NotFiniteDimensional(max_len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn linear_a3_dimension() {
        let pres = fixtures::linear_a(3);
        let b = compute_path_basis(&pres, DEFAULT_MAX_LEN).unwrap();
        assert_eq!(b.dimension(), 6);
    }

    #[test]
    fn loop_example_projective_dims() {
        let pres = fixtures::loop_rad2();
        let b = compute_path_basis(&pres, DEFAULT_MAX_LEN).unwrap();
        let dims: Vec<usize> = (0..3).map(|i| (0..3).map(|j| b.pair_dim(i, j)).sum()).collect();
        assert_eq!(dims, vec![3, 2, 1]);
        assert_eq!(b.dimension(), 6);
        let q = &pres.quiver;
        for w in enumerate_paths(q, 2).into_iter().filter(|w| w.len() == 2) {
            assert!(b.reduce_path(q, &w).unwrap().iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn four_cycle_rad3() {
        let pres = fixtures::cycle_truncated(4, 3);
        let b = compute_path_basis(&pres, DEFAULT_MAX_LEN).unwrap();
        assert_eq!(b.dimension(), 12);
        let q = &pres.quiver;
        let w = PathWord::from_arrows(q, vec![0, 1, 2]).unwrap();
        assert!(b.reduce_path(q, &w).unwrap().iter().all(|&c| c == 0));
    }

    #[test]
    fn lazy_reduces_to_unit() {
        let pres = fixtures::linear_a(3);
        let b = compute_path_basis(&pres, DEFAULT_MAX_LEN).unwrap();
        let v = b.reduce_path(&pres.quiver, &PathWord::lazy(1)).unwrap();
        assert_eq!(v.iter().filter(|&&c| c != 0).count(), 1);
        assert_eq!(v[b.lazy(1)], 1);
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let mut pres = fixtures::linear_a(3);
        pres.relations.push(RelationElement {
            terms: vec![(1, PathWord { start: 0, arrows: vec![0] }), (1, PathWord { start: 1, arrows: vec![1] })],
        });
        assert!(matches!(pres.validate(), Err(Error::NonParallelRelation(0))));
    }

    #[test]
    fn short_summand_rejected() {
        let mut pres = fixtures::cycle_truncated(2, 3);
        pres.relations.push(RelationElement {
            terms: vec![(1, PathWord { start: 0, arrows: vec![0, 1] }), (1, PathWord { start: 0, arrows: vec![] })],
        });
        assert!(matches!(pres.validate(), Err(Error::NonAdmissibleRelation(..))));
    }

    #[test]
    fn infinite_dimensional_detected() {
        let pres = fixtures::cycle_truncated(3, 0);
        assert!(matches!(compute_path_basis(&pres, 10), Err(Error::NotFiniteDimensional(10))));
    }

    #[test]
    fn opposite_is_involutive_and_preserves_dimension() {
        for pres in [fixtures::loop_rad2(), fixtures::cycle_truncated(4, 3), fixtures::mata()] {
            let op = pres.opposite();
            assert_eq!(op.opposite(), pres);
            let a = compute_path_basis(&pres, DEFAULT_MAX_LEN).unwrap().dimension();
            let b = compute_path_basis(&op, DEFAULT_MAX_LEN).unwrap().dimension();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn commutativity_relation() {
        // square 0->1->3, 0->2->3 with a commutativity relation: dim = 4 + 4 + 1
        let mut q = Quiver::new();
        for v in ["0", "1", "2", "3"] {
            q.add_vertex(v);
        }
        q.add_arrow("a", 0, 1);
        q.add_arrow("b", 1, 3);
        q.add_arrow("c", 0, 2);
        q.add_arrow("d", 2, 3);
        let f = Field::default();
        let rel = RelationElement {
            terms: vec![
                (1, PathWord { start: 0, arrows: vec![0, 1] }),
                (f.neg(1), PathWord { start: 0, arrows: vec![2, 3] }),
            ],
        };
        let pres = AlgebraPresentation::new(q, vec![rel], f).validate().unwrap();
        let b = compute_path_basis(&pres, DEFAULT_MAX_LEN).unwrap();
        assert_eq!(b.dimension(), 9);
        for r in &pres.relations {
            let mut acc = vec![0u32; b.dimension()];
            for (c, w) in &r.terms {
                for (i, x) in b.reduce_path(&pres.quiver, w).unwrap().into_iter().enumerate() {
                    acc[i] = f.add(acc[i], f.mul(*c, x));
                }
            }
            assert!(acc.iter().all(|&x| x == 0));
        }
    }
}
