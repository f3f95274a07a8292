//! Registry of isomorphism classes.

use alloc::vec::Vec;

use crate::bound::BoundAlgebra;
use crate::error::Result;
use crate::rep::Rep;

#[derive(Clone, Debug, Default)]
pub struct IsoRegistry {
    entries: Vec<Rep>,
    projective: Vec<bool>,
}

impl IsoRegistry {
    pub fn new() -> Self {
        IsoRegistry::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: usize) -> &Rep {
        &self.entries[id]
    }

    pub fn is_projective(&self, id: usize) -> bool {
        self.projective[id]
    }

    pub fn entries(&self) -> &[Rep] {
        &self.entries
    }

    pub fn find(&self, alg: &BoundAlgebra, m: &Rep, seed: u64) -> Result<Option<usize>> {
        for (i, e) in self.entries.iter().enumerate() {
            if e.dims == m.dims && alg.is_isomorphic_seeded(e, m, seed)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Id of the class of `m` (an indecomposable), and whether it was new.
    pub fn insert(&mut self, alg: &BoundAlgebra, m: Rep, seed: u64) -> Result<(usize, bool)> {
        if let Some(i) = self.find(alg, &m, seed)? {
            return Ok((i, false));
        }
        self.projective.push(alg.is_projective(&m));
        self.entries.push(m);
        Ok((self.entries.len() - 1, true))
    }
}
