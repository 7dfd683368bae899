//! Dense indexing of `S(n)`.
//!
//! Elements are ranked by the lexicographic order of their image lists (Lehmer code), so
//! rank 0 is the identity. For every transposition `τ` the table stores the index map
//! `r ↦ rank(element(r) ∘ τ)`, which turns right multiplication by `τ` into a gather over a
//! coefficient array. Tables are built once per degree and shared.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{Permutation, Transposition};

/// Largest degree for which a dense table is built (9! = 362880 elements).
pub const MAX_TABLE_DEGREE: usize = 9;

pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
    classes: Vec<Partition>,
    class_of: Vec<u16>,
    right_transposition: Vec<OnceLock<Vec<u32>>>,
}

impl SymmetricGroup {
    /// The shared table for `S(n)`.
    pub fn get(n: usize) -> Result<Arc<SymmetricGroup>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymmetricGroup>>>> = OnceLock::new();
        if n == 0 || n > MAX_TABLE_DEGREE {
            return Err(Error::BudgetExceeded {
                what: format!("dense table of S({n})"),
                limit: MAX_TABLE_DEGREE as u64,
            });
        }
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().unwrap().get(&n) {
            return Ok(Arc::clone(g));
        }
        // Built outside the lock; a racing builder just produces an identical table.
        let group = Arc::new(SymmetricGroup::build(n)?);
        Ok(Arc::clone(cache.lock().unwrap().entry(n).or_insert(group)))
    }

    fn build(n: usize) -> Result<Self> {
        let elements = Permutation::all(n)?;
        let classes = partitions_of(n);
        let class_index: HashMap<&Partition, u16> = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c, i as u16))
            .collect();
        let class_of = elements
            .iter()
            .map(|p| class_index[&p.cycle_type()])
            .collect();
        let transpositions = n * (n - 1) / 2;
        Ok(SymmetricGroup {
            n,
            elements,
            classes,
            class_of,
            right_transposition: (0..transpositions).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, rank: usize) -> &Permutation {
        &self.elements[rank]
    }

    /// Conjugacy classes in the order of [`partitions_of`].
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn class_index_of(&self, rank: usize) -> usize {
        self.class_of[rank] as usize
    }

    pub fn class_index(&self, mu: &Partition) -> Option<usize> {
        self.classes.iter().position(|c| c == mu)
    }

    /// Lexicographic rank of a permutation of degree `n`.
    pub fn rank(&self, p: &Permutation) -> usize {
        debug_assert_eq!(p.degree(), self.n);
        lehmer_rank(p.zero_based())
    }

    /// Position of `(s t)` in the list ordered by `t`, then `s`.
    pub fn transposition_index(t: &Transposition) -> usize {
        let (s, l) = (t.small(), t.large());
        (l - 1) * (l - 2) / 2 + (s - 1)
    }

    /// `r ↦ rank(element(r) ∘ (s t))`.
    pub fn right_multiplication(&self, t: &Transposition) -> &[u32] {
        assert!(t.large() <= self.n, "transposition outside S({})", self.n);
        self.right_transposition[Self::transposition_index(t)].get_or_init(|| {
            let (a, b) = (t.small() - 1, t.large() - 1);
            let mut buf = vec![0; self.n];
            self.elements
                .iter()
                .map(|p| {
                    buf.copy_from_slice(p.zero_based());
                    buf.swap(a, b);
                    lehmer_rank(&buf) as u32
                })
                .collect()
        })
    }
}

fn lehmer_rank(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&v| v < images[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}
