//! Shelling vectors.
//!
//! Removing the vertices one at a time and recording the link of each
//! removed vertex inside the graph that remains gives a shelling; the
//! shelling vector sums, over all `|V|!` removal orders, the tensor word of
//! the links' own shelling vectors. Level-0 graphs are the atoms `a` and `b`,
//! and a graph with no vertices (level at least 1) gives the unit `ε`.
//!
//! Grouping the shellings by their first vertex gives
//! `f̃G = Σ_v f̃(link(G, v)) ⊗ f̃(G - v)`, which is what [`ShellingCache`]
//! evaluates, memoized on isomorphism class.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use itertools::Itertools;

use crate::error::Result;
use crate::hypergraph::{canonical_form, CanonKey, IGraph};
use crate::limits::Limits;
use crate::linalg::{Label, SparseVec};

/// A shelling vector: length-`N` tensor words with positive integer
/// coefficients. The coefficients sum to `N!` times the product of the link
/// masses, which is `N!` for level 1.
pub type ShellVec = SparseVec;

pub(crate) fn zero_graph_atom(g: &IGraph) -> SparseVec {
    debug_assert_eq!(g.level(), 0);
    SparseVec::basis(if g.is_zero_b() { Label::B } else { Label::A })
}

/// Direct sum over every removal order. Used as the oracle for
/// [`shelling_vector`].
pub fn shelling_vector_bruteforce(g: &IGraph, limits: &Limits) -> Result<ShellVec> {
    if g.level() == 0 {
        return Ok(zero_graph_atom(g));
    }
    limits.check_factorial(g.vertex_count())?;
    let mut total = SparseVec::zero();
    for order in g.vertices().iter().permutations(g.vertex_count()) {
        let mut remaining = g.clone();
        let mut word = SparseVec::unit();
        for &v in order {
            let link = remaining.link(v)?;
            word = word.tensor(&shelling_vector_bruteforce(&link, limits)?.letters());
            remaining = remaining.delete_vertex(v)?;
        }
        total.add_scaled(&num_traits::One::one(), &word);
    }
    Ok(total)
}

/// Grow-only memo of shelling vectors keyed by isomorphism class. Safe to
/// share between threads.
#[derive(Debug, Default)]
pub struct ShellingCache {
    limits: Limits,
    memo: RwLock<HashMap<CanonKey, Arc<ShellVec>>>,
}

impl ShellingCache {
    pub fn new(limits: Limits) -> ShellingCache {
        ShellingCache {
            limits,
            memo: RwLock::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vector(&self, g: &IGraph) -> Result<Arc<ShellVec>> {
        if g.level() == 0 {
            return Ok(Arc::new(zero_graph_atom(g)));
        }
        if g.vertex_count() == 0 {
            return Ok(Arc::new(SparseVec::unit()));
        }
        self.limits.check_factorial(g.vertex_count())?;
        let (canon, key) = canonical_form(g);
        if let Some(hit) = self.memo.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let mut total = SparseVec::zero();
        for &v in canon.vertices() {
            let head = self.vector(&canon.link(v)?)?.letters();
            let tail = self.vector(&canon.delete_vertex(v)?)?;
            total.add_scaled(&num_traits::One::one(), &head.tensor(&tail));
        }
        let mut memo = self.memo.write().unwrap();
        Ok(memo.entry(key).or_insert_with(|| Arc::new(total)).clone())
    }
}

/// Shelling vector through the first-vertex recursion with a fresh cache.
pub fn shelling_vector(g: &IGraph, limits: &Limits) -> Result<ShellVec> {
    let cache = ShellingCache::new(*limits);
    Ok(cache.vector(g)?.as_ref().clone())
}
