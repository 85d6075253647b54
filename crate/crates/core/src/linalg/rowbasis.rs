use std::collections::BTreeMap;

use num_traits::One;

use super::{Label, SparseVec};

/// A reduced row-echelon basis of a subspace.
///
/// Each row has a pivot label with coefficient 1, chosen as the greatest
/// label of the row, and no pivot label occurs in any other row. Residues
/// modulo the span therefore avoid every pivot label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RowBasis {
    rows: BTreeMap<Label, SparseVec>,
}

impl RowBasis {
    pub fn new() -> RowBasis {
        RowBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in decreasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (&Label, &SparseVec)> {
        self.rows.iter().rev()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Label> {
        self.rows.keys().rev()
    }

    /// The unique representative of `v` modulo the span whose support
    /// contains no pivot label.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (pivot, row) in &self.rows {
            if let Some(c) = out.get(pivot) {
                let c = -c.clone();
                out.add_scaled(&c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set. Returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let residue = self.reduce(v);
        let Some((pivot, lead)) = residue.leading() else {
            return false;
        };
        let pivot = pivot.clone();
        let row = residue.scale(&(lead.clone().recip()));
        debug_assert!(row.get(&pivot).is_some_and(One::is_one));
        for other in self.rows.values_mut() {
            if let Some(c) = other.get(&pivot) {
                let c = -c.clone();
                other.add_scaled(&c, &row);
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    /// Inserts every vector; returns how many increased the rank.
    pub fn extend<'a>(&mut self, vs: impl IntoIterator<Item = &'a SparseVec>) -> usize {
        vs.into_iter().filter(|v| self.insert(v)).count()
    }
}
