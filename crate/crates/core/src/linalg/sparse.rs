use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Label, Scalar};
use crate::error::{Error, Result};

/// A finite linear combination of basis labels with nonzero rational
/// coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    terms: BTreeMap<Label, Scalar>,
}

impl SparseVec {
    pub fn zero() -> SparseVec {
        SparseVec::default()
    }

    /// `1·label`.
    pub fn basis(label: Label) -> SparseVec {
        let mut terms = BTreeMap::new();
        terms.insert(label, Scalar::one());
        SparseVec { terms }
    }

    /// The unit of the tensor product, `1·ε`.
    pub fn unit() -> SparseVec {
        SparseVec::basis(Label::Eps)
    }

    /// Sums the given terms, pruning zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Label, Scalar)>) -> SparseVec {
        let mut v = SparseVec::zero();
        for (label, c) in terms {
            v.add_term(label, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Support size.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, label: &Label) -> Option<&Scalar> {
        self.terms.get(label)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Label, Scalar> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.terms.keys()
    }

    /// The greatest label in the support.
    pub fn leading(&self) -> Option<(&Label, &Scalar)> {
        self.terms.last_key_value()
    }

    /// Depth of the first label with a definite depth.
    pub fn depth(&self) -> Option<usize> {
        self.terms.keys().find_map(Label::depth)
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Scalar {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, label: Label, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`, without a depth check.
    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (label, d) in &other.terms {
            self.add_term(label.clone(), c * d);
        }
    }

    fn check_depth(&self, other: &SparseVec) -> Result<()> {
        match (self.depth(), other.depth()) {
            (Some(left), Some(right)) if left != right => {
                Err(Error::DepthMismatch { left, right })
            }
            _ => Ok(()),
        }
    }

    /// Coefficient-wise sum. Operands must have the same nesting depth.
    pub fn checked_add(&self, other: &SparseVec) -> Result<SparseVec> {
        self.check_depth(other)?;
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SparseVec) -> Result<SparseVec> {
        self.check_depth(other)?;
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            terms: self.terms.iter().map(|(l, d)| (l.clone(), c * d)).collect(),
        }
    }

    /// Bilinear product on flattened words: `x ⊗ y` is the concatenation of
    /// `x` and `y`, with `ε` as unit.
    pub fn tensor(&self, other: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (x, c) in &self.terms {
            for (y, d) in &other.terms {
                out.add_term(x.concat(y), c * d);
            }
        }
        out
    }

    /// Wraps every label as a one-letter word, so that a following
    /// [`tensor`](Self::tensor) treats it as a single tensor factor.
    pub fn letters(&self) -> SparseVec {
        SparseVec {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone().letter(), c.clone()))
                .collect(),
        }
    }
}

impl<'a> IntoIterator for &'a SparseVec {
    type Item = (&'a Label, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, Label, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (label, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{abs}·{label}")?;
            }
        }
        Ok(())
    }
}
