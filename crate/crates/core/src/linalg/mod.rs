//! Exact rational linear algebra over symbolic basis labels.

mod label;
mod rowbasis;
mod sparse;

pub use label::Label;
pub use rowbasis::RowBasis;
pub use sparse::SparseVec;

/// Coefficients: arbitrary-precision rationals, always in lowest terms.
pub type Scalar = num_rational::BigRational;
