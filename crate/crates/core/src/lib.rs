//! Shelling vectors and flag vectors of `i`-graphs (`i`-uniform hypergraphs).
//!
//! An `i`-graph is a set of `i`-element cells over an explicit vertex set.
//! Removing the vertices one at a time and recording the link at each step
//! gives a shelling; summing tensor products of the links' vectors over all
//! shellings gives the shelling vector. The flag vector replaces each link
//! vector by its residue modulo the four-term relations generated by pairs of
//! disjoint cells, computed stratum by stratum in a [`QuotientTower`].
//!
//! All arithmetic is exact over the rationals.

pub mod error;
pub mod flagvec;
pub mod hypergraph;
pub mod limits;
pub mod linalg;
pub mod partition;
mod perm;
pub mod shelling;

pub use error::{Error, Result};
pub use flagvec::{
    build_tower, flag_span_rank, flag_vector, flag_vector_bruteforce, shelling_vs_flag_rank,
    FlagVec, QuotientTower, RelationExpr, StratumSummary,
};
pub use hypergraph::{
    canonical_form, enumerate_graphs, facets_to_igraph, CanonKey, Cell, IGraph, Vertex,
};
pub use limits::Limits;
pub use linalg::{Label, RowBasis, Scalar, SparseVec};
pub use partition::partition_count;
pub use shelling::{shelling_vector, shelling_vector_bruteforce, ShellVec, ShellingCache};
