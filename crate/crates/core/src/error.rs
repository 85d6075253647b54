use thiserror::Error;

use crate::hypergraph::{Cell, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    VertexNotInGraph(Vertex),

    #[error("a level-0 graph has no links")]
    LevelZeroHasNoLink,

    #[error("cell {0} is not present in the graph")]
    CellNotPresent(Cell),

    #[error("duplicate vertex label {0}")]
    DuplicateVertex(Vertex),

    #[error("invalid cell {cell}: {reason}")]
    InvalidCell { cell: String, reason: String },

    #[error("facets have mixed cardinalities ({expected} and {found})")]
    MixedFacetArity { expected: usize, found: usize },

    #[error("no facets given, level cannot be determined")]
    EmptyFacets,

    #[error("facet of cardinality 0 cannot define a level")]
    EmptyFacet,

    #[error("vector depth mismatch ({left} vs {right})")]
    DepthMismatch { left: usize, right: usize },

    #[error("size guard: {what} is {size}, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        size: String,
        limit: String,
    },

    #[error("enumeration bound exceeded at stratum (level {level}, {vertices} vertices): {source}")]
    StratumTooLarge {
        level: usize,
        vertices: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("quotient tower has no stratum for level {level} on {vertices} vertices")]
    TowerNotBuilt { level: usize, vertices: usize },

    #[error("cannot parse basis label {input:?}: {reason}")]
    LabelParse { input: String, reason: String },
}

impl Error {
    /// True for errors raised by a configured size guard, directly or while
    /// building a stratum.
    pub fn is_size_guard(&self) -> bool {
        match self {
            Error::SizeGuard { .. } => true,
            Error::StratumTooLarge { source, .. } => source.is_size_guard(),
            _ => false,
        }
    }
}
