//! Flag vectors and the quotient tower.
//!
//! For a level-`ℓ` graph `L` on `m` vertices and two disjoint cells `A`,
//! `B` of `L`, the four-term relation is
//! `f(L) - f(L - A) - f(L - B) + f(L - A - B)`. Removing cells never changes
//! the vertex set, so the relations of stratum `(ℓ, m)` live among the flag
//! vectors of that stratum alone. The tower keeps one [`RowBasis`] of
//! relations per stratum; the link contribution `f'L` is the residue of
//! `f(L)` modulo it, i.e. `f(L)` with every relation pivot eliminated.
//!
//! The flag vector of a level-`i` graph is then
//! `fG = Σ_v f'(link(G, v)) ⊗ f(G - v)`, which equals the sum over all
//! shellings of `f'L₁ ⊗ … ⊗ f'L_N`.
//!
//! Level 0 has no relations (a 0-graph has at most one cell), so level-1
//! flag vectors coincide with shelling vectors.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use itertools::Itertools;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::{canonical_form, enumerate_graphs, CanonKey, Cell, IGraph};
use crate::limits::Limits;
use crate::linalg::{RowBasis, Scalar, SparseVec};
use crate::shelling::{zero_graph_atom, ShellingCache};

/// A flag vector: length-`N` tensor words over reduced link coordinates.
pub type FlagVec = SparseVec;

type Memo = RwLock<HashMap<CanonKey, Arc<SparseVec>>>;

/// One four-term relation, with the graph and cell pair that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationExpr {
    pub source: IGraph,
    pub pair: (Cell, Cell),
    pub value: SparseVec,
}

/// Per-stratum bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSummary {
    pub level: usize,
    pub vertices: usize,
    /// Isomorphism classes enumerated.
    pub graph_count: usize,
    /// `dim span{fL}` over the stratum.
    pub span_dim: usize,
    /// Number of four-term expressions formed.
    pub relation_count: usize,
    pub relation_rank: usize,
    /// `span_dim - relation_rank`.
    pub quotient_dim: usize,
}

#[derive(Debug, Clone)]
struct Stratum {
    summary: StratumSummary,
    relations: RowBasis,
}

/// Relation bases for every stratum `(ℓ, m)` with `ℓ < top_level` and
/// `m <= m_max`, plus memoized flag vectors and link residues.
///
/// Once built, the tower is only read; the memo tables are grow-only and may
/// be filled from several threads at once.
#[derive(Debug)]
pub struct QuotientTower {
    top_level: usize,
    m_max: usize,
    limits: Limits,
    strata: BTreeMap<(usize, usize), Stratum>,
    flags: Memo,
    residues: Memo,
}

/// Builds the tower level by level. Strata are enumerated up to isomorphism;
/// flag vectors within a stratum are computed in parallel on the current
/// rayon pool and relations are inserted in a fixed order.
pub fn build_tower(top_level: usize, m_max: usize, limits: &Limits) -> Result<QuotientTower> {
    let mut tower = QuotientTower {
        top_level,
        m_max,
        limits: *limits,
        strata: BTreeMap::new(),
        flags: Memo::default(),
        residues: Memo::default(),
    };
    if top_level == 0 {
        return Ok(tower);
    }
    for m in 0..=m_max {
        tower.strata.insert(
            (0, m),
            Stratum {
                summary: StratumSummary {
                    level: 0,
                    vertices: m,
                    graph_count: 2,
                    span_dim: 2,
                    relation_count: 0,
                    relation_rank: 0,
                    quotient_dim: 2,
                },
                relations: RowBasis::new(),
            },
        );
    }
    for level in 1..top_level {
        for m in 0..=m_max {
            let stratum = tower.build_stratum(level, m)?;
            tower.strata.insert((level, m), stratum);
        }
    }
    Ok(tower)
}

impl QuotientTower {
    pub fn top_level(&self) -> usize {
        self.top_level
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    fn build_stratum(&self, level: usize, m: usize) -> Result<Stratum> {
        let graphs = enumerate_graphs(level, m, true, &self.limits).map_err(|e| {
            Error::StratumTooLarge {
                level,
                vertices: m,
                source: Box::new(e),
            }
        })?;
        let flags: Vec<Arc<FlagVec>> = graphs
            .par_iter()
            .map(|g| self.flag_vector(g))
            .collect::<Result<_>>()?;
        let mut span = RowBasis::new();
        span.extend(flags.iter().map(Arc::as_ref));

        let exprs: Vec<RelationExpr> = graphs
            .par_iter()
            .map(|g| self.relation_exprs(g))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let mut relations = RowBasis::new();
        relations.extend(exprs.iter().map(|e| &e.value));

        Ok(Stratum {
            summary: StratumSummary {
                level,
                vertices: m,
                graph_count: graphs.len(),
                span_dim: span.rank(),
                relation_count: exprs.len(),
                relation_rank: relations.rank(),
                quotient_dim: span.rank() - relations.rank(),
            },
            relations,
        })
    }

    /// Summaries of every stratum, ordered by `(level, vertices)`.
    pub fn summaries(&self) -> Vec<StratumSummary> {
        self.strata.values().map(|s| s.summary.clone()).collect()
    }

    pub fn summary(&self, level: usize, vertices: usize) -> Result<&StratumSummary> {
        self.stratum(level, vertices).map(|s| &s.summary)
    }

    /// The relation row basis `R_{ℓ,m}`.
    pub fn relations(&self, level: usize, vertices: usize) -> Result<&RowBasis> {
        self.stratum(level, vertices).map(|s| &s.relations)
    }

    fn stratum(&self, level: usize, vertices: usize) -> Result<&Stratum> {
        self.strata
            .get(&(level, vertices))
            .ok_or(Error::TowerNotBuilt { level, vertices })
    }

    /// The four-term expression for one disjoint pair of cells of `l`.
    pub fn relation_expr(&self, l: &IGraph, a: &Cell, b: &Cell) -> Result<RelationExpr> {
        let one = Scalar::one();
        let mut value = self.flag_vector(l)?.as_ref().clone();
        value.add_scaled(&-one.clone(), self.flag_vector(&l.remove_cells([a])?)?.as_ref());
        value.add_scaled(&-one.clone(), self.flag_vector(&l.remove_cells([b])?)?.as_ref());
        value.add_scaled(&one, self.flag_vector(&l.remove_cells([a, b])?)?.as_ref());
        Ok(RelationExpr {
            source: l.clone(),
            pair: (a.clone(), b.clone()),
            value,
        })
    }

    /// Every four-term expression of `l`, over its disjoint cell pairs.
    pub fn relation_exprs(&self, l: &IGraph) -> Result<Vec<RelationExpr>> {
        l.disjoint_cell_pairs()
            .iter()
            .map(|(a, b)| self.relation_expr(l, a, b))
            .collect()
    }

    /// The link contribution `f'L`: the residue of `fL` modulo the
    /// relations of its stratum.
    pub fn f_prime(&self, l: &IGraph) -> Result<Arc<SparseVec>> {
        if l.level() == 0 {
            return Ok(Arc::new(zero_graph_atom(l)));
        }
        let relations = self.relations(l.level(), l.vertex_count())?;
        let key = l.canon_key();
        if let Some(hit) = self.residues.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let residue = relations.reduce(self.flag_vector(l)?.as_ref());
        let mut memo = self.residues.write().unwrap();
        Ok(memo.entry(key).or_insert_with(|| Arc::new(residue)).clone())
    }

    /// `fG` by the first-vertex recursion, memoized on isomorphism class.
    pub fn flag_vector(&self, g: &IGraph) -> Result<Arc<FlagVec>> {
        if g.level() == 0 {
            return Ok(Arc::new(zero_graph_atom(g)));
        }
        if g.vertex_count() == 0 {
            return Ok(Arc::new(SparseVec::unit()));
        }
        self.limits.check_factorial(g.vertex_count())?;
        let (canon, key) = canonical_form(g);
        if let Some(hit) = self.flags.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let mut total = SparseVec::zero();
        for &v in canon.vertices() {
            let head = self.f_prime(&canon.link(v)?)?.letters();
            let tail = self.flag_vector(&canon.delete_vertex(v)?)?;
            total.add_scaled(&One::one(), &head.tensor(&tail));
        }
        let mut memo = self.flags.write().unwrap();
        Ok(memo.entry(key).or_insert_with(|| Arc::new(total)).clone())
    }

    /// `fG` as the explicit sum over all `|V|!` shellings. Link residues are
    /// themselves computed by brute force and reduced against the tower's
    /// relation bases; no memo is consulted.
    pub fn flag_vector_bruteforce(&self, g: &IGraph) -> Result<FlagVec> {
        if g.level() == 0 {
            return Ok(zero_graph_atom(g));
        }
        self.limits.check_factorial(g.vertex_count())?;
        let mut total = SparseVec::zero();
        for order in g.vertices().iter().permutations(g.vertex_count()) {
            let mut remaining = g.clone();
            let mut word = SparseVec::unit();
            for &v in order {
                let link = remaining.link(v)?;
                let residue = if link.level() == 0 {
                    zero_graph_atom(&link)
                } else {
                    self.relations(link.level(), link.vertex_count())?
                        .reduce(&self.flag_vector_bruteforce(&link)?)
                };
                word = word.tensor(&residue.letters());
                remaining = remaining.delete_vertex(v)?;
            }
            total.add_scaled(&One::one(), &word);
        }
        Ok(total)
    }
}

/// Memoized flag vector of `g` in `tower`.
pub fn flag_vector(g: &IGraph, tower: &QuotientTower) -> Result<FlagVec> {
    Ok(tower.flag_vector(g)?.as_ref().clone())
}

pub fn flag_vector_bruteforce(g: &IGraph, tower: &QuotientTower) -> Result<FlagVec> {
    tower.flag_vector_bruteforce(g)
}

/// Rank of the span of the flag vectors of all level-`i` graphs on `n`
/// vertices, and the number of graphs used (one per isomorphism class when
/// `up_to_iso` is set).
pub fn flag_span_rank(
    level: usize,
    n: usize,
    tower: &QuotientTower,
    up_to_iso: bool,
) -> Result<(usize, usize)> {
    let graphs = enumerate_graphs(level, n, up_to_iso, tower.limits())?;
    let vectors: Vec<Arc<FlagVec>> = graphs
        .par_iter()
        .map(|g| tower.flag_vector(g))
        .collect::<Result<_>>()?;
    let mut basis = RowBasis::new();
    basis.extend(vectors.iter().map(Arc::as_ref));
    Ok((basis.rank(), graphs.len()))
}

/// Ranks of `span{f̃G}` and `span{fG}` over the level-`i` graphs on `n`
/// vertices, taken one per isomorphism class.
pub fn shelling_vs_flag_rank(
    level: usize,
    n: usize,
    tower: &QuotientTower,
) -> Result<(usize, usize)> {
    let graphs = enumerate_graphs(level, n, true, tower.limits())?;
    let cache = ShellingCache::new(*tower.limits());
    let shells: Vec<Arc<SparseVec>> = graphs
        .par_iter()
        .map(|g| cache.vector(g))
        .collect::<Result<_>>()?;
    let flags: Vec<Arc<SparseVec>> = graphs
        .par_iter()
        .map(|g| tower.flag_vector(g))
        .collect::<Result<_>>()?;
    let mut shell_basis = RowBasis::new();
    shell_basis.extend(shells.iter().map(Arc::as_ref));
    let mut flag_basis = RowBasis::new();
    flag_basis.extend(flags.iter().map(Arc::as_ref));
    Ok((shell_basis.rank(), flag_basis.rank()))
}
