//! `i`-graphs: an explicit vertex set plus a set of `i`-element cells.
//!
//! Vertex sets are kept as sorted label sequences so that links and vertex
//! deletions shrink `V` in place. Canonical forms relabel onto `0..N` and are
//! computed by minimizing over every permutation, so they cost `N!` and are
//! meant for the desk-scale sizes used here (`N` up to about 10).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::limits::{binomial, Limits};
use crate::perm::for_each_permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Vertex {
    fn from(label: u32) -> Self {
        Vertex(label)
    }
}

/// A cell: a strictly increasing sequence of vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(Vec<Vertex>);

impl Cell {
    /// Builds a cell from labels in any order. Repeated labels are rejected.
    pub fn new(labels: impl IntoIterator<Item = u32>) -> Result<Cell> {
        let mut vertices: Vec<Vertex> = labels.into_iter().map(Vertex).collect();
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidCell {
                cell: format!("{:?}", vertices.iter().map(|v| v.0).collect_vec()),
                reason: format!("vertex {} repeated", w[0]),
            });
        }
        Ok(Cell(vertices))
    }

    pub fn empty() -> Cell {
        Cell(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &Cell) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    fn without(&self, v: Vertex) -> Cell {
        Cell(self.0.iter().copied().filter(|&u| u != v).collect())
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// A level-`i` hypergraph.
///
/// Level 0 is special: the only possible cell is the empty set, so a level-0
/// graph is either `a` (no cells) or `b` (the empty cell), whatever its
/// vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IGraph {
    level: usize,
    vertices: Vec<Vertex>,
    cells: BTreeSet<Cell>,
}

impl IGraph {
    /// Validating constructor. Vertex labels must be distinct; every cell
    /// must be an `level`-subset of the vertex set. Duplicate cells collapse.
    pub fn new<C>(
        level: usize,
        vertices: impl IntoIterator<Item = u32>,
        cells: impl IntoIterator<Item = C>,
    ) -> Result<IGraph>
    where
        C: IntoIterator<Item = u32>,
    {
        let mut vertices: Vec<Vertex> = vertices.into_iter().map(Vertex).collect();
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        let mut set = BTreeSet::new();
        for raw in cells {
            let cell = Cell::new(raw)?;
            if cell.len() != level {
                return Err(Error::InvalidCell {
                    cell: cell.to_string(),
                    reason: format!("expected {level} vertices, found {}", cell.len()),
                });
            }
            if let Some(v) = cell.0.iter().find(|v| vertices.binary_search(v).is_err()) {
                return Err(Error::InvalidCell {
                    cell: cell.to_string(),
                    reason: format!("vertex {v} is not in the vertex set"),
                });
            }
            set.insert(cell);
        }
        Ok(IGraph {
            level,
            vertices,
            cells: set,
        })
    }

    /// The graph on `vertices` with no cells.
    pub fn empty(level: usize, vertices: impl IntoIterator<Item = u32>) -> Result<IGraph> {
        IGraph::new(level, vertices, std::iter::empty::<Vec<u32>>())
    }

    /// The graph on `0..n` with every possible cell.
    pub fn complete(level: usize, n: u32) -> IGraph {
        let cells = (0..n).combinations(level);
        IGraph::new(level, 0..n, cells).expect("complete graph is valid")
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// For a level-0 graph: whether it is `b` (carries the empty cell).
    pub fn is_zero_b(&self) -> bool {
        self.level == 0 && !self.cells.is_empty()
    }

    fn require_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::VertexNotInGraph(v))
        }
    }

    fn vertices_without(&self, v: Vertex) -> Vec<Vertex> {
        self.vertices.iter().copied().filter(|&u| u != v).collect()
    }

    /// The link at `v`: the level-`(i-1)` graph on `V - v` whose cells become
    /// cells of `self` once `v` is added back.
    pub fn link(&self, v: Vertex) -> Result<IGraph> {
        if self.level == 0 {
            return Err(Error::LevelZeroHasNoLink);
        }
        self.require_vertex(v)?;
        Ok(IGraph {
            level: self.level - 1,
            vertices: self.vertices_without(v),
            cells: self
                .cells
                .iter()
                .filter(|c| c.contains(v))
                .map(|c| c.without(v))
                .collect(),
        })
    }

    /// Removes `v` together with every cell containing it.
    pub fn delete_vertex(&self, v: Vertex) -> Result<IGraph> {
        self.require_vertex(v)?;
        Ok(IGraph {
            level: self.level,
            vertices: self.vertices_without(v),
            cells: self
                .cells
                .iter()
                .filter(|c| !c.contains(v))
                .cloned()
                .collect(),
        })
    }

    /// Removes the given cells, keeping the vertex set.
    pub fn remove_cells<'a>(&self, cells: impl IntoIterator<Item = &'a Cell>) -> Result<IGraph> {
        let mut out = self.clone();
        for c in cells {
            if !self.cells.contains(c) {
                return Err(Error::CellNotPresent(c.clone()));
            }
            out.cells.remove(c);
        }
        Ok(out)
    }

    /// Unordered pairs of distinct cells with no common vertex, in
    /// lexicographic order.
    pub fn disjoint_cell_pairs(&self) -> Vec<(Cell, Cell)> {
        let cells: Vec<&Cell> = self.cells.iter().collect();
        let mut pairs = Vec::new();
        for (k, a) in cells.iter().enumerate() {
            for b in &cells[k + 1..] {
                if a.is_disjoint(b) {
                    pairs.push(((*a).clone(), (*b).clone()));
                }
            }
        }
        pairs
    }

    /// Applies a vertex relabeling. Fails if `map` is not injective on `V`.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<IGraph> {
        IGraph::new(
            self.level,
            self.vertices.iter().map(|&v| map(v).0),
            self.cells.iter().map(|c| c.0.iter().map(|&v| map(v).0).collect_vec()),
        )
    }

    pub fn canonical_form(&self) -> (IGraph, CanonKey) {
        canonical_form(self)
    }

    pub fn canon_key(&self) -> CanonKey {
        canonical_key(self).0
    }
}

impl fmt::Display for IGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "level {} on {{{}}}: [{}]",
            self.level,
            self.vertices.iter().join(","),
            self.cells.iter().join(" ")
        )
    }
}

/// Isomorphism-class key: level, vertex count, and the sorted cell list of
/// the lexicographically least relabeling onto `0..N`.
///
/// Cells are stored encoded as `!mask.reverse_bits()` so that integer order
/// on the encodings agrees with lexicographic order of the label sequences.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    level: usize,
    vertex_count: usize,
    cells: Vec<u64>,
}

impl CanonKey {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The canonical cell list, each cell as increasing labels in `0..N`.
    pub fn cells(&self) -> Vec<Vec<u32>> {
        self.cells.iter().map(|&k| mask_labels(decode(k))).collect()
    }

    /// The canonical representative on `0..N`.
    pub fn graph(&self) -> IGraph {
        IGraph::new(self.level, 0..self.vertex_count as u32, self.cells())
            .expect("canonical key decodes to a valid graph")
    }
}

fn encode(mask: u64) -> u64 {
    !mask.reverse_bits()
}

fn decode(key: u64) -> u64 {
    (!key).reverse_bits()
}

fn mask_labels(mut mask: u64) -> Vec<u32> {
    let mut labels = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        labels.push(mask.trailing_zeros());
        mask &= mask - 1;
    }
    labels
}

fn canonical_key(g: &IGraph) -> (CanonKey, Vec<usize>) {
    let n = g.vertex_count();
    assert!(n <= 64, "canonical form supports at most 64 vertices");
    let masks: Vec<u64> = g
        .cells
        .iter()
        .map(|c| {
            c.0.iter().fold(0u64, |m, v| {
                m | 1 << g.vertices.binary_search(v).expect("cell vertex in V")
            })
        })
        .collect();

    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let mut candidate = Vec::with_capacity(masks.len());
    for_each_permutation(n, |perm| {
        candidate.clear();
        candidate.extend(masks.iter().map(|&m| {
            let mut out = 0u64;
            let mut rest = m;
            while rest != 0 {
                out |= 1 << perm[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            encode(out)
        }));
        candidate.sort_unstable();
        match &mut best {
            Some((keys, p)) if candidate < *keys => {
                keys.clone_from(&candidate);
                p.clear();
                p.extend_from_slice(perm);
            }
            Some(_) => {}
            None => best = Some((candidate.clone(), perm.to_vec())),
        }
    });
    let (cells, perm) = best.expect("at least one permutation");
    (
        CanonKey {
            level: g.level,
            vertex_count: n,
            cells,
        },
        perm,
    )
}

/// Relabels `g` onto `0..N` by the permutation minimizing its sorted cell
/// list. Isomorphic graphs yield equal keys. Runs over all `N!` permutations.
pub fn canonical_form(g: &IGraph) -> (IGraph, CanonKey) {
    let (key, _) = canonical_key(g);
    (key.graph(), key)
}

/// Every level-`i` graph on `0..n`, or one canonical representative per
/// isomorphism class (sorted by [`CanonKey`]) when `up_to_iso` is set.
pub fn enumerate_graphs(
    level: usize,
    n: usize,
    up_to_iso: bool,
    limits: &Limits,
) -> Result<Vec<IGraph>> {
    let slots = binomial(n, level) as usize;
    limits.check_graph_count(slots)?;
    if up_to_iso {
        limits.check_factorial(n)?;
    }
    let all_cells: Vec<Vec<u32>> = (0..n as u32).combinations(level).collect();
    let labeled = (0u64..1 << slots).map(|subset| {
        let chosen = all_cells
            .iter()
            .enumerate()
            .filter(|(k, _)| subset >> k & 1 == 1)
            .map(|(_, c)| c.clone());
        IGraph::new(level, 0..n as u32, chosen).expect("enumerated graph is valid")
    });
    if !up_to_iso {
        return Ok(labeled.collect());
    }
    let mut classes = BTreeMap::new();
    for g in labeled {
        let key = g.canon_key();
        classes.entry(key).or_insert(());
    }
    Ok(classes.into_keys().map(|k| k.graph()).collect())
}

/// Reads a pure complex given by its facets as a level-`i` graph, `i` being
/// the common facet cardinality.
pub fn facets_to_igraph(facets: &[Vec<u32>]) -> Result<IGraph> {
    let first = facets.first().ok_or(Error::EmptyFacets)?;
    let level = first.len();
    if level == 0 {
        return Err(Error::EmptyFacet);
    }
    if let Some(f) = facets.iter().find(|f| f.len() != level) {
        return Err(Error::MixedFacetArity {
            expected: level,
            found: f.len(),
        });
    }
    let vertices: BTreeSet<u32> = facets.iter().flatten().copied().collect();
    IGraph::new(level, vertices, facets.iter().map(|f| f.iter().copied()))
}
