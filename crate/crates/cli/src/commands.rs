//! Subcommand implementations. Each returns the exact text written to
//! standard output, so output bytes depend only on the arguments.

use std::fmt::Write as _;
use std::path::Path;

use iflag::{
    build_tower, enumerate_graphs, facets_to_igraph, flag_span_rank, partition::partition_table,
    Error as CoreError, Limits, ShellingCache,
};
use iflag::limits::binomial;
use serde::Serialize;
use thiserror::Error;

use crate::document::{parse_facets, GraphDocument, VectorDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    SizeGuard(CoreError),

    #[error("{0}")]
    Core(CoreError),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit code: 2 for unreadable or malformed input, 3 for a size
    /// guard, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::SizeGuard(_) => 3,
            CliError::Core(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            e if e.is_size_guard() => CliError::SizeGuard(e),
            CoreError::InvalidCell { .. }
            | CoreError::DuplicateVertex(_)
            | CoreError::MixedFacetArity { .. }
            | CoreError::EmptyFacets
            | CoreError::EmptyFacet
            | CoreError::LabelParse { .. } => CliError::Parse(e.to_string()),
            e => CliError::Core(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<iflag::IGraph, CliError> {
    GraphDocument::parse(&read(path)?)?.to_graph()
}

/// Flag vector of the graph in `path`. The tower covers at least the
/// strata the graph's links need.
pub fn flag(path: &Path, m_max: Option<usize>, limits: &Limits) -> Result<String, CliError> {
    let g = read_graph(path)?;
    let needed = g.vertex_count().saturating_sub(1);
    let tower = build_tower(g.level(), m_max.unwrap_or(needed).max(needed), limits)?;
    let v = tower.flag_vector(&g)?;
    Ok(VectorDocument::from_vec(&v).to_text())
}

pub fn shell(path: &Path, limits: &Limits) -> Result<String, CliError> {
    let g = read_graph(path)?;
    let v = ShellingCache::new(*limits).vector(&g)?;
    Ok(VectorDocument::from_vec(&v).to_text())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankRow {
    pub n: usize,
    pub graphs: usize,
    pub rank: usize,
    pub p: u128,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn rank_rows(
    level: usize,
    n_max: usize,
    up_to_iso: bool,
    limits: &Limits,
) -> Result<Vec<RankRow>, CliError> {
    // fail on the largest row before doing any work
    limits.check_graph_count(binomial(n_max, level) as usize)?;
    if up_to_iso {
        limits.check_factorial(n_max)?;
    }
    let tower = build_tower(level, n_max.saturating_sub(1), limits)?;
    let p = partition_table(n_max);
    (1..=n_max)
        .map(|n| {
            let (rank, graphs) = flag_span_rank(level, n, &tower, up_to_iso)?;
            Ok(RankRow {
                n,
                graphs,
                rank,
                p: p[n],
                matches: rank as u128 == p[n],
            })
        })
        .collect()
}

const TWO_GRAPH_NOTE: &str = "p(N) is the expected rank for 2-graphs only";

/// Rank of the span of flag vectors for `N = 1..=n_max`, against `p(N)`.
pub fn rank_table(
    level: usize,
    n_max: usize,
    up_to_iso: bool,
    format: Format,
    limits: &Limits,
) -> Result<String, CliError> {
    let rows = rank_rows(level, n_max, up_to_iso, limits)?;
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("N,graphs,rank,p,match\n");
            for r in &rows {
                writeln!(out, "{},{},{},{},{}", r.n, r.graphs, r.rank, r.p, r.matches).unwrap();
            }
            if level != 2 {
                writeln!(out, "# {TWO_GRAPH_NOTE}").unwrap();
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Table<'a> {
                level: usize,
                up_to_iso: bool,
                rows: &'a [RankRow],
                #[serde(skip_serializing_if = "Option::is_none")]
                note: Option<&'a str>,
            }
            let table = Table {
                level,
                up_to_iso,
                rows: &rows,
                note: (level != 2).then_some(TWO_GRAPH_NOTE),
            };
            out = serde_json::to_string_pretty(&table).unwrap();
            out.push('\n');
        }
    }
    Ok(out)
}

/// Dimensions of stratum `(level, m)`: span of flag vectors, relation rank,
/// quotient dimension.
pub fn quotient_info(
    level: usize,
    m: usize,
    format: Format,
    limits: &Limits,
) -> Result<String, CliError> {
    let tower = build_tower(level + 1, m, limits)?;
    let s = tower.summary(level, m)?;
    Ok(match format {
        Format::Csv => format!(
            "level,vertices,graphs,span_dim,relations,relation_rank,quotient_dim\n{},{},{},{},{},{},{}\n",
            s.level, s.vertices, s.graph_count, s.span_dim, s.relation_count, s.relation_rank,
            s.quotient_dim
        ),
        Format::Json => format!(
            "{}\n",
            serde_json::json!({
                "level": s.level,
                "vertices": s.vertices,
                "graphs": s.graph_count,
                "span_dim": s.span_dim,
                "relations": s.relation_count,
                "relation_rank": s.relation_rank,
                "quotient_dim": s.quotient_dim,
            })
        ),
    })
}

pub fn partitions(n_max: usize, format: Format) -> String {
    let table = partition_table(n_max);
    match format {
        Format::Csv => {
            let mut out = String::from("n,p\n");
            for (n, p) in table.iter().enumerate() {
                writeln!(out, "{n},{p}").unwrap();
            }
            out
        }
        Format::Json => format!("{}\n", serde_json::to_string(&table).unwrap()),
    }
}

/// One graph document per line.
pub fn enumerate(
    level: usize,
    n: usize,
    up_to_iso: bool,
    limits: &Limits,
) -> Result<String, CliError> {
    let mut out = String::new();
    for g in enumerate_graphs(level, n, up_to_iso, limits)? {
        out.push_str(&GraphDocument::from_graph(&g).to_json());
        out.push('\n');
    }
    Ok(out)
}

pub fn ingest_complex(path: &Path) -> Result<String, CliError> {
    let facets = parse_facets(&read(path)?)?;
    let g = facets_to_igraph(&facets)?;
    Ok(format!("{}\n", GraphDocument::from_graph(&g).to_json()))
}
