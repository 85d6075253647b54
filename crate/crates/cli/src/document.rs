//! On-disk formats.
//!
//! A graph document is JSON: `{"level":2,"vertices":[0,1,2],"cells":[[0,1],[1,2]]}`.
//! A vector document is text, one `label numerator denominator` line per
//! nonzero coordinate, sorted by label, for example `((a),ε) 2 1`.
//! A facet file has one facet per line as whitespace-separated non-negative
//! integers; `#` starts a comment.

use std::fmt::Write as _;

use iflag::{IGraph, Label, Scalar, SparseVec};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::commands::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub level: usize,
    pub vertices: Vec<u32>,
    pub cells: Vec<Vec<u32>>,
}

impl GraphDocument {
    pub fn from_graph(g: &IGraph) -> GraphDocument {
        GraphDocument {
            level: g.level(),
            vertices: g.vertices().iter().map(|v| v.0).collect(),
            cells: g
                .cells()
                .iter()
                .map(|c| c.vertices().iter().map(|v| v.0).collect())
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<IGraph, CliError> {
        Ok(IGraph::new(
            self.level,
            self.vertices.iter().copied(),
            self.cells.iter().map(|c| c.iter().copied()),
        )?)
    }

    pub fn parse(text: &str) -> Result<GraphDocument, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("graph document: {e}")))
    }

    /// Single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph document serializes")
    }
}

/// Exact vector serialization: `(label, numerator, denominator)` triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorDocument {
    pub entries: Vec<(String, BigInt, BigInt)>,
}

impl VectorDocument {
    pub fn from_vec(v: &SparseVec) -> VectorDocument {
        VectorDocument {
            entries: v
                .iter()
                .map(|(l, c)| (l.to_string(), c.numer().clone(), c.denom().clone()))
                .collect(),
        }
    }

    pub fn to_vec(&self) -> Result<SparseVec, CliError> {
        let mut terms = Vec::with_capacity(self.entries.len());
        for (label, num, den) in &self.entries {
            let label: Label = label.parse()?;
            terms.push((label, Scalar::new(num.clone(), den.clone())));
        }
        Ok(SparseVec::from_terms(terms))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (label, num, den) in &self.entries {
            writeln!(out, "{label} {num} {den}").unwrap();
        }
        out
    }

    /// Parses and validates: denominators positive, numerators nonzero,
    /// labels strictly increasing.
    pub fn parse(text: &str) -> Result<VectorDocument, CliError> {
        let mut entries = Vec::new();
        let mut previous: Option<Label> = None;
        for (k, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let fail = |what: &str| CliError::Parse(format!("vector document line {}: {what}", k + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [label, num, den] = fields[..] else {
                return Err(fail("expected `label numerator denominator`"));
            };
            let parsed: Label = label.parse()?;
            let num: BigInt = num.parse().map_err(|_| fail("bad numerator"))?;
            let den: BigInt = den.parse().map_err(|_| fail("bad denominator"))?;
            if !den.is_positive() {
                return Err(fail("denominator must be positive"));
            }
            if num.is_zero() {
                return Err(fail("zero coefficient"));
            }
            if previous.as_ref().is_some_and(|p| *p >= parsed) {
                return Err(fail("labels out of order"));
            }
            previous = Some(parsed);
            entries.push((label.to_string(), num, den));
        }
        Ok(VectorDocument { entries })
    }
}

/// Reads a facet file: one facet per line, `#` comments, blank lines skipped.
pub fn parse_facets(text: &str) -> Result<Vec<Vec<u32>>, CliError> {
    let mut facets = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let facet = content
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Parse(format!("facet file line {}: {e}", k + 1)))?;
        facets.push(facet);
    }
    Ok(facets)
}
