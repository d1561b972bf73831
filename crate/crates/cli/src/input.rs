//! Input schemas. Unknown keys are rejected.
//!
//! * poset: `{"elements": ["a", ...], "covers": [["x", "y"], ...]}`, where
//!   `["x", "y"]` means `y` covers `x` (`x < y`);
//! * graph: `{"vertices": [...], "edges": [["u", "v"], ...]}`;
//! * Schubert index: `{"m": 3, "n": 7, "gamma": [2, 3, 6]}`.

use std::io::Read;

use ctrlab_core::perfect::Graph;
use ctrlab_core::schubert::SchubertIndex;
use ctrlab_core::Poset;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetInput {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInput {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchubertInput {
    pub m: usize,
    pub n: usize,
    pub gamma: Vec<usize>,
}

impl PosetInput {
    pub fn build(&self, context: &str) -> Result<Poset> {
        Poset::new(self.elements.iter().cloned(), self.covers.iter().map(|(x, y)| (x.as_str(), y.as_str())))
            .map_err(|source| CliError::Poset { context: context.to_string(), source })
    }

    /// The cover relation of `p`, elements in input order.
    pub fn from_poset(p: &Poset) -> PosetInput {
        let ids = p.elements();
        PosetInput {
            elements: ids.to_vec(),
            covers: p.cover_indices().iter().map(|&(x, y)| (ids[x].clone(), ids[y].clone())).collect(),
        }
    }
}

impl GraphInput {
    pub fn build(&self, context: &str) -> Result<Graph> {
        Graph::new(self.vertices.iter().cloned(), self.edges.iter().map(|(u, v)| (u.as_str(), v.as_str())))
            .map_err(|source| CliError::Graph { context: context.to_string(), source })
    }

    pub fn from_graph(g: &Graph) -> GraphInput {
        GraphInput {
            vertices: g.vertices().to_vec(),
            edges: g.edges().map(|(u, v)| (u.to_string(), v.to_string())).collect(),
        }
    }
}

impl SchubertInput {
    pub fn build(&self, context: &str) -> Result<SchubertIndex> {
        SchubertIndex::new(self.m, self.n, self.gamma.clone())
            .map_err(|source| CliError::Schubert { context: context.to_string(), source })
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_source(path: &str) -> Result<String> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn parse_json<T: DeserializeOwned>(text: &str, context: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|source| CliError::Json { context: context.to_string(), source })
}

pub fn parse_poset(text: &str, context: &str) -> Result<Poset> {
    parse_json::<PosetInput>(text, context)?.build(context)
}

pub fn parse_graph(text: &str, context: &str) -> Result<Graph> {
    parse_json::<GraphInput>(text, context)?.build(context)
}

pub fn parse_schubert(text: &str, context: &str) -> Result<SchubertIndex> {
    parse_json::<SchubertInput>(text, context)?.build(context)
}
