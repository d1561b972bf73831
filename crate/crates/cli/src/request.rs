//! A fully resolved computation: what the report's `input` field records
//! and what `verify` replays.

use ctrlab_core::cycle::cycle_ctr_verdict_with;
use ctrlab_core::hibi::{hibi_ctr_scan_with, segre_condition_report};
use ctrlab_core::perfect::{comparability_graph, deep_scan_with, necessary_condition_with, Graph};
use ctrlab_core::schubert::{determinantal_ctr, schubert_verdict};
use ctrlab_core::{Engine, Executor, ScanBounds, VerdictKind};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, Result};
use crate::input::{GraphInput, PosetInput, SchubertInput};
use crate::report::{Body, Report};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Request {
    Schubert(SchubertInput),
    Cycle {
        n: usize,
    },
    Hibi {
        poset: PosetInput,
    },
    /// Exactly one of `graph` and `poset`; a poset stands for its
    /// comparability graph, which is perfect.
    Perfect {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        graph: Option<GraphInput>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        poset: Option<PosetInput>,
        deep: bool,
    },
    Determinantal {
        m: usize,
        n: usize,
        t: usize,
    },
    Segre {
        posets: Vec<PosetInput>,
        window: i64,
    },
}

impl Request {
    pub fn family(&self) -> &'static str {
        match self {
            Request::Schubert(_) => "schubert",
            Request::Cycle { .. } => "cycle",
            Request::Hibi { .. } => "hibi",
            Request::Perfect { .. } => "perfect",
            Request::Determinantal { .. } => "determinantal",
            Request::Segre { .. } => "segre",
        }
    }

    pub fn input_json(&self) -> Value {
        let tagged = serde_json::to_value(self).expect("requests serialize");
        tagged.get(self.family()).cloned().unwrap_or(Value::Null)
    }

    /// Inverse of `family` plus `input_json`.
    pub fn from_parts(family: &str, input: &Value) -> Result<Request> {
        let tagged = serde_json::json!({ family: input });
        serde_json::from_value(tagged).map_err(|e| CliError::Report(format!("input: {e}")))
    }

    /// Size of the ground set, used for the default power bound.
    pub fn ground_size(&self) -> usize {
        match self {
            Request::Schubert(s) => s.m,
            Request::Cycle { n } => *n,
            Request::Hibi { poset } => poset.elements.len(),
            Request::Perfect { graph, poset, .. } => {
                graph.as_ref().map(|g| g.vertices.len()).or(poset.as_ref().map(|p| p.elements.len())).unwrap_or(0)
            }
            Request::Determinantal { m, n, .. } => m * n,
            Request::Segre { posets, .. } => posets.iter().map(|p| p.elements.len()).max().unwrap_or(0),
        }
    }

    pub fn summary(&self) -> String {
        match self {
            Request::Schubert(s) => {
                let g: Vec<String> = s.gamma.iter().map(usize::to_string).collect();
                format!("gamma = [{}] in Gamma({}x{})", g.join(","), s.m, s.n)
            }
            Request::Cycle { n } => format!("C_{n}"),
            Request::Hibi { poset } => {
                format!("poset, {} elements, {} covers", poset.elements.len(), poset.covers.len())
            }
            Request::Perfect { graph: Some(g), deep, .. } => {
                format!(
                    "graph, {} vertices, {} edges{}",
                    g.vertices.len(),
                    g.edges.len(),
                    if *deep { ", deep scan" } else { "" }
                )
            }
            Request::Perfect { poset, deep, .. } => format!(
                "comparability graph of a poset with {} elements{}",
                poset.as_ref().map_or(0, |p| p.elements.len()),
                if *deep { ", deep scan" } else { "" }
            ),
            Request::Determinantal { m, n, t } => format!("K[X]/I_{t}(X), X generic {m}x{n}"),
            Request::Segre { posets, window } => format!("{} Hibi factors, window {window}", posets.len()),
        }
    }

    fn perfect_graph(graph: &Option<GraphInput>, poset: &Option<PosetInput>) -> Result<(Graph, Vec<&'static str>)> {
        match (graph, poset) {
            (Some(g), None) => Ok((g.build("input graph")?, vec!["graph is perfect"])),
            (None, Some(p)) => Ok((comparability_graph(&p.build("input poset")?), Vec::new())),
            _ => Err(CliError::Usage("perfect needs exactly one of a graph and a poset".into())),
        }
    }

    pub fn run<E: Executor>(&self, bounds: ScanBounds, engine: Engine, exec: &E) -> Result<Report> {
        let mut assumptions = Vec::new();
        let body = match self {
            Request::Schubert(s) => Body::Verdict(schubert_verdict(&s.build("input")?)),
            Request::Cycle { n } => Body::Verdict(cycle_ctr_verdict_with(*n, bounds, engine, exec)?),
            Request::Hibi { poset } => {
                Body::Verdict(hibi_ctr_scan_with(&poset.build("input poset")?, bounds, engine, exec)?)
            }
            Request::Perfect { graph, poset, deep } => {
                let (g, assumed) = Request::perfect_graph(graph, poset)?;
                assumptions = assumed;
                let mut v = necessary_condition_with(&g, bounds, engine)?;
                if *deep && v.kind == VerdictKind::InconclusiveAtBound {
                    v = deep_scan_with(&g, bounds, engine, exec)?;
                }
                Body::Verdict(v)
            }
            Request::Determinantal { m, n, t } => Body::Verdict(
                determinantal_ctr(*m, *n, *t).map_err(|source| CliError::Schubert { context: "det".into(), source })?,
            ),
            Request::Segre { posets, window } => {
                if posets.is_empty() {
                    return Err(CliError::Usage("segre needs at least one poset".into()));
                }
                let ps = posets.iter().map(|p| p.build("input poset")).collect::<Result<Vec<_>>>()?;
                Body::Segre(segre_condition_report(&ps, *window, bounds)?)
            }
        };
        Ok(Report { request: self.clone(), bounds, engine, assumptions, body, timing_ms: None })
    }
}
