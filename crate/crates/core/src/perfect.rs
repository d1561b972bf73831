//! Ehrhart rings of stable set polytopes of perfect graphs.
//!
//! For a perfect graph the stable set polytope is cut out by `f ≥ 0` and
//! `f⁺(K) ≤ 1` for every maximal clique `K`, so `ω^(n)` is spanned by the
//! `μ` with `μ(x) ≥ n` and `μ⁺(K) + n ≤ μ(-∞)`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exec::{Executor, Sequential};
use crate::hibi::scan_verdict;
use crate::lattice::{
    decompose_with, Coefficient, DecompositionWitness, Engine, LatticeError, LatticePoint, ShiftedSystem,
};
use crate::poset::Poset;
use crate::verdict::{Basis, RadicalEvidence, ScanBounds, Verdict, VerdictKind, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    UnknownVertex(String),
    DuplicateVertex(String),
    Loop(String),
    DuplicateEdge(String, String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            GraphError::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            GraphError::Loop(v) => write!(f, "loop at {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {{{u}, {v}}}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    /// Pairs `(u, v)` with `u < v`, in input order.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let n = vertices.len();
        let mut adj = vec![vec![false; n]; n];
        let mut out = Vec::new();
        for (u, v) in edges {
            let lookup = |id: &str| index.get(id).copied().ok_or_else(|| GraphError::UnknownVertex(id.to_string()));
            let (u, v) = (lookup(u.as_ref())?, lookup(v.as_ref())?);
            if u == v {
                return Err(GraphError::Loop(vertices[u].clone()));
            }
            if adj[u][v] {
                return Err(GraphError::DuplicateEdge(vertices[u].clone(), vertices[v].clone()));
            }
            adj[u][v] = true;
            adj[v][u] = true;
            out.push((u.min(v), u.max(v)));
        }
        Ok(Graph { vertices, edges: out, adj })
    }

    pub fn complete(prefix: &str, n: usize) -> Graph {
        let ids: Vec<String> = (1..=n).map(|i| alloc::format!("{prefix}{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((ids[i].clone(), ids[j].clone()));
            }
        }
        Graph::new(ids, edges).expect("distinct ids")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges.iter().map(|&(u, v)| (self.vertices[u].as_str(), self.vertices[v].as_str()))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| self.adj[u][v]))
    }
}

/// `z ~ w` iff `z < w` or `w < z` in `P`.
pub fn comparability_graph(poset: &Poset) -> Graph {
    let ids = poset.elements();
    let edges: Vec<(&str, &str)> = poset.relations().map(|(x, y)| (ids[x].as_str(), ids[y].as_str())).collect();
    Graph::new(ids.iter().cloned(), edges).expect("a poset relation is a simple graph")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueStats {
    /// Largest maximal clique size.
    pub k: usize,
    /// Smallest maximal clique size.
    pub k_prime: usize,
    /// Each clique in vertex order; the list sorted lexicographically by
    /// vertex position.
    pub cliques: Vec<Vec<String>>,
}

/// Maximal cliques as sorted index lists, sorted. The empty graph has none.
pub fn maximal_clique_indices(graph: &Graph) -> Vec<Vec<usize>> {
    fn expand(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| (p.iter().filter(|&&v| g.adj[u][v]).count(), core::cmp::Reverse(u)))
            .expect("p or x is nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.clone().into_iter().filter(|&v| !g.adj[pivot][v]) {
            r.push(v);
            let np = p.iter().copied().filter(|&w| g.adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| g.adj[v][w]).collect();
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    if !graph.is_empty() {
        expand(graph, &mut Vec::new(), (0..graph.len()).collect(), Vec::new(), &mut out);
    }
    out.sort();
    out
}

pub fn maximal_cliques(graph: &Graph) -> CliqueStats {
    let idx = maximal_clique_indices(graph);
    let k = idx.iter().map(Vec::len).max().unwrap_or(0);
    let k_prime = idx.iter().map(Vec::len).min().unwrap_or(0);
    let cliques = idx.into_iter().map(|c| c.into_iter().map(|v| graph.vertices[v].clone()).collect()).collect();
    CliqueStats { k, k_prime, cliques }
}

/// The system of `Stab(G)` for perfect `G`: lower bounds on all vertices
/// and one coefficient-1 sum per maximal clique.
pub fn perfect_system(graph: &Graph) -> ShiftedSystem {
    let mut system = ShiftedSystem::new(graph.vertices.iter().cloned()).expect("graph ids are distinct");
    for v in 0..graph.len() {
        system.add_lower_bound(v).expect("index in range");
    }
    for clique in maximal_clique_indices(graph) {
        system.add_sum(clique, Coefficient::ONE).expect("index in range");
    }
    system
}

/// CTR forces `k - k' ≤ 1`.
///
/// * `k = k'`: Gorenstein, with the decomposition of the zero point.
/// * `k - k' ≥ 2`: not CTR. `μ = 0` in degree 1 is outside the trace, and
///   `(k-k')·μ = η + ζ` with `η ≡ 1` in degree `k+1`, `ζ ≡ -1` in degree
///   `-k'-1`.
/// * `k - k' = 1`: inconclusive; see [`deep_scan`].
///
/// The graph is assumed perfect.
pub fn necessary_condition(graph: &Graph, bounds: ScanBounds) -> Result<Verdict, LatticeError> {
    necessary_condition_with(graph, bounds, Engine::Pruned)
}

pub fn necessary_condition_with(graph: &Graph, bounds: ScanBounds, engine: Engine) -> Result<Verdict, LatticeError> {
    let stats = maximal_cliques(graph);
    let system = perfect_system(graph);
    let inconclusive = |stats| Verdict {
        kind: VerdictKind::InconclusiveAtBound,
        basis: Basis::AtBound(bounds),
        witness: Witness::Cliques(stats),
    };
    match stats.k - stats.k_prime {
        0 => Ok(match decompose_with(&system, &system.origin(), engine)? {
            Some(w) => {
                Verdict { kind: VerdictKind::Gorenstein, basis: Basis::Proven, witness: Witness::UnitDecomposes(w) }
            }
            None => inconclusive(stats),
        }),
        1 => Ok(inconclusive(stats)),
        gap => {
            let (k, kp) = (stats.k as i64, stats.k_prime as i64);
            let ground = system.ground();
            let mu = LatticePoint::constant(ground, 0, 1);
            let w = DecompositionWitness {
                eta: LatticePoint::constant(ground, 1, k + 1),
                zeta: LatticePoint::constant(ground, -1, -kp - 1),
                power: gap as u32,
            };
            if !w.validate(&system, &mu)? || decompose_with(&system, &mu, engine)?.is_some() {
                return Ok(inconclusive(stats));
            }
            Ok(Verdict {
                kind: VerdictKind::NotCtr,
                basis: Basis::Proven,
                witness: Witness::NonRadicalMonomial { mu, evidence: RadicalEvidence::Power(w) },
            })
        }
    }
}

/// Scan of ring monomials up to `bounds.degree_bound` for one that is in
/// the radical of the trace but not in the trace.
pub fn deep_scan(graph: &Graph, bounds: ScanBounds) -> Result<Verdict, LatticeError> {
    deep_scan_with(graph, bounds, Engine::Pruned, &Sequential)
}

pub fn deep_scan_with<E: Executor>(
    graph: &Graph,
    bounds: ScanBounds,
    engine: Engine,
    exec: &E,
) -> Result<Verdict, LatticeError> {
    scan_verdict(&perfect_system(graph), bounds, engine, exec)
}
