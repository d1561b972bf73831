//! Brute-force oracle for trace membership, built from the family
//! definitions directly (not from `ShiftedSystem`), plus instance
//! generators. Shared by the core integration tests and the acceptance
//! suite.

#![allow(dead_code)]

use ctrlab_core::perfect::Graph;
use ctrlab_core::{LatticePoint, Poset};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

/// `ν(hi) ≥ ν(lo) + n` style constraints over variables `0` (degree) and
/// `1..=k` (ground elements).
#[derive(Clone, Debug)]
pub struct Model {
    pub ground: Vec<String>,
    /// `ν(x) ≥ n`.
    lower: Vec<usize>,
    /// `(a, b)`: `ν(a) ≥ ν(b) + n`.
    covers: Vec<(usize, usize)>,
    /// `(S, p, q)`: `q·(ν⁺(S) + n) ≤ p·ν(-∞)`.
    sums: Vec<(Vec<usize>, i64, i64)>,
    /// Upper bounds on `η(x) - μ(x)` for any decomposition.
    slack: Vec<i64>,
}

impl Model {
    pub fn poset(p: &Poset) -> Model {
        let n = p.len();
        let mut covers = Vec::new();
        for x in 0..n {
            if !(0..n).any(|z| p.less(z, x)) {
                covers.push((0, x + 1));
            }
            for y in 0..n {
                // y covers x
                if p.less(x, y) && !(0..n).any(|z| p.less(x, z) && p.less(z, y)) {
                    covers.push((x + 1, y + 1));
                }
            }
        }
        let lower = (0..n).filter(|&x| !(0..n).any(|y| p.less(x, y))).map(|x| x + 1).collect();
        let mut slack = vec![n as i64 + 3];
        slack.extend((0..n).map(|x| 1 + (0..n).filter(|&y| p.less(x, y)).count() as i64));
        Model { ground: p.elements().to_vec(), lower, covers, sums: Vec::new(), slack }
    }

    /// Clique description, cliques found by subset enumeration.
    pub fn graph(g: &Graph) -> Model {
        let mut sums = Vec::new();
        for clique in brute_force_cliques(g) {
            sums.push((clique.into_iter().map(|v| v + 1).collect(), 1, 1));
        }
        Model::with_sums(g.vertices().to_vec(), sums)
    }

    pub fn cycle(n: usize) -> Model {
        let ground: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut sums = Vec::new();
        if n == 3 {
            sums.push((vec![1, 2, 3], 1, 1));
        } else {
            for i in 0..n {
                sums.push((vec![i + 1, (i + 1) % n + 1], 1, 1));
            }
            if n % 2 == 1 {
                sums.push(((1..=n).collect(), (n as i64 - 1) / 2, 1));
            }
        }
        Model::with_sums(ground, sums)
    }

    fn with_sums(ground: Vec<String>, sums: Vec<(Vec<usize>, i64, i64)>) -> Model {
        let k = ground.len();
        let mut slack = vec![k as i64 + 3];
        slack.extend(std::iter::repeat_n(1, k));
        Model { lower: (1..=k).collect(), covers: Vec::new(), sums, slack, ground }
    }

    pub fn member(&self, shift: i64, v: &[i64]) -> bool {
        let n = i128::from(shift);
        let v = |i: usize| i128::from(v[i]);
        if self.ground.is_empty() && v(0) < 0 {
            return false;
        }
        self.lower.iter().all(|&x| v(x) >= n)
            && self.covers.iter().all(|&(a, b)| v(a) >= v(b) + n)
            && self.sums.iter().all(|(s, p, q)| {
                let plus: i128 = s.iter().map(|&x| v(x)).sum();
                i128::from(*q) * (plus + n) <= i128::from(*p) * v(0)
            })
    }

    /// Every `μ ∈ S(0)` of the given degree, lexicographically.
    pub fn ring_points(&self, degree: i64) -> Vec<Vec<i64>> {
        let k = self.ground.len();
        let mut out = Vec::new();
        let lo = vec![0; k];
        let hi = vec![degree.max(0); k];
        odometer(&lo, &hi, |vals| {
            let mut v = vec![degree];
            v.extend_from_slice(vals);
            if self.member(0, &v) {
                out.push(v);
            }
            false
        });
        out
    }

    /// Lexicographically least `η` (degree first) with `η ∈ S(1)` and
    /// `μ - η ∈ S(-1)`, by scanning a box that contains every solution.
    pub fn decompose(&self, mu: &[i64]) -> Option<Vec<i64>> {
        let lo = vec![0i64; mu.len()];
        let hi: Vec<i64> = mu.iter().zip(&self.slack).map(|(m, s)| m + s).collect();
        let mut found = None;
        odometer(&lo, &hi, |eta| {
            let zeta: Vec<i64> = mu.iter().zip(eta).map(|(m, e)| m - e).collect();
            if self.member(1, eta) && self.member(-1, &zeta) {
                found = Some(eta.to_vec());
                return true;
            }
            false
        });
        found
    }

    pub fn point(&self, v: &[i64]) -> LatticePoint {
        LatticePoint::from_pairs(self.ground.iter().cloned().zip(v[1..].iter().copied()), v[0])
    }

    pub fn dense(&self, p: &LatticePoint) -> Vec<i64> {
        let mut v = vec![p.degree()];
        v.extend(self.ground.iter().map(|id| p.get(id).expect("same ground")));
        v
    }
}

/// Visits the box `lo ≤ v ≤ hi` with the first coordinate most significant,
/// stopping when `f` returns true.
pub fn odometer(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64]) -> bool) {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut v = lo.to_vec();
    loop {
        if f(&v) {
            return;
        }
        let mut i = v.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if v[i] < hi[i] {
                v[i] += 1;
                break;
            }
            v[i] = lo[i];
        }
    }
}

/// Maximal cliques by checking every vertex subset.
pub fn brute_force_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.len();
    let is_clique =
        |mask: u32| (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || g.adjacent(u, v)));
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for mask in 1u32..1 << n {
        if is_clique(mask) && (0..n).all(|w| mask >> w & 1 == 1 || !is_clique(mask | 1 << w)) {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>());
        }
    }
    out.sort();
    out
}

pub fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2).prop_map(move |bits| {
            let ids: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let mut rel = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        rel.push((ids[i].clone(), ids[j].clone()));
                    }
                    k += 1;
                }
            }
            Poset::new(ids, rel).expect("index order is acyclic")
        })
    })
}

pub fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.45), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let ids: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((ids[i].clone(), ids[j].clone()));
                    }
                    k += 1;
                }
            }
            Graph::new(ids, edges).expect("simple graph")
        })
    })
}

/// One randomized oracle-equivalence instance.
#[derive(Clone, Debug)]
pub enum Family {
    Poset(Poset),
    Graph(Graph),
    Cycle(usize),
}

impl Family {
    pub fn model(&self) -> Model {
        match self {
            Family::Poset(p) => Model::poset(p),
            Family::Graph(g) => Model::graph(g),
            Family::Cycle(n) => Model::cycle(*n),
        }
    }

    pub fn system(&self) -> ctrlab_core::ShiftedSystem {
        match self {
            Family::Poset(p) => ctrlab_core::hibi::order_polytope_system(p),
            Family::Graph(g) => ctrlab_core::perfect::perfect_system(g),
            Family::Cycle(n) => ctrlab_core::cycle::cycle_system(*n).expect("n >= 3"),
        }
    }
}

/// Family instance, degree in `0..=3` and a selector for the ring point.
pub fn instance_strategy(family: usize) -> BoxedStrategy<(Family, i64, usize)> {
    let fam: BoxedStrategy<Family> = match family {
        0 => poset_strategy(6).prop_map(Family::Poset).boxed(),
        1 => graph_strategy(1, 6).prop_map(Family::Graph).boxed(),
        _ => (3usize..=6).prop_map(Family::Cycle).boxed(),
    };
    (fam, 0i64..=3, any::<usize>()).boxed()
}

/// Outcome of one instance: `None` when pruned search and the oracle agree
/// (including the witness), else a description of the disagreement.
pub fn disagreement(family: &Family, degree: i64, pick: usize) -> Option<String> {
    let model = family.model();
    let system = family.system();
    let points = model.ring_points(degree);
    if points.is_empty() {
        return None;
    }
    let mu = &points[pick % points.len()];
    let expected = model.decompose(mu);
    let got = ctrlab_core::decompose(&system, &model.point(mu)).expect("mu is a ring point");
    let got = got.map(|w| model.dense(&w.eta));
    (expected != got).then(|| format!("{family:?} mu={mu:?}: oracle {expected:?}, pruned {got:?}"))
}

/// `n` instances per family drawn from a fixed-seed runner.
pub fn random_instances(per_family: usize) -> Vec<(Family, i64, usize)> {
    let mut runner = TestRunner::deterministic();
    let mut out = Vec::new();
    for family in 0..3 {
        let strategy = instance_strategy(family);
        for _ in 0..per_family {
            out.push(strategy.new_tree(&mut runner).expect("strategy").current());
        }
    }
    out
}
