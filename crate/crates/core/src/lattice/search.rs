use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::point::{DecompositionWitness, LatticePoint};
use super::propagate::{propagate, Interval, Linear, NEG_INF, POS_INF};
use super::system::{first_violated_form, Form, ShiftedSystem};
use super::{LatticeError, Violation, DEGREE_NAME};

/// Search back end.
///
/// Both engines visit candidates in the same order (degree first, then the
/// ground elements in system order, each ascending), so they return the
/// same witness and the same enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Depth-first search with bound propagation at every node.
    #[default]
    Pruned,
    /// Plain enumeration of the whole candidate box with a membership test
    /// per candidate. Exponential; meant as an oracle.
    Exhaustive,
}

/// Componentwise least member of `S(shift)` as a dense vector. Every
/// constraint has exactly one negatively weighted variable, so the least
/// fixpoint of the induced lower-bound rules is itself a member.
pub(crate) fn least_solution(system: &ShiftedSystem, shift: i64) -> Result<Vec<i64>, LatticeError> {
    let forms = system.forms();
    let nv = system.num_vars();
    let mut low: Vec<Option<i128>> = vec![None; nv];
    let shift = i128::from(shift);
    let mut rounds = 0usize;
    loop {
        let mut changed = false;
        for f in &forms {
            let Some(&(head, coef)) = f.terms.iter().find(|t| t.1 < 0) else {
                continue;
            };
            // head ≥ (Σ_{a>0} a·v + n·w) / |coef|
            let mut rest = shift * i128::from(f.weight);
            let mut known = true;
            for &(v, a) in f.terms.iter().filter(|t| t.1 > 0) {
                match low[v] {
                    Some(l) => rest += i128::from(a) * l,
                    None => {
                        known = false;
                        break;
                    }
                }
            }
            if !known {
                continue;
            }
            let bound = super::propagate::ceil_div(rest, -i128::from(coef));
            if low[head].is_none_or(|l| bound > l) {
                low[head] = Some(bound);
                changed = true;
            }
        }
        if !changed {
            break;
        }
        rounds += 1;
        if rounds > nv + 1 {
            return Err(LatticeError::Diverged);
        }
    }
    low.iter()
        .enumerate()
        .map(|(v, l)| {
            let l = l.ok_or_else(|| LatticeError::UnboundedEnumeration { coordinate: coord_name(system, v) })?;
            i64::try_from(l).map_err(|_| LatticeError::Overflow)
        })
        .collect()
}

fn coord_name(system: &ShiftedSystem, var: usize) -> alloc::string::String {
    if var == 0 {
        DEGREE_NAME.to_string()
    } else {
        system.ground()[var - 1].clone()
    }
}

/// Minimum of `ν(-∞)` over `S(shift)`.
///
/// For a poset system at shift 1 this is the longest chain of `P ∪ {-∞}`
/// counted in elements, i.e. `-a` for the Hibi ring.
pub fn min_feasible_degree(system: &ShiftedSystem, shift: i64) -> Result<i64, LatticeError> {
    Ok(least_solution(system, shift)?[0])
}

/// Result of propagating the root node of a decomposition search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationOutcome {
    /// Bounds on `η` reached by propagation: degree first, then per element.
    pub degree: Interval,
    pub values: BTreeMap<alloc::string::String, Interval>,
    /// The constraint that emptied a domain, with the side (shift `1` for
    /// `η`, `-1` for `ζ = μ - η`) it was stated on.
    pub conflict: Option<(i64, Violation)>,
}

struct DecompositionProblem {
    constraints: Vec<Linear>,
    /// Which system form and side each constraint came from.
    origin: Vec<(usize, i64)>,
    root: Vec<Interval>,
    forms: Vec<Form>,
    mu: Vec<i64>,
}

impl DecompositionProblem {
    /// `η ∈ S(1)` and `μ - η ∈ S(-1)`, as linear constraints on `η` inside
    /// the box `least(S(1)) ≤ η ≤ μ - least(S(-1))`.
    fn new(system: &ShiftedSystem, mu: &LatticePoint) -> Result<Self, LatticeError> {
        let mu = system.dense(mu)?;
        let forms = system.forms();
        if let Some(k) = first_violated_form(&forms, 0, &mu) {
            return Err(LatticeError::NotAMember { shift: 0, violated: system.violation(k) });
        }
        let eta_low = least_solution(system, 1)?;
        let zeta_low = least_solution(system, -1)?;
        let root = (0..mu.len()).map(|v| Interval::new(eta_low[v], mu[v] - zeta_low[v])).collect();
        let mut constraints = Vec::with_capacity(2 * forms.len());
        let mut origin = Vec::with_capacity(2 * forms.len());
        // T·η + w ≤ 0
        for (k, f) in forms.iter().enumerate() {
            constraints.push(Linear { terms: f.terms.clone(), rhs: -i128::from(f.weight) });
            origin.push((k, 1));
        }
        // T·(μ - η) - w ≤ 0
        for (k, f) in forms.iter().enumerate() {
            let terms = f.terms.iter().map(|&(v, a)| (v, -a)).collect();
            constraints.push(Linear { terms, rhs: i128::from(f.weight) - f.eval(&mu) });
            origin.push((k, -1));
        }
        Ok(DecompositionProblem { constraints, origin, root, forms, mu })
    }

    fn witness(&self, system: &ShiftedSystem, eta: &[i64], power: u32) -> DecompositionWitness {
        let zeta: Vec<i64> = self.mu.iter().zip(eta).map(|(m, e)| m - e).collect();
        DecompositionWitness { eta: system.sparse(eta), zeta: system.sparse(&zeta), power }
    }

    fn accepts(&self, eta: &[i64]) -> bool {
        let zeta: Vec<i64> = self.mu.iter().zip(eta).map(|(m, e)| m - e).collect();
        first_violated_form(&self.forms, 1, eta).is_none() && first_violated_form(&self.forms, -1, &zeta).is_none()
    }
}

/// Propagates the root of the decomposition search for `μ` and reports the
/// bounds it forces on `η`, or where it failed.
pub fn decomposition_bounds(system: &ShiftedSystem, mu: &LatticePoint) -> Result<PropagationOutcome, LatticeError> {
    let problem = DecompositionProblem::new(system, mu)?;
    let mut dom = problem.root.clone();
    let conflict =
        if dom.iter().any(|d| d.lo > d.hi) { None } else { propagate(&problem.constraints, &mut dom)?.err() }.map(
            |k| {
                let (form, side) = problem.origin[k];
                (side, system.violation(form))
            },
        );
    Ok(PropagationOutcome {
        degree: dom[0],
        values: system.ground().iter().cloned().zip(dom[1..].iter().copied()).collect(),
        conflict,
    })
}

/// Decides whether `μ ∈ S(0)` is a sum `η + ζ` with `η ∈ S(1)` and
/// `ζ ∈ S(-1)`, i.e. whether `T^μ` lies in the trace of the canonical
/// module. Returns the witness with lexicographically least `η`, ordered by
/// degree and then by the ground elements in system order.
pub fn decompose(system: &ShiftedSystem, mu: &LatticePoint) -> Result<Option<DecompositionWitness>, LatticeError> {
    decompose_with(system, mu, Engine::Pruned)
}

pub fn decompose_with(
    system: &ShiftedSystem,
    mu: &LatticePoint,
    engine: Engine,
) -> Result<Option<DecompositionWitness>, LatticeError> {
    decompose_power(system, mu, 1, engine)
}

fn decompose_power(
    system: &ShiftedSystem,
    mu: &LatticePoint,
    power: u32,
    engine: Engine,
) -> Result<Option<DecompositionWitness>, LatticeError> {
    let problem = DecompositionProblem::new(system, mu)?;
    if problem.root.iter().any(|d| d.lo > d.hi) {
        return Ok(None);
    }
    let eta = match engine {
        Engine::Pruned => {
            let mut dom = problem.root.clone();
            first_solution(&problem.constraints, &mut dom)?
        }
        Engine::Exhaustive => first_in_box(&problem.root, |eta| problem.accepts(eta)),
    };
    Ok(eta.map(|eta| problem.witness(system, &eta, power)))
}

/// Smallest `k ≤ k_max` such that `k·μ` decomposes, with its witness.
/// `None` only says that no power up to `k_max` lies in the trace.
pub fn radical_power_search(
    system: &ShiftedSystem,
    mu: &LatticePoint,
    k_max: u32,
) -> Result<Option<DecompositionWitness>, LatticeError> {
    radical_power_search_with(system, mu, k_max, Engine::Pruned)
}

pub fn radical_power_search_with(
    system: &ShiftedSystem,
    mu: &LatticePoint,
    k_max: u32,
    engine: Engine,
) -> Result<Option<DecompositionWitness>, LatticeError> {
    radical_power_search_from(system, mu, 1, k_max, engine)
}

pub(crate) fn radical_power_search_from(
    system: &ShiftedSystem,
    mu: &LatticePoint,
    k_min: u32,
    k_max: u32,
    engine: Engine,
) -> Result<Option<DecompositionWitness>, LatticeError> {
    for k in k_min.max(1)..=k_max {
        let multiple = mu.scaled(i64::from(k))?;
        if let Some(w) = decompose_power(system, &multiple, k, engine)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// All members of `S(shift)` of the given degree, in lexicographic order of
/// the ground elements (system order).
pub fn enumerate_points(system: &ShiftedSystem, shift: i64, degree: i64) -> Result<Vec<LatticePoint>, LatticeError> {
    enumerate_points_with(system, shift, degree, Engine::Pruned)
}

pub fn enumerate_points_with(
    system: &ShiftedSystem,
    shift: i64,
    degree: i64,
    engine: Engine,
) -> Result<Vec<LatticePoint>, LatticeError> {
    let forms = system.forms();
    let constraints: Vec<Linear> = forms
        .iter()
        .map(|f| Linear { terms: f.terms.clone(), rhs: -i128::from(shift) * i128::from(f.weight) })
        .collect();
    let mut dom: Vec<Interval> = vec![Interval::new(NEG_INF, POS_INF); system.num_vars()];
    dom[0] = Interval::point(degree);
    if propagate(&constraints, &mut dom)?.is_err() {
        return Ok(Vec::new());
    }
    if let Some(v) = dom.iter().position(|d| !d.is_finite()) {
        return Err(LatticeError::UnboundedEnumeration { coordinate: coord_name(system, v) });
    }
    let mut found = Vec::new();
    match engine {
        Engine::Pruned => all_solutions(&constraints, &mut dom, &mut found)?,
        Engine::Exhaustive => for_each_in_box(&dom, |p| {
            if first_violated_form(&forms, shift, p).is_none() {
                found.push(p.to_vec());
            }
            true
        }),
    }
    Ok(found.iter().map(|p| system.sparse(p)).collect())
}

fn first_solution(constraints: &[Linear], dom: &mut [Interval]) -> Result<Option<Vec<i64>>, LatticeError> {
    if propagate(constraints, dom)?.is_err() {
        return Ok(None);
    }
    let Some(v) = dom.iter().position(|d| !d.is_fixed()) else {
        return Ok(Some(dom.iter().map(|d| d.lo).collect()));
    };
    let Interval { lo, hi } = dom[v];
    for value in lo..=hi {
        let mut child = dom.to_vec();
        child[v] = Interval::point(value);
        if let Some(sol) = first_solution(constraints, &mut child)? {
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

fn all_solutions(constraints: &[Linear], dom: &mut [Interval], out: &mut Vec<Vec<i64>>) -> Result<(), LatticeError> {
    if propagate(constraints, dom)?.is_err() {
        return Ok(());
    }
    let Some(v) = dom.iter().position(|d| !d.is_fixed()) else {
        out.push(dom.iter().map(|d| d.lo).collect());
        return Ok(());
    };
    let Interval { lo, hi } = dom[v];
    for value in lo..=hi {
        let mut child = dom.to_vec();
        child[v] = Interval::point(value);
        all_solutions(constraints, &mut child, out)?;
    }
    Ok(())
}

/// Visits every point of a finite box in lexicographic order (first
/// coordinate most significant) until `visit` returns `false`.
fn for_each_in_box(dom: &[Interval], mut visit: impl FnMut(&[i64]) -> bool) {
    if dom.iter().any(|d| d.lo > d.hi) {
        return;
    }
    let mut p: Vec<i64> = dom.iter().map(|d| d.lo).collect();
    loop {
        if !visit(&p) {
            return;
        }
        let mut i = p.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if p[i] < dom[i].hi {
                p[i] += 1;
                break;
            }
            p[i] = dom[i].lo;
        }
    }
}

fn first_in_box(dom: &[Interval], mut accept: impl FnMut(&[i64]) -> bool) -> Option<Vec<i64>> {
    let mut found = None;
    for_each_in_box(dom, |p| {
        if accept(p) {
            found = Some(p.to_vec());
            false
        } else {
            true
        }
    });
    found
}
