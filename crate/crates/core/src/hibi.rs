//! Hibi rings `K[O(P)]`, the Ehrhart rings of order polytopes.
//!
//! The order polytope here is the set of `f: P → [0, 1]` with
//! `x ≤ y ⇒ f(x) ≥ f(y)`, which makes its Ehrhart ring the Hibi ring of
//! the order ideals of `P`. For every shift `n` the module `ω^(n)` is
//! spanned by the lattice points `ν` on `P ∪ {-∞}` with
//!
//! * `ν(x) ≥ n` for every maximal `x`,
//! * `ν(x) ≥ ν(y) + n` whenever `y` covers `x` in `P ∪ {-∞}`,
//!
//! where `-∞` sits below every element.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::exec::{Executor, Sequential};
use crate::lattice::{
    check_membership, decompose_with, enumerate_points_with, first_nonradical_member, min_feasible_degree, Coord,
    Engine, LatticeError, ShiftedSystem,
};
use crate::poset::Poset;
use crate::verdict::{Basis, RadicalEvidence, ScanBounds, Verdict, VerdictKind, Witness};

/// The system whose shift-`n` members span `ω^(n)` of the Hibi ring.
pub fn order_polytope_system(poset: &Poset) -> ShiftedSystem {
    let mut system = ShiftedSystem::new(poset.elements().iter().cloned()).expect("poset ids are distinct");
    for x in poset.maximal() {
        system.add_lower_bound(x).expect("index in range");
    }
    for x in poset.minimal() {
        system.add_cover(Coord::Degree, Coord::Element(x)).expect("index in range");
    }
    for &(x, y) in poset.cover_indices() {
        system.add_cover(Coord::Element(x), Coord::Element(y)).expect("index in range");
    }
    system
}

/// `a(K[O(P)]) = -min{m : ω_m ≠ 0}`.
pub fn a_invariant(poset: &Poset) -> i64 {
    -min_feasible_degree(&order_polytope_system(poset), 1).expect("poset systems are bounded")
}

/// `min{m : (ω^(-1))_m ≠ 0}`.
pub fn b_invariant(poset: &Poset) -> i64 {
    min_feasible_degree(&order_polytope_system(poset), -1).expect("poset systems are bounded")
}

/// Degrees of minimal generators of `ω^(shift)` found in a degree window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDegrees {
    pub degrees: BTreeSet<i64>,
    /// Inclusive range of degrees scanned. Generators above it are not
    /// looked for, so the answer is complete only up to `window.1`.
    pub window: (i64, i64),
}

impl GeneratorDegrees {
    /// Generated in a single degree, as far as the window shows.
    pub fn single_degree(&self) -> bool {
        self.degrees.len() == 1
    }
}

/// Scans degrees `d ∈ [d_min, d_min + degree_window]` of `ω^(shift)` for
/// minimal generators.
///
/// The Hibi ring is standard graded, so `ν` is a minimal generator iff
/// `ν - ρ` leaves `ω^(shift)` for every degree-1 ring monomial `ρ`.
pub fn generator_degrees(poset: &Poset, shift: i64, degree_window: i64) -> Result<GeneratorDegrees, LatticeError> {
    let system = order_polytope_system(poset);
    let start = min_feasible_degree(&system, shift)?;
    let ring_gens = enumerate_points_with(&system, 0, 1, Engine::Pruned)?;
    let mut degrees = BTreeSet::new();
    for degree in start..=start + degree_window.max(0) {
        for nu in enumerate_points_with(&system, shift, degree, Engine::Pruned)? {
            let mut minimal = true;
            for rho in &ring_gens {
                if check_membership(&system, shift, &nu.checked_sub(rho)?)? {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                degrees.insert(degree);
                break;
            }
        }
    }
    Ok(GeneratorDegrees { degrees, window: (start, start + degree_window.max(0)) })
}

/// CTR scan of `K[O(P)]`.
///
/// * `Gorenstein` when the zero point decomposes (`tr(ω) = R`);
/// * `NotCtr` when some ring monomial of degree `≤ degree_bound` is outside
///   the trace but has a power `≤ power_bound` inside it;
/// * otherwise `CtrNotGorenstein` with basis `AtBound`.
pub fn hibi_ctr_scan(poset: &Poset, bounds: ScanBounds) -> Result<Verdict, LatticeError> {
    hibi_ctr_scan_with(poset, bounds, Engine::Pruned, &Sequential)
}

pub fn hibi_ctr_scan_with<E: Executor>(
    poset: &Poset,
    bounds: ScanBounds,
    engine: Engine,
    exec: &E,
) -> Result<Verdict, LatticeError> {
    let system = order_polytope_system(poset);
    scan_verdict(&system, bounds, engine, exec)
}

/// Shared by the Hibi and perfect-graph scans.
pub(crate) fn scan_verdict<E: Executor>(
    system: &ShiftedSystem,
    bounds: ScanBounds,
    engine: Engine,
    exec: &E,
) -> Result<Verdict, LatticeError> {
    if let Some(w) = decompose_with(system, &system.origin(), engine)? {
        return Ok(Verdict {
            kind: VerdictKind::Gorenstein,
            basis: Basis::Proven,
            witness: Witness::UnitDecomposes(w),
        });
    }
    if let Some((mu, w)) = first_nonradical_member(system, bounds.degree_bound, bounds.power_bound, engine, exec)? {
        return Ok(Verdict {
            kind: VerdictKind::NotCtr,
            basis: Basis::Proven,
            witness: Witness::NonRadicalMonomial { mu, evidence: RadicalEvidence::Power(w) },
        });
    }
    let (candidates, decomposed) = count_trace_members(system, bounds.degree_bound, engine, exec)?;
    Ok(Verdict {
        kind: VerdictKind::CtrNotGorenstein,
        basis: Basis::AtBound(bounds),
        witness: Witness::MemberScan {
            degree_bound: bounds.degree_bound,
            candidates,
            radical_members: decomposed,
            decomposed,
            unit_decomposes: false,
        },
    })
}

/// Ring monomials of degree `1..=degree_bound` and how many lie in the trace.
fn count_trace_members<E: Executor>(
    system: &ShiftedSystem,
    degree_bound: i64,
    engine: Engine,
    exec: &E,
) -> Result<(usize, usize), LatticeError> {
    let mut candidates = 0;
    let mut decomposed = 0;
    for degree in 1..=degree_bound {
        let members = enumerate_points_with(system, 0, degree, engine)?;
        candidates += members.len();
        for r in exec.map(&members, |mu| decompose_with(system, mu, engine)) {
            decomposed += usize::from(r?.is_some());
        }
    }
    Ok((candidates, decomposed))
}

/// Three-valued flag for hypotheses that are only checked within a window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Tri {
    fn from(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreFactor {
    pub a: i64,
    pub b: i64,
    /// `ω` generated in one degree within the scanned window.
    pub level: Tri,
    /// `ω^(-1)` generated in one degree within the scanned window.
    pub anticanonical_level: Tri,
    /// Krull dimension `|P| + 1`, the number of elements of a maximal chain
    /// of order ideals.
    pub dim_lower_bound: i64,
    /// Outcome of a bounded CTR scan of the factor: `No` only when a
    /// non-radical monomial was found.
    pub ctr: Tri,
}

/// Hypotheses for the Segre product `R_1 # ... # R_k` of Hibi rings to be
/// CTR with `a(R) = a_1` and `min{m : (ω_R^(-1))_m ≠ 0} = b_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreReport {
    pub factors: Vec<SegreFactor>,
    pub hypothesis_ok: bool,
    pub predicted_a: i64,
    pub predicted_b: i64,
    /// Index of a factor with minimum `a` and maximum `b` to move to the
    /// front, when factor 0 is not one and some other factor is.
    pub reorder_hint: Option<usize>,
    /// Hypotheses that always hold for Hibi rings and are not checked.
    pub assumed: Vec<&'static str>,
    pub window: i64,
}

/// Evaluates the checkable Segre-product hypotheses for `factors` in the
/// given order. Factor 0 plays the distinguished role: every other factor
/// needs `a_i ≥ a_0` and `b_i ≤ b_0`.
pub fn segre_condition_report(factors: &[Poset], window: i64, bounds: ScanBounds) -> Result<SegreReport, LatticeError> {
    let mut out = Vec::with_capacity(factors.len());
    for p in factors {
        let level = generator_degrees(p, 1, window)?;
        let acl = generator_degrees(p, -1, window)?;
        let ctr = match hibi_ctr_scan(p, bounds)?.kind {
            VerdictKind::NotCtr => Tri::No,
            VerdictKind::Gorenstein => Tri::Yes,
            _ => Tri::Unknown,
        };
        out.push(SegreFactor {
            a: a_invariant(p),
            b: b_invariant(p),
            level: Tri::from(level.single_degree()),
            anticanonical_level: Tri::from(acl.single_degree()),
            dim_lower_bound: p.len() as i64 + 1,
            ctr,
        });
    }
    let (predicted_a, predicted_b) = out.first().map_or((0, 0), |f| (f.a, f.b));
    let extremal = |f: &SegreFactor| out.iter().all(|g| g.a >= f.a && g.b <= f.b);
    let order_ok = out.len() >= 2 && out.first().is_some_and(extremal);
    let reorder_hint = if out.first().is_some_and(extremal) { None } else { out.iter().position(extremal) };
    let flags_ok = out.iter().all(|f| {
        f.level == Tri::Yes
            && f.anticanonical_level == Tri::Yes
            && f.a < 0
            && f.dim_lower_bound >= 2
            && f.ctr != Tri::No
    });
    Ok(SegreReport {
        factors: out,
        hypothesis_ok: order_ok && flags_ok,
        predicted_a,
        predicted_b,
        reorder_hint,
        assumed: alloc::vec!["reduced", "linear regular element"],
        window,
    })
}
