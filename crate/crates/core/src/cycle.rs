//! Ehrhart rings of stable set polytopes of cycle graphs `C_n` on
//! `v_0, ..., v_{n-1}`, edges `{v_i, v_{i+1}}` with indices mod `n`.
//!
//! For odd `n = 2ℓ + 1 ≥ 5` the stable set polytope also needs the odd
//! cycle inequality `f⁺(V) ≤ ℓ`, so `ω^(n)` is spanned by the `μ` with
//! `μ(v) ≥ n`, `μ⁺(e) + n ≤ μ(-∞)` for every edge and
//! `μ⁺(V) + n ≤ ℓ·μ(-∞)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exec::{Executor, Sequential};
use crate::lattice::{
    decompose_with, enumerate_points_with, first_violation, radical_power_search_with, Coefficient, Engine,
    LatticeError, LatticePoint, ShiftedSystem,
};
use crate::verdict::{Basis, RadicalEvidence, ScanBounds, Verdict, VerdictKind, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleError {
    /// A cycle needs `n ≥ 3`.
    TooShort(usize),
    /// The minimal prime description is for odd `n ≥ 7`.
    NotOddAtLeastSeven(usize),
    /// The non-CTR construction needs `ℓ ≥ 4`.
    EllTooSmall(usize),
    IndexOutOfRange {
        n: usize,
        i: usize,
    },
    Lattice(LatticeError),
    /// A computed certificate contradicts the classification.
    Inconsistent(&'static str),
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::TooShort(n) => write!(f, "cycle length {n} is below 3"),
            CycleError::NotOddAtLeastSeven(n) => write!(f, "minimal primes are described for odd n >= 7, got {n}"),
            CycleError::EllTooSmall(l) => write!(f, "witness needs ell >= 4, got {l}"),
            CycleError::IndexOutOfRange { n, i } => write!(f, "vertex index {i} out of range for n = {n}"),
            CycleError::Lattice(e) => write!(f, "{e}"),
            CycleError::Inconsistent(what) => write!(f, "inconsistent certificate: {what}"),
        }
    }
}

impl core::error::Error for CycleError {}

impl From<LatticeError> for CycleError {
    fn from(e: LatticeError) -> Self {
        CycleError::Lattice(e)
    }
}

pub fn vertex_ids(n: usize) -> Vec<alloc::string::String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

pub fn cycle_system(n: usize) -> Result<ShiftedSystem, CycleError> {
    if n < 3 {
        return Err(CycleError::TooShort(n));
    }
    let mut system = ShiftedSystem::new(vertex_ids(n)).expect("distinct ids");
    for v in 0..n {
        system.add_lower_bound(v)?;
    }
    if n == 3 {
        system.add_sum(vec![0, 1, 2], Coefficient::ONE)?;
        return Ok(system);
    }
    for i in 0..n {
        system.add_sum(vec![i, (i + 1) % n], Coefficient::ONE)?;
    }
    if n % 2 == 1 {
        let ell = Coefficient::integer((n as i64 - 1) / 2).expect("positive");
        system.add_sum((0..n).collect(), ell)?;
    }
    Ok(system)
}

/// Membership of `T^μ` in the minimal prime `p_i` of the radical of the
/// trace: `μ(v_i) > 0` or `μ⁺(V) < ℓ·μ(-∞)`.
pub fn minimal_prime_member(n: usize, i: usize, mu: &LatticePoint) -> Result<bool, CycleError> {
    let system = prime_system(n)?;
    if i >= n {
        return Err(CycleError::IndexOutOfRange { n, i });
    }
    Ok(prime_clause(&system, n, i, mu)?)
}

/// `T^μ ∈ ∩ p_i`.
pub fn in_all_minimal_primes(n: usize, mu: &LatticePoint) -> Result<bool, CycleError> {
    let system = prime_system(n)?;
    for i in 0..n {
        if !prime_clause(&system, n, i, mu)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn prime_system(n: usize) -> Result<ShiftedSystem, CycleError> {
    if n < 7 || n.is_multiple_of(2) {
        return Err(CycleError::NotOddAtLeastSeven(n));
    }
    cycle_system(n)
}

fn prime_clause(system: &ShiftedSystem, n: usize, i: usize, mu: &LatticePoint) -> Result<bool, LatticeError> {
    if let Some(violated) = first_violation(system, 0, mu)? {
        return Err(LatticeError::NotAMember { shift: 0, violated });
    }
    let ell = (n as i64 - 1) / 2;
    let own = mu.get(&format!("v{i}")).expect("checked domain");
    let total: i64 = mu.values().values().sum();
    Ok(own > 0 || i128::from(total) < i128::from(ell) * i128::from(mu.degree()))
}

/// `μ = 1` on `v_2, v_4, ..., v_{2ℓ-2}`, degree 1: in every minimal prime
/// but not in the trace, on `C_{2ℓ+1}`.
pub fn non_ctr_witness(ell: usize) -> Result<LatticePoint, CycleError> {
    if ell < 4 {
        return Err(CycleError::EllTooSmall(ell));
    }
    let n = 2 * ell + 1;
    let values = (0..n).map(|i| (format!("v{i}"), i64::from(i >= 2 && i <= 2 * ell - 2 && i % 2 == 0)));
    Ok(LatticePoint::from_pairs(values, 1))
}

/// CTR iff `n ≤ 7`; Gorenstein iff `n` is even or `n ≤ 5`.
///
/// `n = 7` is certified up to `bounds.degree_bound`: every ring monomial
/// in all minimal primes decomposes. For odd `n ≥ 9` the witness is
/// [`non_ctr_witness`] with the smallest power in the trace, when one is
/// found up to `bounds.power_bound`.
pub fn cycle_ctr_verdict(n: usize, bounds: ScanBounds) -> Result<Verdict, CycleError> {
    cycle_ctr_verdict_with(n, bounds, Engine::Pruned, &Sequential)
}

pub fn cycle_ctr_verdict_with<E: Executor>(
    n: usize,
    bounds: ScanBounds,
    engine: Engine,
    exec: &E,
) -> Result<Verdict, CycleError> {
    let system = cycle_system(n)?;
    let unit = decompose_with(&system, &system.origin(), engine)?;
    if n.is_multiple_of(2) || n <= 5 {
        let w = unit.ok_or(CycleError::Inconsistent("unit does not decompose"))?;
        return Ok(Verdict {
            kind: VerdictKind::Gorenstein,
            basis: Basis::Proven,
            witness: Witness::UnitDecomposes(w),
        });
    }
    if unit.is_some() {
        return Err(CycleError::Inconsistent("unit decomposes for odd n >= 7"));
    }
    let non_radical = |mu: LatticePoint| -> Result<Verdict, CycleError> {
        let power = radical_power_search_with(&system, &mu, bounds.power_bound, engine)?;
        Ok(Verdict {
            kind: VerdictKind::NotCtr,
            basis: Basis::Proven,
            witness: Witness::NonRadicalMonomial { mu, evidence: RadicalEvidence::MinimalPrimes { power } },
        })
    };
    if n == 7 {
        let mut candidates = 0;
        let mut radical_members = 0;
        let mut decomposed = 0;
        for degree in 1..=bounds.degree_bound {
            let members = enumerate_points_with(&system, 0, degree, engine)?;
            let flags = exec.map(&members, |mu| -> Result<(bool, bool), CycleError> {
                Ok((in_all_minimal_primes(n, mu)?, decompose_with(&system, mu, engine)?.is_some()))
            });
            for (mu, flag) in members.into_iter().zip(flags) {
                let (in_primes, in_trace) = flag?;
                if in_trace && !in_primes {
                    return Err(CycleError::Inconsistent("trace member outside a minimal prime"));
                }
                if in_primes && !in_trace {
                    return non_radical(mu);
                }
                candidates += 1;
                radical_members += usize::from(in_primes);
                decomposed += usize::from(in_trace);
            }
        }
        return Ok(Verdict {
            kind: VerdictKind::CtrNotGorenstein,
            basis: Basis::Proven,
            witness: Witness::MemberScan {
                degree_bound: bounds.degree_bound,
                candidates,
                radical_members,
                decomposed,
                unit_decomposes: false,
            },
        });
    }
    let mu = non_ctr_witness((n - 1) / 2)?;
    if decompose_with(&system, &mu, engine)?.is_some() {
        return Err(CycleError::Inconsistent("witness decomposes"));
    }
    if !in_all_minimal_primes(n, &mu)? {
        return Err(CycleError::Inconsistent("witness outside a minimal prime"));
    }
    non_radical(mu)
}
