use alloc::vec::Vec;

use super::point::{DecompositionWitness, LatticePoint};
use super::search::{decompose_with, enumerate_points_with, radical_power_search_from, Engine};
use super::system::ShiftedSystem;
use super::LatticeError;
use crate::exec::Executor;

/// Where a ring monomial `T^μ` sits relative to the trace `tr(ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberClass {
    /// `T^μ ∈ tr(ω)`.
    InTrace(DecompositionWitness),
    /// `T^μ ∉ tr(ω)` but `(T^μ)^k ∈ tr(ω)` with `k = witness.power ≥ 2`.
    RadicalNotTrace(DecompositionWitness),
    /// `T^μ ∉ tr(ω)` and no power up to the bound is in it.
    NoPowerFound,
}

pub fn classify_member(
    system: &ShiftedSystem,
    mu: &LatticePoint,
    k_max: u32,
    engine: Engine,
) -> Result<MemberClass, LatticeError> {
    if let Some(w) = decompose_with(system, mu, engine)? {
        return Ok(MemberClass::InTrace(w));
    }
    Ok(match radical_power_search_from(system, mu, 2, k_max, engine)? {
        Some(w) => MemberClass::RadicalNotTrace(w),
        None => MemberClass::NoPowerFound,
    })
}

/// Every member of `S(0)` with degree in `1..=degree_bound` that is in the
/// radical of the trace (by a power up to `k_max`) but not in the trace.
pub fn nonradical_members<E: Executor>(
    system: &ShiftedSystem,
    degree_bound: i64,
    k_max: u32,
    engine: Engine,
    exec: &E,
) -> Result<Vec<(LatticePoint, DecompositionWitness)>, LatticeError> {
    let mut out = Vec::new();
    for degree in 1..=degree_bound {
        out.extend(nonradical_at_degree(system, degree, k_max, engine, exec)?);
    }
    Ok(out)
}

/// The first such member in (degree, lexicographic) order.
pub fn first_nonradical_member<E: Executor>(
    system: &ShiftedSystem,
    degree_bound: i64,
    k_max: u32,
    engine: Engine,
    exec: &E,
) -> Result<Option<(LatticePoint, DecompositionWitness)>, LatticeError> {
    for degree in 1..=degree_bound {
        if let Some(hit) = nonradical_at_degree(system, degree, k_max, engine, exec)?.into_iter().next() {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

fn nonradical_at_degree<E: Executor>(
    system: &ShiftedSystem,
    degree: i64,
    k_max: u32,
    engine: Engine,
    exec: &E,
) -> Result<Vec<(LatticePoint, DecompositionWitness)>, LatticeError> {
    let members = enumerate_points_with(system, 0, degree, engine)?;
    let classes = exec.map(&members, |mu| classify_member(system, mu, k_max, engine));
    let mut out = Vec::new();
    for (mu, class) in members.into_iter().zip(classes) {
        if let MemberClass::RadicalNotTrace(w) = class? {
            out.push((mu, w));
        }
    }
    Ok(out)
}
