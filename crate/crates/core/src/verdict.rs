use alloc::vec::Vec;

use crate::lattice::{DecompositionWitness, LatticePoint};
use crate::perfect::CliqueStats;
use crate::schubert::{SchubertIndex, SchubertTraceCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Gorenstein,
    CtrNotGorenstein,
    NotCtr,
    InconclusiveAtBound,
}

/// Bounds of a semidecision scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScanBounds {
    /// Largest degree of ring monomials scanned.
    pub degree_bound: i64,
    /// Largest power `k` tried when testing radical membership.
    pub power_bound: u32,
}

impl Default for ScanBounds {
    fn default() -> Self {
        ScanBounds { degree_bound: 2, power_bound: 4 }
    }
}

/// How far a verdict is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Settled: the witness certifies the verdict outright, or it is the
    /// family's classification theorem applied to computed invariants.
    Proven,
    /// Only checked up to the given bounds.
    AtBound(ScanBounds),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub basis: Basis,
    pub witness: Witness,
}

impl Verdict {
    pub fn is_semidecision(&self) -> bool {
        matches!(self.basis, Basis::AtBound(_))
    }
}

/// Evidence that `T^μ` is in the radical of the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalEvidence {
    /// `(T^μ)^k ∈ tr(ω)` with the given decomposition of `k·μ`.
    Power(DecompositionWitness),
    /// `T^μ` lies in every minimal prime of the trace; a power
    /// decomposition is attached when one was found within the bound.
    MinimalPrimes { power: Option<DecompositionWitness> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `1 ∈ tr(ω)`: the zero point decomposes.
    UnitDecomposes(DecompositionWitness),
    /// The ring is a polynomial ring.
    PolynomialRing,
    /// `T^μ ∉ tr(ω)` but `T^μ ∈ √tr(ω)`.
    NonRadicalMonomial { mu: LatticePoint, evidence: RadicalEvidence },
    /// Exhaustive scan of ring monomials up to a degree: how many were
    /// examined, how many were found (or known) to lie in the radical, and
    /// how many of those decompose. `unit_decomposes` records the
    /// Gorenstein check.
    MemberScan {
        degree_bound: i64,
        candidates: usize,
        radical_members: usize,
        decomposed: usize,
        unit_decomposes: bool,
    },
    /// Clique sizes of a perfect graph.
    Cliques(CliqueStats),
    /// `κ`-vector of a Schubert index; `κ - κ' = 0`.
    SchubertKappa { gamma: SchubertIndex, kappa: Vec<i64> },
    /// `κ - κ' = 1`: the trace as an intersection of primes `J(σ_i)`.
    SchubertTrace(SchubertTraceCertificate),
    /// `κ - κ' ≥ 2`: the trace is generated in degree `κ - κ'`, so `γ` is
    /// not in it, while `γ^(κ-κ')` is.
    SchubertPower { gamma: SchubertIndex, kappa: Vec<i64>, generator_degree: i64 },
    /// Generic determinantal ring `K[X]/I_t(X)` with trace
    /// `I_{t-1}(X)^(n-m)`.
    Determinantal { m: usize, n: usize, t: usize, trace_exponent: usize },
}
