//! Schubert indices `γ = [a_1, ..., a_m] ∈ Γ(m×n)` and the block/gap
//! combinatorics that decide whether the Schubert cycle `G(X; γ)` is CTR.
//!
//! Columns are 1-based. The decomposition uses the sentinel
//! `a_{m+1} = n + 1` and `k(0) = 0`.

use alloc::vec::Vec;
use core::fmt;

use crate::verdict::{Basis, Verdict, VerdictKind, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchubertError {
    /// Needs `1 ≤ m < n`.
    BadShape {
        m: usize,
        n: usize,
    },
    WrongLength {
        expected: usize,
        found: usize,
    },
    NotIncreasing {
        position: usize,
    },
    OutOfRange {
        position: usize,
        value: usize,
    },
    ShapeMismatch,
    /// `γ = [n-m+1, ..., n]` has no block decomposition.
    Degenerate,
    /// `β ≥ γ` fails at this position.
    NotAbove {
        position: usize,
    },
    /// `β ∉ Θ_i`.
    NotInTheta {
        i: usize,
    },
    /// The witness pair needs `κ - κ' = 1`.
    KappaGap {
        gap: i64,
    },
    /// Determinantal parameters outside `2 ≤ t ≤ m ≤ n`.
    BadDeterminantal {
        m: usize,
        n: usize,
        t: usize,
    },
}

impl fmt::Display for SchubertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchubertError::BadShape { m, n } => write!(f, "need 1 <= m < n, got m={m}, n={n}"),
            SchubertError::WrongLength { expected, found } => write!(f, "expected {expected} entries, found {found}"),
            SchubertError::NotIncreasing { position } => {
                write!(f, "entries not strictly increasing at position {position}")
            }
            SchubertError::OutOfRange { position, value } => {
                write!(f, "entry {value} at position {position} is outside [1, n]")
            }
            SchubertError::ShapeMismatch => f.write_str("indices have different (m, n)"),
            SchubertError::Degenerate => f.write_str("[n-m+1, ..., n] has no block decomposition"),
            SchubertError::NotAbove { position } => write!(f, "beta < gamma at position {position}"),
            SchubertError::NotInTheta { i } => write!(f, "beta is not in Theta_{i}"),
            SchubertError::KappaGap { gap } => write!(f, "witness pair needs kappa - kappa' = 1, found {gap}"),
            SchubertError::BadDeterminantal { m, n, t } => {
                write!(f, "need 2 <= t <= m <= n, got m={m}, n={n}, t={t}")
            }
        }
    }
}

impl core::error::Error for SchubertError {}

/// An element `[a_1 < ... < a_m]` of `Γ(m×n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchubertIndex {
    m: usize,
    n: usize,
    entries: Vec<usize>,
}

impl SchubertIndex {
    pub fn new(m: usize, n: usize, entries: Vec<usize>) -> Result<SchubertIndex, SchubertError> {
        if m == 0 || m >= n {
            return Err(SchubertError::BadShape { m, n });
        }
        if entries.len() != m {
            return Err(SchubertError::WrongLength { expected: m, found: entries.len() });
        }
        for (i, &a) in entries.iter().enumerate() {
            if a == 0 || a > n {
                return Err(SchubertError::OutOfRange { position: i + 1, value: a });
            }
            if i > 0 && entries[i - 1] >= a {
                return Err(SchubertError::NotIncreasing { position: i + 1 });
            }
        }
        Ok(SchubertIndex { m, n, entries })
    }

    /// `[1, ..., m]`, the bottom of `Γ(m×n)`.
    pub fn bottom(m: usize, n: usize) -> Result<SchubertIndex, SchubertError> {
        SchubertIndex::new(m, n, (1..=m).collect())
    }

    /// `[n-m+1, ..., n]`, the top of `Γ(m×n)`.
    pub fn top(m: usize, n: usize) -> Result<SchubertIndex, SchubertError> {
        SchubertIndex::new(m, n, (n - m.min(n) + 1..=n).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `a_j` for `1 ≤ j ≤ m`, and the sentinel `n + 1` for `j = m + 1`.
    pub fn a(&self, j: usize) -> usize {
        if j == self.m + 1 {
            self.n + 1
        } else {
            self.entries[j - 1]
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.entries[0] == self.n - self.m + 1
    }

    /// Componentwise `self ≤ other`; false across shapes.
    pub fn leq(&self, other: &SchubertIndex) -> bool {
        self.m == other.m && self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Every element of `Γ(m×n)`, lexicographically.
    pub fn all(m: usize, n: usize) -> Result<Vec<SchubertIndex>, SchubertError> {
        let mut cur = SchubertIndex::bottom(m, n)?.entries;
        let mut out = Vec::new();
        loop {
            out.push(SchubertIndex { m, n, entries: cur.clone() });
            let Some(i) = (0..m).rev().find(|&i| cur[i] < n - (m - 1 - i)) else {
                return Ok(out);
            };
            cur[i] += 1;
            for j in i + 1..m {
                cur[j] = cur[j - 1] + 1;
            }
        }
    }

    /// `Γ(m×n; γ) = {δ : δ ≥ γ}`, lexicographically.
    pub fn upper_set(&self) -> Vec<SchubertIndex> {
        SchubertIndex::all(self.m, self.n)
            .expect("shape already validated")
            .into_iter()
            .filter(|d| self.leq(d))
            .collect()
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Componentwise max and min.
pub fn join_meet(d: &SchubertIndex, e: &SchubertIndex) -> Result<(SchubertIndex, SchubertIndex), SchubertError> {
    if d.m != e.m || d.n != e.n {
        return Err(SchubertError::ShapeMismatch);
    }
    let join = d.entries.iter().zip(&e.entries).map(|(a, b)| *a.max(b)).collect();
    let meet = d.entries.iter().zip(&e.entries).map(|(a, b)| *a.min(b)).collect();
    Ok((SchubertIndex { entries: join, ..d.clone() }, SchubertIndex { entries: meet, ..d.clone() }))
}

/// Blocks `β_0, ..., β_{t+1}` (the last possibly empty), gaps
/// `χ_0, ..., χ_t`, cut positions `k(0) = 0, k(1), ..., k(t+1)` and `κ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    gamma: SchubertIndex,
    blocks: Vec<Vec<usize>>,
    gaps: Vec<Vec<usize>>,
    cuts: Vec<usize>,
    kappa: Vec<i64>,
}

pub fn block_decomposition(g: &SchubertIndex) -> Result<BlockDecomposition, SchubertError> {
    if g.is_degenerate() {
        return Err(SchubertError::Degenerate);
    }
    let m = g.m;
    // Maximal runs of consecutive values among positions 1..=m+1.
    let mut cuts = alloc::vec![0];
    for j in 1..=m {
        if g.a(j + 1) - g.a(j) >= 2 {
            cuts.push(j);
        }
    }
    let t = cuts.len() - 2;
    let mut blocks: Vec<Vec<usize>> = cuts.windows(2).map(|w| (w[0] + 1..=w[1]).map(|j| g.a(j)).collect()).collect();
    blocks.push((cuts[t + 1] + 1..=m).map(|j| g.a(j)).collect());
    let gaps: Vec<Vec<usize>> = (0..=t).map(|i| (g.a(cuts[i + 1]) + 1..g.a(cuts[i + 1] + 1)).collect()).collect();
    let kappa = (0..=t)
        .map(|i| {
            let b: usize = blocks[..=i].iter().map(Vec::len).sum();
            let c: usize = gaps[i..].iter().map(Vec::len).sum();
            (b + c) as i64
        })
        .collect();
    Ok(BlockDecomposition { gamma: g.clone(), blocks, gaps, cuts, kappa })
}

/// `I_1`, `I_2`, `I' = {i ∈ I_1 : i-1 ∈ I_2}` and `I'' = {i ∈ I_2 : i-1 ∈ I_1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSets {
    pub i1: Vec<usize>,
    pub i2: Vec<usize>,
    pub i_prime: Vec<usize>,
    pub i_dprime: Vec<usize>,
}

impl BlockDecomposition {
    pub fn gamma(&self) -> &SchubertIndex {
        &self.gamma
    }

    pub fn t(&self) -> usize {
        self.cuts.len() - 2
    }

    /// `β_0, ..., β_{t+1}`.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `χ_0, ..., χ_t`.
    pub fn gaps(&self) -> &[Vec<usize>] {
        &self.gaps
    }

    /// `k(i)` for `0 ≤ i ≤ t + 1`.
    pub fn k(&self, i: usize) -> usize {
        self.cuts[i]
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn kappa(&self) -> &[i64] {
        &self.kappa
    }

    /// `κ`.
    pub fn kappa_max(&self) -> i64 {
        *self.kappa.iter().max().expect("t >= 0")
    }

    /// `κ'`.
    pub fn kappa_min(&self) -> i64 {
        *self.kappa.iter().min().expect("t >= 0")
    }

    pub fn index_sets(&self) -> IndexSets {
        let (hi, lo) = (self.kappa_max(), self.kappa_min());
        let i1: Vec<usize> = (0..=self.t()).filter(|&i| self.kappa[i] == hi).collect();
        let i2: Vec<usize> = (0..=self.t()).filter(|&i| self.kappa[i] == lo).collect();
        let i_prime = i1.iter().copied().filter(|&i| i > 0 && i2.contains(&(i - 1))).collect();
        let i_dprime = i2.iter().copied().filter(|&i| i > 0 && i1.contains(&(i - 1))).collect();
        IndexSets { i1, i2, i_prime, i_dprime }
    }

    /// `ζ_i` for `0 ≤ i ≤ t`: `a_{k(i+1)}` raised by one.
    pub fn zeta(&self, i: usize) -> SchubertIndex {
        let mut e = self.gamma.entries.clone();
        e[self.cuts[i + 1] - 1] += 1;
        SchubertIndex { entries: e, ..self.gamma.clone() }
    }

    /// `σ_i` for `1 ≤ i ≤ t`: drop the last entry of `β_{i-1}`, then raise
    /// the last entry of `β_i` by one.
    pub fn sigma(&self, i: usize) -> SchubertIndex {
        let g = &self.gamma;
        let (ki, kn) = (self.cuts[i], self.cuts[i + 1]);
        let mut e = g.entries.clone();
        for j in ki..kn {
            e[j - 1] = g.a(j + 1);
        }
        e[kn - 1] = g.a(kn) + 1;
        SchubertIndex { entries: e, ..g.clone() }
    }

    /// `δ ∈ Ω_i`, i.e. `b_{k(i+1)} = a_{k(i+1)}`, for `δ ≥ γ`.
    pub fn in_omega(&self, i: usize, delta: &SchubertIndex) -> bool {
        let k = self.cuts[i + 1];
        delta.a(k) == self.gamma.a(k)
    }

    /// `δ ∈ Θ_i`, i.e. `b_{k(i)} < a_{k(i)+1}`, for `δ ≥ γ` and `1 ≤ i ≤ t`.
    pub fn in_theta(&self, i: usize, delta: &SchubertIndex) -> bool {
        let k = self.cuts[i];
        delta.a(k) < self.gamma.a(k + 1)
    }
}

/// `ζ_0, ..., ζ_t` and `σ_1, ..., σ_t`.
pub fn face_indices(g: &SchubertIndex) -> Result<(Vec<SchubertIndex>, Vec<SchubertIndex>), SchubertError> {
    let d = block_decomposition(g)?;
    let zetas = (0..=d.t()).map(|i| d.zeta(i)).collect();
    let sigmas = (1..=d.t()).map(|i| d.sigma(i)).collect();
    Ok((zetas, sigmas))
}

/// For `κ - κ' = 1` the trace is `∩_{i ∈ I' ∪ I''} J(x; σ_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertTraceCertificate {
    pub gamma: SchubertIndex,
    pub kappa: Vec<i64>,
    pub index_sets: IndexSets,
    /// `(i, σ_i)` for `i ∈ I' ∪ I''`, ascending.
    pub sigmas: Vec<(usize, SchubertIndex)>,
}

/// CTR iff `κ - κ' ≤ 1`; Gorenstein iff `κ = κ'`.
pub fn schubert_verdict(g: &SchubertIndex) -> Verdict {
    let Ok(d) = block_decomposition(g) else {
        return Verdict { kind: VerdictKind::Gorenstein, basis: Basis::Proven, witness: Witness::PolynomialRing };
    };
    let gap = d.kappa_max() - d.kappa_min();
    let kappa = d.kappa.clone();
    let (kind, witness) = match gap {
        0 => (VerdictKind::Gorenstein, Witness::SchubertKappa { gamma: g.clone(), kappa }),
        1 => {
            let index_sets = d.index_sets();
            let mut ids: Vec<usize> = index_sets.i_prime.iter().chain(&index_sets.i_dprime).copied().collect();
            ids.sort_unstable();
            let sigmas = ids.into_iter().map(|i| (i, d.sigma(i))).collect();
            (
                VerdictKind::CtrNotGorenstein,
                Witness::SchubertTrace(SchubertTraceCertificate { gamma: g.clone(), kappa, index_sets, sigmas }),
            )
        }
        _ => (VerdictKind::NotCtr, Witness::SchubertPower { gamma: g.clone(), kappa, generator_degree: gap }),
    };
    Verdict { kind, basis: Basis::Proven, witness }
}

/// For `κ - κ' = 1` and `β ∈ Γ(m×n; γ) ∩ ∩_{i ∈ I' ∪ I''} Θ_i`, the pair
/// `ξ ∈ ∩_{I_1} Ω_i`, `ξ' ∈ ∩_{I_2} Ω_i` with `ξ ⊓ ξ' = γ` and `ξ ⊔ ξ' = β`.
pub fn witness_pair(g: &SchubertIndex, beta: &SchubertIndex) -> Result<(SchubertIndex, SchubertIndex), SchubertError> {
    if g.m != beta.m || g.n != beta.n {
        return Err(SchubertError::ShapeMismatch);
    }
    let d = block_decomposition(g)?;
    let gap = d.kappa_max() - d.kappa_min();
    if gap != 1 {
        return Err(SchubertError::KappaGap { gap });
    }
    if let Some(p) = (1..=g.m).find(|&j| beta.a(j) < g.a(j)) {
        return Err(SchubertError::NotAbove { position: p });
    }
    let sets = d.index_sets();
    let mut thetas: Vec<usize> = sets.i_prime.iter().chain(&sets.i_dprime).copied().collect();
    thetas.sort_unstable();
    if let Some(&i) = thetas.iter().find(|&&i| !d.in_theta(i, beta)) {
        return Err(SchubertError::NotInTheta { i });
    }
    // H_1 and H_2 are the positions of the blocks indexed by I_1 and I_2;
    // H_3 (positions of β_{t+1}) keeps `a_j` in both.
    let mut c = g.entries.clone();
    let mut c_prime = g.entries.clone();
    for i in 0..=d.t() {
        for j in d.k(i) + 1..=d.k(i + 1) {
            if sets.i1.contains(&i) {
                c_prime[j - 1] = beta.a(j);
            } else {
                c[j - 1] = beta.a(j);
            }
        }
    }
    Ok((SchubertIndex::new(g.m, g.n, c)?, SchubertIndex::new(g.m, g.n, c_prime)?))
}

/// `K[X]/I_t(X)` for a generic `m×n` matrix: the trace is
/// `I_{t-1}(X)^{n-m}`, a power of a prime.
pub fn determinantal_ctr(m: usize, n: usize, t: usize) -> Result<Verdict, SchubertError> {
    if !(2 <= t && t <= m && m <= n) {
        return Err(SchubertError::BadDeterminantal { m, n, t });
    }
    let kind = match n - m {
        0 => VerdictKind::Gorenstein,
        1 => VerdictKind::CtrNotGorenstein,
        _ => VerdictKind::NotCtr,
    };
    Ok(Verdict { kind, basis: Basis::Proven, witness: Witness::Determinantal { m, n, t, trace_exponent: n - m } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(m: usize, n: usize, e: &[usize]) -> SchubertIndex {
        SchubertIndex::new(m, n, e.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(SchubertIndex::new(2, 5, alloc::vec![3, 3]), Err(SchubertError::NotIncreasing { position: 2 }));
        assert_eq!(
            SchubertIndex::new(2, 5, alloc::vec![0, 3]),
            Err(SchubertError::OutOfRange { position: 1, value: 0 })
        );
        assert_eq!(SchubertIndex::new(2, 5, alloc::vec![1]), Err(SchubertError::WrongLength { expected: 2, found: 1 }));
        assert_eq!(SchubertIndex::new(3, 3, alloc::vec![1, 2, 3]), Err(SchubertError::BadShape { m: 3, n: 3 }));
    }

    #[test]
    fn running_example_decomposition() {
        let d = block_decomposition(&idx(3, 7, &[2, 3, 6])).unwrap();
        assert_eq!(d.blocks(), [alloc::vec![2, 3], alloc::vec![6], alloc::vec![]]);
        assert_eq!(d.gaps(), [alloc::vec![4, 5], alloc::vec![7]]);
        assert_eq!(d.cuts(), [0, 2, 3]);
        assert_eq!(d.kappa(), [5, 4]);
        assert_eq!(d.zeta(0), idx(3, 7, &[2, 4, 6]));
        assert_eq!(d.zeta(1), idx(3, 7, &[2, 3, 7]));
        assert_eq!(d.sigma(1), idx(3, 7, &[2, 6, 7]));
        assert!(d.in_omega(0, &idx(3, 7, &[2, 3, 7])));
        assert!(d.in_theta(1, &idx(3, 7, &[3, 4, 7])));
    }

    #[test]
    fn last_block_absorbs_column_n() {
        let d = block_decomposition(&idx(3, 7, &[2, 3, 7])).unwrap();
        assert_eq!(d.t(), 0);
        assert_eq!(d.blocks(), [alloc::vec![2, 3], alloc::vec![7]]);
        assert_eq!(d.gaps(), [alloc::vec![4, 5, 6]]);
        assert_eq!(d.kappa(), [5]);
    }

    #[test]
    fn degenerate_is_polynomial_ring() {
        let top = SchubertIndex::top(2, 5).unwrap();
        assert_eq!(block_decomposition(&top), Err(SchubertError::Degenerate));
        assert_eq!(schubert_verdict(&top).witness, Witness::PolynomialRing);
    }

    #[test]
    fn verdicts() {
        let v = schubert_verdict(&idx(3, 7, &[2, 3, 6]));
        assert_eq!(v.kind, VerdictKind::CtrNotGorenstein);
        let Witness::SchubertTrace(cert) = v.witness else { panic!() };
        assert_eq!(
            cert.index_sets,
            IndexSets { i1: alloc::vec![0], i2: alloc::vec![1], i_prime: alloc::vec![], i_dprime: alloc::vec![1] }
        );
        assert_eq!(cert.sigmas, [(1, idx(3, 7, &[2, 6, 7]))]);
        let v = schubert_verdict(&idx(2, 7, &[1, 5]));
        assert_eq!(v.kind, VerdictKind::NotCtr);
        assert_eq!(
            v.witness,
            Witness::SchubertPower { gamma: idx(2, 7, &[1, 5]), kappa: alloc::vec![6, 4], generator_degree: 2 }
        );
    }

    #[test]
    fn witness_pairs() {
        let g = idx(3, 7, &[2, 3, 6]);
        assert_eq!(witness_pair(&g, &idx(3, 7, &[3, 4, 7])).unwrap(), (idx(3, 7, &[2, 3, 7]), idx(3, 7, &[3, 4, 6])));
        assert_eq!(witness_pair(&g, &g).unwrap(), (g.clone(), g.clone()));
        let g = idx(2, 5, &[1, 4]);
        assert_eq!(witness_pair(&g, &idx(2, 5, &[2, 5])).unwrap(), (idx(2, 5, &[1, 5]), idx(2, 5, &[2, 4])));
        assert_eq!(witness_pair(&g, &idx(2, 5, &[4, 5])), Err(SchubertError::NotInTheta { i: 1 }));
        assert_eq!(witness_pair(&idx(2, 7, &[1, 5]), &idx(2, 7, &[1, 5])), Err(SchubertError::KappaGap { gap: 2 }));
    }

    #[test]
    fn join_meet_examples() {
        let (j, m) = join_meet(&idx(2, 5, &[1, 4]), &idx(2, 5, &[2, 3])).unwrap();
        assert_eq!((j, m), (idx(2, 5, &[2, 4]), idx(2, 5, &[1, 3])));
        assert_eq!(join_meet(&idx(2, 5, &[1, 4]), &idx(2, 6, &[1, 4])), Err(SchubertError::ShapeMismatch));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(SchubertIndex::all(3, 7).unwrap().len(), 35);
        assert_eq!(idx(3, 7, &[2, 3, 6]).upper_set().len(), 16);
    }

    #[test]
    fn determinantal() {
        assert_eq!(determinantal_ctr(3, 3, 2).unwrap().kind, VerdictKind::Gorenstein);
        assert_eq!(determinantal_ctr(2, 3, 2).unwrap().kind, VerdictKind::CtrNotGorenstein);
        assert_eq!(determinantal_ctr(2, 5, 2).unwrap().kind, VerdictKind::NotCtr);
        assert!(determinantal_ctr(2, 5, 3).is_err());
    }
}
