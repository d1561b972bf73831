use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

use super::system::{check_membership, ShiftedSystem};
use super::LatticeError;

/// Exponent vector of a Laurent monomial `T^ν` on `X ∪ {-∞}`.
///
/// `values` holds `ν(x)` for the ground elements and `degree` holds
/// `ν(-∞)`, which is the grading degree of the monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    values: BTreeMap<String, i64>,
    degree: i64,
}

impl LatticePoint {
    pub fn new(values: BTreeMap<String, i64>, degree: i64) -> Self {
        LatticePoint { values, degree }
    }

    pub fn from_pairs<I, K>(pairs: I, degree: i64) -> Self
    where
        I: IntoIterator<Item = (K, i64)>,
        K: Into<String>,
    {
        LatticePoint { values: pairs.into_iter().map(|(k, v)| (k.into(), v)).collect(), degree }
    }

    /// The point that is `value` on every id of `ground`.
    pub fn constant<S: AsRef<str>>(ground: &[S], value: i64, degree: i64) -> Self {
        Self::from_pairs(ground.iter().map(|id| (id.as_ref().to_string(), value)), degree)
    }

    pub fn values(&self) -> &BTreeMap<String, i64> {
        &self.values
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn get(&self, id: &str) -> Option<i64> {
        self.values.get(id).copied()
    }

    /// Sum of the values over `ids` (the `ν⁺(S)` of the constraint families).
    pub fn partial_sum<'a, I: IntoIterator<Item = &'a str>>(&self, ids: I) -> Option<i64> {
        ids.into_iter().map(|id| self.get(id)).sum()
    }

    pub fn checked_add(&self, other: &LatticePoint) -> Result<LatticePoint, LatticeError> {
        self.combine(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &LatticePoint) -> Result<LatticePoint, LatticeError> {
        self.combine(other, i64::checked_sub)
    }

    pub fn scaled(&self, k: i64) -> Result<LatticePoint, LatticeError> {
        let values = self
            .values
            .iter()
            .map(|(id, v)| v.checked_mul(k).map(|v| (id.clone(), v)).ok_or(LatticeError::Overflow))
            .collect::<Result<_, _>>()?;
        let degree = self.degree.checked_mul(k).ok_or(LatticeError::Overflow)?;
        Ok(LatticePoint { values, degree })
    }

    fn combine(&self, other: &LatticePoint, op: fn(i64, i64) -> Option<i64>) -> Result<LatticePoint, LatticeError> {
        if let Some(id) = other.values.keys().find(|id| !self.values.contains_key(*id)) {
            return Err(LatticeError::ExtraElement(id.clone()));
        }
        let mut values = BTreeMap::new();
        for (id, &a) in &self.values {
            let b = *other.values.get(id).ok_or_else(|| LatticeError::MissingElement(id.clone()))?;
            values.insert(id.clone(), op(a, b).ok_or(LatticeError::Overflow)?);
        }
        let degree = op(self.degree, other.degree).ok_or(LatticeError::Overflow)?;
        Ok(LatticePoint { values, degree })
    }
}

/// Certificate that `power·μ` lies in the trace: `eta ∈ S(1)`,
/// `zeta ∈ S(-1)` and `eta + zeta = power·μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecompositionWitness {
    pub eta: LatticePoint,
    pub zeta: LatticePoint,
    pub power: u32,
}

impl DecompositionWitness {
    /// Re-checks every claim of the certificate against `system`.
    pub fn validate(&self, system: &ShiftedSystem, mu: &LatticePoint) -> Result<bool, LatticeError> {
        if self.power == 0 {
            return Ok(false);
        }
        let target = mu.scaled(i64::from(self.power))?;
        Ok(check_membership(system, 1, &self.eta)?
            && check_membership(system, -1, &self.zeta)?
            && self.eta.checked_add(&self.zeta)? == target)
    }
}
