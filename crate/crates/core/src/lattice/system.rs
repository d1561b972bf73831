use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::point::LatticePoint;
use super::{LatticeError, Violation, DEGREE_NAME};

/// A coordinate of `X ∪ {-∞}`: either the grading coordinate or a ground
/// element by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    Degree,
    Element(usize),
}

/// Positive rational `num/den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Coefficient {
    num: i64,
    den: i64,
}

impl Coefficient {
    pub const ONE: Coefficient = Coefficient { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Option<Coefficient> {
        if num <= 0 || den <= 0 {
            return None;
        }
        let g = gcd(num, den);
        Some(Coefficient { num: num / g, den: den / g })
    }

    pub fn integer(value: i64) -> Option<Coefficient> {
        Self::new(value, 1)
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// `ν⁺(members) + n ≤ coefficient · ν(-∞)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SumConstraint {
    pub members: Vec<usize>,
    pub coefficient: Coefficient,
}

/// A family of lattice-point sets `S(n)`, one per shift `n ∈ ℤ`.
///
/// Membership of `ν` in `S(n)`:
///
/// * `ν(x) ≥ n` for every `x` in `lower_bound_targets`;
/// * `ν(x) ≥ ν(y) + n` for every `(x, y)` in `cover_constraints`, where
///   either side may be the grading coordinate;
/// * `ν⁺(S) + n ≤ c·ν(-∞)` for every sum constraint `(S, c)`;
/// * with an empty ground set, `ν(-∞) ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSystem {
    ground: Vec<String>,
    index: BTreeMap<String, usize>,
    lower_bound_targets: Vec<usize>,
    cover_constraints: Vec<(Coord, Coord)>,
    sum_constraints: Vec<SumConstraint>,
}

/// One constraint in the normal form `Σ a_i·v_i + n·weight ≤ 0`.
///
/// Variable `0` is the degree, variable `i + 1` is ground element `i`.
#[derive(Clone, Debug)]
pub(crate) struct Form {
    pub terms: Vec<(usize, i64)>,
    pub weight: i64,
}

impl Form {
    pub fn eval(&self, dense: &[i64]) -> i128 {
        self.terms.iter().map(|&(v, a)| i128::from(a) * i128::from(dense[v])).sum()
    }
}

pub(crate) fn var_of(coord: Coord) -> usize {
    match coord {
        Coord::Degree => 0,
        Coord::Element(i) => i + 1,
    }
}

impl ShiftedSystem {
    pub fn new<I, S>(ground: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let ground: Vec<String> = ground.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, id) in ground.iter().enumerate() {
            if id == DEGREE_NAME || index.insert(id.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement(id.clone()));
            }
        }
        Ok(ShiftedSystem {
            ground,
            index,
            lower_bound_targets: Vec::new(),
            cover_constraints: Vec::new(),
            sum_constraints: Vec::new(),
        })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn lower_bound_targets(&self) -> &[usize] {
        &self.lower_bound_targets
    }

    pub fn cover_constraints(&self) -> &[(Coord, Coord)] {
        &self.cover_constraints
    }

    pub fn sum_constraints(&self) -> &[SumConstraint] {
        &self.sum_constraints
    }

    pub fn add_lower_bound(&mut self, element: usize) -> Result<(), LatticeError> {
        self.check_index(element)?;
        self.lower_bound_targets.push(element);
        Ok(())
    }

    /// Adds `ν(lower) ≥ ν(upper) + n`.
    pub fn add_cover(&mut self, lower: Coord, upper: Coord) -> Result<(), LatticeError> {
        for c in [lower, upper] {
            if let Coord::Element(i) = c {
                self.check_index(i)?;
            }
        }
        if lower == upper {
            return Err(LatticeError::InvalidConstraint(format!("cover of {} by itself", self.name(lower))));
        }
        self.cover_constraints.push((lower, upper));
        Ok(())
    }

    pub fn add_sum(&mut self, members: Vec<usize>, coefficient: Coefficient) -> Result<(), LatticeError> {
        for &i in &members {
            self.check_index(i)?;
        }
        self.sum_constraints.push(SumConstraint { members, coefficient });
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<(), LatticeError> {
        if i < self.ground.len() {
            Ok(())
        } else {
            Err(LatticeError::InvalidConstraint(format!(
                "element index {i} outside ground of size {}",
                self.ground.len()
            )))
        }
    }

    pub fn name(&self, coord: Coord) -> &str {
        match coord {
            Coord::Degree => DEGREE_NAME,
            Coord::Element(i) => &self.ground[i],
        }
    }

    /// Number of dense variables (ground plus degree).
    pub(crate) fn num_vars(&self) -> usize {
        self.ground.len() + 1
    }

    /// All constraints in normal form, in the order: lower bounds, covers,
    /// sums, then the empty-ground convention.
    pub(crate) fn forms(&self) -> Vec<Form> {
        let mut forms = Vec::new();
        for &x in &self.lower_bound_targets {
            forms.push(Form { terms: vec![(x + 1, -1)], weight: 1 });
        }
        for &(lower, upper) in &self.cover_constraints {
            forms.push(Form { terms: vec![(var_of(lower), -1), (var_of(upper), 1)], weight: 1 });
        }
        for s in &self.sum_constraints {
            let q = s.coefficient.den;
            let mut terms: Vec<(usize, i64)> = Vec::with_capacity(s.members.len() + 1);
            for &m in &s.members {
                match terms.iter_mut().find(|(v, _)| *v == m + 1) {
                    Some(t) => t.1 += q,
                    None => terms.push((m + 1, q)),
                }
            }
            terms.push((0, -s.coefficient.num));
            forms.push(Form { terms, weight: q });
        }
        if self.ground.is_empty() {
            forms.push(Form { terms: vec![(0, -1)], weight: 0 });
        }
        forms
    }

    /// Describes the `k`-th form of [`Self::forms`].
    pub(crate) fn violation(&self, k: usize) -> Violation {
        let nl = self.lower_bound_targets.len();
        let nc = self.cover_constraints.len();
        let ns = self.sum_constraints.len();
        if k < nl {
            Violation::LowerBound { element: self.ground[self.lower_bound_targets[k]].clone() }
        } else if k < nl + nc {
            let (lower, upper) = self.cover_constraints[k - nl];
            Violation::Cover { lower: self.name(lower).to_string(), upper: self.name(upper).to_string() }
        } else if k < nl + nc + ns {
            let s = &self.sum_constraints[k - nl - nc];
            Violation::Sum {
                members: s.members.iter().map(|&m| self.ground[m].clone()).collect(),
                coefficient: s.coefficient,
            }
        } else {
            Violation::NegativeDegree
        }
    }

    /// Dense vector `[degree, ν(x_0), ν(x_1), ...]` of a point, checking
    /// that its domain is exactly the ground set.
    pub(crate) fn dense(&self, point: &LatticePoint) -> Result<Vec<i64>, LatticeError> {
        if let Some(extra) = point.values().keys().find(|id| !self.index.contains_key(*id)) {
            return Err(LatticeError::ExtraElement(extra.clone()));
        }
        let mut out = Vec::with_capacity(self.num_vars());
        out.push(point.degree());
        for id in &self.ground {
            out.push(point.get(id).ok_or_else(|| LatticeError::MissingElement(id.clone()))?);
        }
        Ok(out)
    }

    pub(crate) fn sparse(&self, dense: &[i64]) -> LatticePoint {
        LatticePoint::from_pairs(self.ground.iter().cloned().zip(dense[1..].iter().copied()), dense[0])
    }

    /// The point with every coordinate zero, including the degree.
    pub fn origin(&self) -> LatticePoint {
        LatticePoint::constant(&self.ground, 0, 0)
    }
}

pub(crate) fn first_violated_form(forms: &[Form], shift: i64, dense: &[i64]) -> Option<usize> {
    forms.iter().position(|f| f.eval(dense) + i128::from(shift) * i128::from(f.weight) > 0)
}

/// Whether `point ∈ S(shift)`. Rational coefficients are compared after
/// clearing denominators, so the test is exact.
pub fn check_membership(system: &ShiftedSystem, shift: i64, point: &LatticePoint) -> Result<bool, LatticeError> {
    Ok(first_violation(system, shift, point)?.is_none())
}

/// The first constraint of `S(shift)` that `point` violates, if any.
pub fn first_violation(
    system: &ShiftedSystem,
    shift: i64,
    point: &LatticePoint,
) -> Result<Option<Violation>, LatticeError> {
    let dense = system.dense(point)?;
    Ok(first_violated_form(&system.forms(), shift, &dense).map(|k| system.violation(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seven_cycle() -> ShiftedSystem {
        let ids: Vec<String> = (0..7).map(|i| format!("v{i}")).collect();
        let mut s = ShiftedSystem::new(ids).unwrap();
        for i in 0..7 {
            s.add_lower_bound(i).unwrap();
            s.add_sum(vec![i, (i + 1) % 7], Coefficient::ONE).unwrap();
        }
        s.add_sum((0..7).collect(), Coefficient::integer(3).unwrap()).unwrap();
        s
    }

    #[test]
    fn empty_stable_set_is_a_ring_monomial() {
        let s = seven_cycle();
        let p = LatticePoint::constant(s.ground(), 0, 1);
        assert!(check_membership(&s, 0, &p).unwrap());
    }

    #[test]
    fn single_element_poset_needs_degree_two_at_shift_one() {
        let mut s = ShiftedSystem::new(["x"]).unwrap();
        s.add_lower_bound(0).unwrap();
        s.add_cover(Coord::Degree, Coord::Element(0)).unwrap();
        let p = LatticePoint::from_pairs([("x", 1)], 1);
        assert!(!check_membership(&s, 1, &p).unwrap());
        assert_eq!(
            first_violation(&s, 1, &p).unwrap(),
            Some(Violation::Cover { lower: "-inf".into(), upper: "x".into() })
        );
        let q = LatticePoint::from_pairs([("x", 1)], 2);
        assert!(check_membership(&s, 1, &q).unwrap());
    }

    #[test]
    fn rational_coefficients_are_exact() {
        // ν⁺(S) + n ≤ (3/2)·ν(-∞) at the boundary.
        let mut s = ShiftedSystem::new(["a", "b"]).unwrap();
        s.add_sum(vec![0, 1], Coefficient::new(3, 2).unwrap()).unwrap();
        let on = LatticePoint::from_pairs([("a", 1), ("b", 1)], 2); // 2 + 1 ≤ 3
        let off = LatticePoint::from_pairs([("a", 2), ("b", 1)], 2); // 3 + 1 > 3
        assert!(check_membership(&s, 1, &on).unwrap());
        assert!(!check_membership(&s, 1, &off).unwrap());
    }

    #[test]
    fn domain_mismatch_names_the_element() {
        let s = seven_cycle();
        let mut missing = LatticePoint::constant(&s.ground()[..6], 0, 1);
        assert_eq!(check_membership(&s, 0, &missing), Err(LatticeError::MissingElement("v6".into())));
        missing = LatticePoint::constant(&["v0", "v1", "v2", "v3", "v4", "v5", "v6", "w"], 0, 1);
        assert_eq!(check_membership(&s, 0, &missing), Err(LatticeError::ExtraElement("w".into())));
    }

    #[test]
    fn coefficients_are_reduced_and_positive() {
        assert_eq!(Coefficient::new(6, 4), Coefficient::new(3, 2));
        assert!(Coefficient::new(0, 1).is_none());
        assert!(Coefficient::new(1, -2).is_none());
    }

    #[test]
    fn empty_ground_keeps_degree_non_negative() {
        let s = ShiftedSystem::new(Vec::<String>::new()).unwrap();
        assert!(check_membership(&s, 5, &LatticePoint::constant::<&str>(&[], 0, 0)).unwrap());
        assert!(!check_membership(&s, -5, &LatticePoint::constant::<&str>(&[], 0, -1)).unwrap());
    }
}
