//! Shifted lattice-point systems and the trace-membership search.
//!
//! A [`ShiftedSystem`] describes, for every integer shift `n`, a set `S(n)`
//! of integer vectors on `X ∪ {-∞}` cut out by three constraint families:
//!
//! * lower bounds `ν(x) ≥ n` on selected elements,
//! * cover constraints `ν(x) ≥ ν(y) + n`,
//! * sum constraints `ν⁺(S) + n ≤ c·ν(-∞)` with a positive rational `c`.
//!
//! `S(0)` is the monomial basis of the ring, `S(1)` of its canonical module
//! and `S(-1)` of the inverse module. The trace of the canonical module is
//! spanned by `S(1) + S(-1)`; [`decompose`] decides membership in it.

mod point;
mod propagate;
mod scan;
mod search;
mod system;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use point::{DecompositionWitness, LatticePoint};
pub use propagate::Interval;
pub use scan::{classify_member, first_nonradical_member, nonradical_members, MemberClass};
pub use search::{
    decompose, decompose_with, decomposition_bounds, enumerate_points, enumerate_points_with, min_feasible_degree,
    radical_power_search, radical_power_search_with, Engine, PropagationOutcome,
};
pub use system::{check_membership, first_violation, Coefficient, Coord, ShiftedSystem, SumConstraint};

/// Name used for the grading coordinate in messages and serialized output.
pub const DEGREE_NAME: &str = "-inf";

/// A constraint of a [`ShiftedSystem`] that a point fails at some shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `ν(element) ≥ n` fails.
    LowerBound { element: String },
    /// `ν(lower) ≥ ν(upper) + n` fails.
    Cover { lower: String, upper: String },
    /// `ν⁺(members) + n ≤ c·ν(-∞)` fails.
    Sum { members: Vec<String>, coefficient: Coefficient },
    /// The empty-ground convention `ν(-∞) ≥ 0` fails.
    NegativeDegree,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LowerBound { element } => write!(f, "lower bound on {element}"),
            Violation::Cover { lower, upper } => write!(f, "cover {lower} <. {upper}"),
            Violation::Sum { members, coefficient } => {
                write!(f, "sum over {{{}}} with coefficient {coefficient}", members.join(","))
            }
            Violation::NegativeDegree => f.write_str("non-negative degree"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// The point has no value for a ground element of the system.
    MissingElement(String),
    /// The point carries a value for an element outside the ground set.
    ExtraElement(String),
    /// Two ground elements share an id.
    DuplicateElement(String),
    /// A constraint refers to an index outside the ground set, or a
    /// coefficient is not positive.
    InvalidConstraint(String),
    /// A point required to lie in `S(shift)` does not.
    NotAMember { shift: i64, violated: Violation },
    /// Some coordinate has no finite bound, so the requested box is infinite.
    UnboundedEnumeration { coordinate: String },
    /// Bound propagation did not settle; the constraints are cyclic.
    Diverged,
    /// An intermediate value left the `i64` range.
    Overflow,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::MissingElement(id) => write!(f, "point has no value for element {id}"),
            LatticeError::ExtraElement(id) => write!(f, "point has a value for unknown element {id}"),
            LatticeError::DuplicateElement(id) => write!(f, "duplicate ground element {id}"),
            LatticeError::InvalidConstraint(msg) => write!(f, "invalid constraint: {msg}"),
            LatticeError::NotAMember { shift, violated } => {
                write!(f, "point is not in S({shift}): violates {violated}")
            }
            LatticeError::UnboundedEnumeration { coordinate } => {
                write!(f, "unbounded enumeration: no finite bound for {coordinate}")
            }
            LatticeError::Diverged => f.write_str("bound propagation diverged on cyclic constraints"),
            LatticeError::Overflow => f.write_str("integer overflow"),
        }
    }
}

impl core::error::Error for LatticeError {}
