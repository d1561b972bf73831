//! Decision engine for the canonical-trace-radical (CTR) property of three
//! families of normal graded rings, worked entirely at the level of their
//! combinatorial models:
//!
//! * Hibi rings, via lattice points of shifted order-polytope cones
//!   ([`poset`], [`hibi`]);
//! * Ehrhart rings of stable set polytopes of odd cycles and perfect graphs,
//!   via clique and odd-cycle inequalities ([`cycle`], [`perfect`]);
//! * Schubert cycles, via the block/gap structure of a Schubert index
//!   ([`schubert`]).
//!
//! The graded canonical module of these rings and all its divisorial powers
//! are spanned by the lattice points of a [`ShiftedSystem`] at shift `n`.
//! The trace of the canonical module is spanned by sums `eta + zeta` with
//! `eta` at shift `+1` and `zeta` at shift `-1`, so ring questions become
//! integer feasibility questions answered by [`lattice`].
//!
//! Every verdict carries a [`Witness`] that can be re-checked independently.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cycle;
pub mod exec;
pub mod hibi;
pub mod lattice;
pub mod perfect;
pub mod poset;
pub mod schubert;
pub mod verdict;

pub use exec::{Executor, Sequential};
pub use lattice::{
    check_membership, decompose, enumerate_points, min_feasible_degree, radical_power_search, Coefficient, Coord,
    DecompositionWitness, Engine, LatticeError, LatticePoint, ShiftedSystem,
};
pub use poset::{Poset, PosetError};
pub use verdict::{Basis, ScanBounds, Verdict, VerdictKind, Witness};
