//! Exact solver for weakly linear systems of fuzzy relation inequalities
//! over complete residuated lattices.
//!
//! A system is a finite family of relations {R_i} on one universe, read as
//! the inequalities R_i∘X ≤ X∘R_i (and/or their mirror images) for an
//! unknown fuzzy relation X. Instead of demanding exact solutions, every
//! relation X is graded by the *degree* to which it solves the system — an
//! element of the lattice — and the solvers look for relations whose degree
//! reaches a prescribed threshold x:
//!
//! - [`solver::solve_greatest`] computes the greatest X below a bound X₀
//!   that solves the system to degree at least x;
//! - [`solver::solve_preorder`] / [`solver::solve_equivalence`] compute a
//!   fuzzy preorder / fuzzy equivalence doing the same (such a greatest one
//!   need not exist, so the result is a certified cut member);
//! - [`network::aggregate`] uses the latter to shrink a fuzzy network to
//!   its factor network, merging nodes the solution cannot tell apart.
//!
//! All arithmetic is exact: values are rationals (or elements of an
//! explicit finite lattice), results are bit-for-bit reproducible, and a
//! brute-force [`oracle`] can re-derive every answer on small instances.
//! The `wls` binary exposes the same operations over a JSON problem format;
//! see [`cli`] for the schema and the runnable examples directory for the
//! library API.

pub mod cli;
pub mod degree;
pub mod error;
pub mod lattice;
pub mod network;
pub mod oracle;
pub mod relation;
pub mod solver;

pub use degree::{family_equality_degree, in_cut, sd, RelationFamily, SystemKind};
pub use error::{Error, Result};
pub use lattice::{
    godel, lukasiewicz, product, FinElem, FiniteLattice, ResiduatedLattice, UnitStructure,
    UnitValue,
};
pub use network::{aggregate, Aggregation, AggregationMethod, FactorNetwork, FuzzyNetwork};
pub use relation::{FuzzyRelation, FuzzySet, Universe};
pub use solver::{
    solve_equivalence, solve_greatest, solve_preorder, SolveReport, SolveStatus, SolverConfig,
};
