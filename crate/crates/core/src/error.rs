use thiserror::Error;

/// Everything that can go wrong when assembling or operating on lattices,
/// relations, and solver inputs.
///
/// Iteration-cap exhaustion is deliberately *not* here: a solver that runs out
/// of iterations still returns a report (with `IterationCapReached` status),
/// because non-termination is an expected outcome, not a usage error.
#[derive(Debug, Error)]
pub enum Error {
    /// A value string could not be parsed, or a parsed value is outside the
    /// carrier (for the unit-interval structures: outside [0, 1]).
    #[error("invalid lattice value: {0}")]
    InvalidValue(String),

    /// Finite-lattice tables failed validation (not a bounded distributive
    /// lattice, monoid laws broken, residuation violated, ...).
    #[error("invalid finite lattice: {0}")]
    InvalidLattice(String),

    /// Two operands live over different universes.
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),

    /// Two operands live over different lattices.
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),

    /// A universe was constructed with zero or duplicate node names.
    #[error("invalid universe: {0}")]
    InvalidUniverse(String),

    /// A node name is not part of the universe.
    #[error("unknown node: {0}")]
    UnknownNode(String),

    /// A matrix does not have the |U|x|U| shape the universe requires.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// An operation requiring a fuzzy preorder received something else.
    #[error("not a fuzzy preorder: {0}")]
    NotPreorder(String),

    /// An operation requiring a fuzzy equivalence received something else.
    #[error("not a fuzzy equivalence: {0}")]
    NotEquivalence(String),

    /// A solution-degree functional index outside 1..=9.
    #[error("invalid solution-degree kind {0} (expected 1..=9)")]
    InvalidKind(u8),

    /// Families with different index sets where matching ones are required.
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    /// Brute-force enumeration would exceed the configured budget.
    #[error(
        "enumeration budget exceeded: would enumerate {required} relations, budget is {budget}"
    )]
    BudgetExceeded { required: u128, budget: u128 },

    /// The join of all cut members failed the membership re-check. The cut of
    /// any solution-degree functional is closed under joins, so this can only
    /// mean an internal inconsistency; it is surfaced instead of papered over.
    #[error("internal inconsistency: join of cut members is not itself a member ({0})")]
    JoinNotMember(String),

    /// `greatest_cut_member` was asked to work under a preorder/equivalence
    /// restriction. No greatest restricted member needs to exist (the join of
    /// two preorders in a cut can fail to be a preorder), so the request is
    /// refused rather than answered wrongly.
    #[error("greatest member is only defined for unrestricted cuts: {0}")]
    RestrictionUnsupported(String),

    /// Malformed problem file or inconsistent CLI arguments.
    #[error("bad input: {0}")]
    BadInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
