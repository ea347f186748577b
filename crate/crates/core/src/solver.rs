//! The two iterative solvers.
//!
//! `solve_greatest` shrinks X₀ towards the *greatest* relation that solves
//! the system to degree at least x:
//!
//! ```text
//! X_{n+1} = X_n ∧ ⋀_i (x → R_i∘X_n) / R_i ∧ ⋀_i R_i \ (x → X_n∘R_i)
//! ```
//!
//! stopping on bit-exact equality of successive iterates (the WLS-1/WLS-2
//! variants keep only their own residual term). With x = 1 this is the exact
//! greatest-solution iteration; it need not terminate, which is why every run
//! carries an iteration cap and reports honestly when it hits it.
//!
//! `solve_preorder` / `solve_equivalence` iterate with self-residual maps that
//! keep every iterate a fuzzy preorder (resp. equivalence):
//!
//! ```text
//! F₁(X) = ⋀_i (R_i∘X) / (R_i∘X)      F₂(X) = ⋀_i (X∘R_i) \ (X∘R_i)      F₃ = F₁ ∧ F₂
//! ```
//!
//! They stop as soon as successive iterates are equal to degree at least x and
//! return the *earlier* iterate: X_n is in the x-cut exactly when
//! x ≤ (X_n ≈ X_{n+1}), so the stopping test itself is the certificate. The
//! result is *some* cut member — in general no greatest preorder member
//! exists, so nothing stronger can be promised.

use crate::degree::{sd, RelationFamily, SystemKind};
use crate::error::{Error, Result};
use crate::lattice::ResiduatedLattice;
use crate::relation::FuzzyRelation;

/// How a solver run ended.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveStatus {
    Converged,
    IterationCapReached,
}

/// Inputs shared by all solvers. `x0 = None` means the universal relation,
/// which is a preorder and an equivalence, so it is valid for every solver.
#[derive(Clone, Debug)]
pub struct SolverConfig<L: ResiduatedLattice> {
    /// The target degree x.
    pub degree: L::Value,
    pub kind: SystemKind,
    pub x0: Option<FuzzyRelation<L>>,
    pub max_iterations: usize,
    /// Keep all iterates in the report (they can be large).
    pub trace: bool,
}

impl<L: ResiduatedLattice> SolverConfig<L> {
    pub fn new(degree: L::Value) -> Self {
        SolverConfig {
            degree,
            kind: SystemKind::Wls3,
            x0: None,
            max_iterations: 1000,
            trace: false,
        }
    }

    pub fn kind(mut self, kind: SystemKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn x0(mut self, x0: FuzzyRelation<L>) -> Self {
        self.x0 = Some(x0);
        self
    }

    pub fn max_iterations(mut self, n: usize) -> Self {
        self.max_iterations = n;
        self
    }

    pub fn trace(mut self, trace: bool) -> Self {
        self.trace = trace;
        self
    }
}

/// Outcome of a solver run.
///
/// `iterations` counts update steps actually performed. `equality_degrees`
/// holds (X_n ≈ X_{n+1}) for each step. `trace` (when requested) holds X₀
/// through the last *computed* iterate — for the preorder/equivalence solvers
/// the returned relation is the second-to-last trace entry on convergence,
/// because the stopping rule certifies the earlier iterate.
#[derive(Clone, Debug)]
pub struct SolveReport<L: ResiduatedLattice> {
    pub status: SolveStatus,
    pub iterations: usize,
    pub relation: FuzzyRelation<L>,
    pub trace: Option<Vec<FuzzyRelation<L>>>,
    pub equality_degrees: Vec<L::Value>,
    /// sd(kind, S, relation) — an audit of what was actually achieved.
    pub solution_degree: L::Value,
}

fn prepare<L: ResiduatedLattice>(
    family: &RelationFamily<L>,
    config: &SolverConfig<L>,
) -> Result<FuzzyRelation<L>> {
    if config.max_iterations == 0 {
        return Err(Error::BadInput("max_iterations must be at least 1".into()));
    }
    let x0 = match &config.x0 {
        Some(x0) => x0.clone(),
        None => FuzzyRelation::universal(family.lattice().clone(), family.universe().clone()),
    };
    family.check_candidate(&x0)?;
    Ok(x0)
}

fn finish<L: ResiduatedLattice>(
    family: &RelationFamily<L>,
    kind: SystemKind,
    status: SolveStatus,
    iterations: usize,
    relation: FuzzyRelation<L>,
    trace: Option<Vec<FuzzyRelation<L>>>,
    equality_degrees: Vec<L::Value>,
) -> Result<SolveReport<L>> {
    let solution_degree = sd(kind.sd_kind(), family, &relation)?;
    Ok(SolveReport {
        status,
        iterations,
        relation,
        trace,
        equality_degrees,
        solution_degree,
    })
}

fn greatest_step<L: ResiduatedLattice>(
    family: &RelationFamily<L>,
    kind: SystemKind,
    x: &L::Value,
    current: &FuzzyRelation<L>,
) -> Result<FuzzyRelation<L>> {
    let mut next = current.clone();
    for r in family.members() {
        if matches!(kind, SystemKind::Wls1 | SystemKind::Wls3) {
            // greatest X with X∘R ≤ x → R∘X_n
            let bound = r.compose(current)?.scalar_to(x);
            next = next.meet(&bound.left_residual(r)?)?;
        }
        if matches!(kind, SystemKind::Wls2 | SystemKind::Wls3) {
            // greatest X with R∘X ≤ x → X_n∘R
            let bound = current.compose(r)?.scalar_to(x);
            next = next.meet(&r.right_residual(&bound)?)?;
        }
    }
    Ok(next)
}

/// Compute the greatest relation X ≤ X₀ with x ≤ sd(kind, S, X).
///
/// The iteration is non-increasing and stops on bit-exact equality of
/// successive iterates; when it converges the fixed point is the greatest
/// element of the cut. An empty family returns X₀ immediately.
pub fn solve_greatest<L: ResiduatedLattice>(
    family: &RelationFamily<L>,
    config: &SolverConfig<L>,
) -> Result<SolveReport<L>> {
    let x0 = prepare(family, config)?;
    let mut trace = config.trace.then(|| vec![x0.clone()]);
    if family.is_empty() {
        return finish(
            family,
            config.kind,
            SolveStatus::Converged,
            0,
            x0,
            trace,
            Vec::new(),
        );
    }
    let mut current = x0;
    let mut degrees = Vec::new();
    for step in 1..=config.max_iterations {
        let next = greatest_step(family, config.kind, &config.degree, &current)?;
        debug_assert!(
            next.leq(&current).expect("same universe"),
            "iterates must shrink"
        );
        degrees.push(current.equality_degree(&next)?);
        if let Some(t) = &mut trace {
            t.push(next.clone());
        }
        if next == current {
            return finish(
                family,
                config.kind,
                SolveStatus::Converged,
                step,
                next,
                trace,
                degrees,
            );
        }
        current = next;
    }
    finish(
        family,
        config.kind,
        SolveStatus::IterationCapReached,
        config.max_iterations,
        current,
        trace,
        degrees,
    )
}

fn closed_step<L: ResiduatedLattice>(
    family: &RelationFamily<L>,
    kind: SystemKind,
    current: &FuzzyRelation<L>,
    equivalence: bool,
) -> Result<FuzzyRelation<L>> {
    let mut next = current.clone();
    for r in family.members() {
        if matches!(kind, SystemKind::Wls1 | SystemKind::Wls3) {
            let rx = r.compose(current)?;
            let term = if equivalence {
                rx.double_left_residual(&rx)?
            } else {
                rx.left_residual(&rx)?
            };
            next = next.meet(&term)?;
        }
        if matches!(kind, SystemKind::Wls2 | SystemKind::Wls3) {
            let xr = current.compose(r)?;
            let term = if equivalence {
                xr.double_right_residual(&xr)?
            } else {
                xr.right_residual(&xr)?
            };
            next = next.meet(&term)?;
        }
    }
    Ok(next)
}

fn solve_closed<L: ResiduatedLattice>(
    family: &RelationFamily<L>,
    config: &SolverConfig<L>,
    equivalence: bool,
) -> Result<SolveReport<L>> {
    let x0 = prepare(family, config)?;
    if equivalence {
        if !x0.is_equivalence() {
            return Err(Error::NotEquivalence(
                "X₀ must be a fuzzy equivalence".into(),
            ));
        }
    } else if !x0.is_preorder() {
        return Err(Error::NotPreorder("X₀ must be a fuzzy preorder".into()));
    }
    let lattice = family.lattice().clone();
    let mut trace = config.trace.then(|| vec![x0.clone()]);
    if family.is_empty() {
        return finish(
            family,
            config.kind,
            SolveStatus::Converged,
            0,
            x0,
            trace,
            Vec::new(),
        );
    }
    let mut current = x0;
    let mut degrees = Vec::new();
    for step in 1..=config.max_iterations {
        let next = closed_step(family, config.kind, &current, equivalence)?;
        debug_assert!(
            next.leq(&current).expect("same universe"),
            "iterates must shrink"
        );
        debug_assert!(
            if equivalence {
                next.is_equivalence()
            } else {
                next.is_preorder()
            },
            "iterates must stay closed"
        );
        let d = current.equality_degree(&next)?;
        degrees.push(d.clone());
        if let Some(t) = &mut trace {
            t.push(next.clone());
        }
        if lattice.leq(&config.degree, &d) {
            // x ≤ (X_n ≈ X_{n+1}) certifies the earlier iterate's membership.
            return finish(
                family,
                config.kind,
                SolveStatus::Converged,
                step,
                current,
                trace,
                degrees,
            );
        }
        current = next;
    }
    finish(
        family,
        config.kind,
        SolveStatus::IterationCapReached,
        config.max_iterations,
        current,
        trace,
        degrees,
    )
}

/// Compute a fuzzy *preorder* in the x-cut bounded by X₀ (which must itself
/// be a preorder; the default universal relation is one).
///
/// The result is certified to be in the cut on convergence, but is not in
/// general maximal — no greatest preorder member needs to exist.
pub fn solve_preorder<L: ResiduatedLattice>(
    family: &RelationFamily<L>,
    config: &SolverConfig<L>,
) -> Result<SolveReport<L>> {
    solve_closed(family, config, false)
}

/// Compute a fuzzy *equivalence* in the x-cut bounded by X₀ (which must be a
/// fuzzy equivalence); the double residuals keep every iterate symmetric.
pub fn solve_equivalence<L: ResiduatedLattice>(
    family: &RelationFamily<L>,
    config: &SolverConfig<L>,
) -> Result<SolveReport<L>> {
    solve_closed(family, config, true)
}
