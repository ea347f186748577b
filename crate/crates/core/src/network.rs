//! Aggregation of fuzzy networks.
//!
//! A fuzzy network is a universe of nodes carrying a family of fuzzy
//! relations. Aggregation shrinks it: solve for a fuzzy preorder (or
//! equivalence) X that relates the network's relations to themselves to
//! degree at least x, merge the nodes its natural equivalence identifies
//! fully (degree 1), and transfer each relation R to the factor universe as
//!
//! ```text
//! Ř(B_u, B_v) = (X∘R∘X)(u, v)
//! ```
//!
//! which is independent of the representatives chosen, because nodes in one
//! block have identical X-rows and X-columns.

use crate::degree::RelationFamily;
use crate::error::{Error, Result};
use crate::lattice::ResiduatedLattice;
use crate::relation::{FuzzyRelation, Universe};
use crate::solver::{solve_equivalence, solve_preorder, SolveReport, SolveStatus, SolverConfig};
use std::collections::HashMap;
use std::sync::Arc;

/// A universe of nodes with a family of named fuzzy relations on it.
#[derive(Clone, Debug)]
pub struct FuzzyNetwork<L: ResiduatedLattice> {
    names: Vec<String>,
    family: RelationFamily<L>,
}

impl<L: ResiduatedLattice> FuzzyNetwork<L> {
    /// Wrap a family with default relation names R1, R2, ...
    pub fn new(family: RelationFamily<L>) -> Self {
        let names = (1..=family.len()).map(|i| format!("R{i}")).collect();
        FuzzyNetwork { names, family }
    }

    /// Wrap a family with explicit relation names, one per member.
    pub fn named(names: Vec<String>, family: RelationFamily<L>) -> Result<Self> {
        if names.len() != family.len() {
            return Err(Error::FamilyMismatch(format!(
                "{} names for {} relations",
                names.len(),
                family.len()
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in &names {
            if !seen.insert(name) {
                return Err(Error::BadInput(format!("duplicate relation name {name:?}")));
            }
        }
        Ok(FuzzyNetwork { names, family })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn family(&self) -> &RelationFamily<L> {
        &self.family
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.family.universe()
    }

    /// Factor the network by a fuzzy preorder X on its universe.
    ///
    /// Nodes u, v are merged when X's natural equivalence X ∧ X⁻¹ relates
    /// them to degree 1 — equivalently, when their X-rows are equal. Blocks
    /// keep the order in which their first member appears.
    pub fn factor(&self, x: &FuzzyRelation<L>) -> Result<FactorNetwork<L>> {
        self.family.check_candidate(x)?;
        if !x.is_preorder() {
            return Err(Error::NotPreorder(
                "factoring needs a fuzzy preorder on the network's universe".into(),
            ));
        }
        let lattice = self.family.lattice().clone();
        let universe = self.family.universe();
        let n = universe.size();
        let equivalence = x.natural_equivalence()?;

        // For a preorder, degree-1 equivalence is exactly row equality.
        let mut block_of = vec![0usize; n];
        let mut reps: Vec<usize> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut by_row: HashMap<&[L::Value], usize> = HashMap::new();
        for u in 0..n {
            match by_row.get(x.row(u)) {
                Some(&b) => {
                    block_of[u] = b;
                    members[b].push(u);
                }
                None => {
                    let b = reps.len();
                    by_row.insert(x.row(u), b);
                    block_of[u] = b;
                    reps.push(u);
                    members.push(vec![u]);
                }
            }
            debug_assert!(
                *equivalence.get(u, reps[block_of[u]]) == lattice.top(),
                "row grouping must agree with the natural equivalence"
            );
        }

        let blocks: Vec<Vec<String>> = members
            .iter()
            .map(|ms| {
                let mut names: Vec<String> =
                    ms.iter().map(|&u| universe.name(u).to_string()).collect();
                names.sort();
                names
            })
            .collect();
        let quotient = Arc::new(Universe::new(blocks.iter().map(|b| b.join("+")))?);

        let mut factored = Vec::with_capacity(self.family.len());
        for r in self.family.members() {
            let m = x.compose(&r.compose(x)?)?;
            debug_assert!(
                (0..n)
                    .all(|u| (0..n)
                        .all(|v| m.get(u, v) == m.get(reps[block_of[u]], reps[block_of[v]]))),
                "factored values must not depend on the representative"
            );
            let rows = reps
                .iter()
                .map(|&u| reps.iter().map(|&v| m.get(u, v).clone()).collect())
                .collect();
            factored.push(FuzzyRelation::new(lattice.clone(), quotient.clone(), rows)?);
        }
        let family = if factored.is_empty() {
            RelationFamily::empty(lattice, quotient)
        } else {
            RelationFamily::from_members(factored)?
        };
        Ok(FactorNetwork {
            blocks,
            names: self.names.clone(),
            family,
            preorder: x.clone(),
            equivalence,
        })
    }
}

/// The aggregated network: merged nodes and the transferred relations.
#[derive(Clone, Debug)]
pub struct FactorNetwork<L: ResiduatedLattice> {
    /// Original node names per block, sorted inside each block; blocks are
    /// ordered by first occurrence in the original universe.
    pub blocks: Vec<Vec<String>>,
    /// Relation names, parallel to the factored family's members.
    pub names: Vec<String>,
    /// The factored relations on the quotient universe (block names are the
    /// sorted members joined with `+`).
    pub family: RelationFamily<L>,
    /// The fuzzy preorder the factoring used, on the original universe.
    pub preorder: FuzzyRelation<L>,
    /// Its natural equivalence X ∧ X⁻¹, on the original universe.
    pub equivalence: FuzzyRelation<L>,
}

impl<L: ResiduatedLattice> FactorNetwork<L> {
    pub fn universe(&self) -> &Arc<Universe> {
        self.family.universe()
    }

    /// Index of the block containing an original node.
    pub fn block_of(&self, node: &str) -> Option<usize> {
        self.blocks.iter().position(|b| b.iter().any(|m| m == node))
    }
}

/// Which kind of relation the aggregation solves for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AggregationMethod {
    Preorder,
    Equivalence,
}

/// A solver run plus the factor network it produced. `factor` is `None`
/// when the run hit its iteration cap — an uncertified iterate is not a
/// licence to merge nodes.
#[derive(Clone, Debug)]
pub struct Aggregation<L: ResiduatedLattice> {
    pub method: AggregationMethod,
    pub report: SolveReport<L>,
    pub factor: Option<FactorNetwork<L>>,
}

/// Solve for an aggregating preorder or equivalence and factor the network
/// by it. The solver's X₀ defaults to the universal relation; an explicit
/// bound in the config is passed through unchanged.
pub fn aggregate<L: ResiduatedLattice>(
    network: &FuzzyNetwork<L>,
    method: AggregationMethod,
    config: &SolverConfig<L>,
) -> Result<Aggregation<L>> {
    let report = match method {
        AggregationMethod::Preorder => solve_preorder(network.family(), config)?,
        AggregationMethod::Equivalence => solve_equivalence(network.family(), config)?,
    };
    let factor = match report.status {
        SolveStatus::Converged => Some(network.factor(&report.relation)?),
        SolveStatus::IterationCapReached => None,
    };
    Ok(Aggregation {
        method,
        report,
        factor,
    })
}
