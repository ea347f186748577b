//! Solution degrees: how well a relation X solves a weakly linear system.
//!
//! For a family S = {R_i} the three systems are
//!
//! ```text
//! kind 1:  X ∘ R_i ≤ R_i ∘ X      kind 2:  R_i ∘ X ≤ X ∘ R_i      kind 3: both
//! ```
//!
//! `sd(k, ...)` with k in 1..=3 measures these directly; k in 4..=6 measures
//! the same systems through X∘R∘X comparisons, and k in 7..=9 through
//! self-residuals. On fuzzy preorders all three triples carve out the same
//! cuts, which is what makes the preorder solver's stopping rule sound.

use crate::error::{Error, Result};
use crate::lattice::ResiduatedLattice;
use crate::relation::{FuzzyRelation, Universe};
use std::sync::Arc;

/// An indexed family {R_i} sharing one universe and lattice. May be empty —
/// degrees over an empty family are 1 (empty meet).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationFamily<L: ResiduatedLattice> {
    lattice: Arc<L>,
    universe: Arc<Universe>,
    members: Vec<FuzzyRelation<L>>,
}

impl<L: ResiduatedLattice> RelationFamily<L> {
    pub fn new(
        lattice: impl Into<Arc<L>>,
        universe: impl Into<Arc<Universe>>,
        members: Vec<FuzzyRelation<L>>,
    ) -> Result<Self> {
        let lattice = lattice.into();
        let universe = universe.into();
        for r in &members {
            if r.universe().names() != universe.names() {
                return Err(Error::UniverseMismatch(
                    "family member over a different universe".into(),
                ));
            }
            if **r.lattice() != *lattice {
                return Err(Error::LatticeMismatch(
                    "family member over a different lattice".into(),
                ));
            }
        }
        Ok(RelationFamily {
            lattice,
            universe,
            members,
        })
    }

    /// Infer lattice and universe from the members; requires at least one.
    pub fn from_members(members: Vec<FuzzyRelation<L>>) -> Result<Self> {
        let first = members.first().ok_or_else(|| {
            Error::FamilyMismatch("cannot infer universe/lattice from an empty family".into())
        })?;
        let lattice = first.lattice().clone();
        let universe = first.universe().clone();
        Self::new(lattice, universe, members)
    }

    pub fn single(r: FuzzyRelation<L>) -> Self {
        Self::from_members(vec![r]).expect("one member is always consistent with itself")
    }

    pub fn empty(lattice: impl Into<Arc<L>>, universe: impl Into<Arc<Universe>>) -> Self {
        RelationFamily {
            lattice: lattice.into(),
            universe: universe.into(),
            members: Vec::new(),
        }
    }

    pub fn lattice(&self) -> &Arc<L> {
        &self.lattice
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn members(&self) -> &[FuzzyRelation<L>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Check that a candidate X lives over this family's universe and lattice.
    pub fn check_candidate(&self, x: &FuzzyRelation<L>) -> Result<()> {
        if x.universe().names() != self.universe.names() {
            return Err(Error::UniverseMismatch(
                "candidate relation over a different universe".into(),
            ));
        }
        if **x.lattice() != *self.lattice {
            return Err(Error::LatticeMismatch(
                "candidate relation over a different lattice".into(),
            ));
        }
        Ok(())
    }
}

/// Which weakly linear system is being solved.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SystemKind {
    /// X ∘ R_i ≤ R_i ∘ X
    Wls1,
    /// R_i ∘ X ≤ X ∘ R_i
    Wls2,
    /// X ∘ R_i = R_i ∘ X
    Wls3,
}

impl SystemKind {
    /// The matching solution-degree functional index (1, 2 or 3).
    pub fn sd_kind(self) -> u8 {
        match self {
            SystemKind::Wls1 => 1,
            SystemKind::Wls2 => 2,
            SystemKind::Wls3 => 3,
        }
    }
}

fn sd_member<L: ResiduatedLattice>(
    kind: u8,
    r: &FuzzyRelation<L>,
    x: &FuzzyRelation<L>,
) -> Result<L::Value> {
    let l = x.lattice().clone();
    let meet = |a: L::Value, b: L::Value| l.meet(&a, &b);
    Ok(match kind {
        1 => x.compose(r)?.inclusion_degree(&r.compose(x)?)?,
        2 => r.compose(x)?.inclusion_degree(&x.compose(r)?)?,
        3 => meet(sd_member(1, r, x)?, sd_member(2, r, x)?),
        4 => {
            let xrx = x.compose(r)?.compose(x)?;
            xrx.equality_degree(&r.compose(x)?)?
        }
        5 => {
            let xrx = x.compose(r)?.compose(x)?;
            xrx.equality_degree(&x.compose(r)?)?
        }
        6 => meet(sd_member(4, r, x)?, sd_member(5, r, x)?),
        7 => {
            let rx = r.compose(x)?;
            x.inclusion_degree(&rx.left_residual(&rx)?)?
        }
        8 => {
            let xr = x.compose(r)?;
            x.inclusion_degree(&xr.right_residual(&xr)?)?
        }
        9 => meet(sd_member(7, r, x)?, sd_member(8, r, x)?),
        _ => return Err(Error::InvalidKind(kind)),
    })
}

/// The degree to which X solves the system of kind `kind` (1..=9) for every
/// member of the family; 1 for an empty family.
pub fn sd<L: ResiduatedLattice>(
    kind: u8,
    family: &RelationFamily<L>,
    x: &FuzzyRelation<L>,
) -> Result<L::Value> {
    if !(1..=9).contains(&kind) {
        return Err(Error::InvalidKind(kind));
    }
    family.check_candidate(x)?;
    let l = family.lattice();
    let mut acc = l.top();
    for r in family.members() {
        acc = l.meet(&acc, &sd_member(kind, r, x)?);
    }
    Ok(acc)
}

/// Membership in the x-cut bounded by X₀: X ≤ X₀ and x ≤ sd(kind, S, X).
pub fn in_cut<L: ResiduatedLattice>(
    kind: u8,
    family: &RelationFamily<L>,
    candidate: &FuzzyRelation<L>,
    x: &L::Value,
    x0: &FuzzyRelation<L>,
) -> Result<bool> {
    if !candidate.leq(x0)? {
        return Ok(false);
    }
    let degree = sd(kind, family, candidate)?;
    Ok(family.lattice().leq(x, &degree))
}

/// (S ≈ S') = ⋀_i (R_i ≈ R'_i); families must have matching index sets.
pub fn family_equality_degree<L: ResiduatedLattice>(
    a: &RelationFamily<L>,
    b: &RelationFamily<L>,
) -> Result<L::Value> {
    if a.len() != b.len() {
        return Err(Error::FamilyMismatch(format!(
            "families of sizes {} and {}",
            a.len(),
            b.len()
        )));
    }
    let l = a.lattice();
    let mut acc = l.top();
    for (r, r2) in a.members().iter().zip(b.members()) {
        acc = l.meet(&acc, &r.equality_degree(r2)?);
    }
    Ok(acc)
}
