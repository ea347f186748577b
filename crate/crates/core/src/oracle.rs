//! Brute-force ground truth for small instances.
//!
//! Over a [`FiniteLattice`] every relation on a universe of size n is one of
//! |L|^(n²) matrices, so cuts can be enumerated outright and the iterative
//! solvers checked against the genuinely greatest member. The enumeration
//! refuses to start when that count exceeds a budget — a slow answer is
//! useless as an oracle, a silently truncated one is worse.

use crate::degree::{in_cut, sd, RelationFamily};
use crate::error::{Error, Result};
use crate::lattice::{FinElem, FiniteLattice, ResiduatedLattice};
use crate::relation::FuzzyRelation;

/// Structural filter applied to candidates before the cut test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Restriction {
    None,
    Preorders,
    Equivalences,
}

/// A cut to enumerate: all X ≤ X₀ over the family's universe with
/// x ≤ sd(kind, S, X), optionally restricted to preorders or equivalences.
#[derive(Clone, Debug)]
pub struct EnumerationSpec {
    pub family: RelationFamily<FiniteLattice>,
    /// Index of the solution-degree functional, 1..=9.
    pub kind: u8,
    pub degree: FinElem,
    /// Upper bound; `None` means the universal relation.
    pub x0: Option<FuzzyRelation<FiniteLattice>>,
    pub restriction: Restriction,
    /// Maximum number of candidate matrices the enumeration may visit.
    pub budget: u128,
}

pub const DEFAULT_BUDGET: u128 = 1_000_000;

impl EnumerationSpec {
    pub fn new(family: RelationFamily<FiniteLattice>, kind: u8, degree: FinElem) -> Self {
        EnumerationSpec {
            family,
            kind,
            degree,
            x0: None,
            restriction: Restriction::None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn x0(mut self, x0: FuzzyRelation<FiniteLattice>) -> Self {
        self.x0 = Some(x0);
        self
    }

    pub fn restriction(mut self, restriction: Restriction) -> Self {
        self.restriction = restriction;
        self
    }

    pub fn budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    /// |L|^(n²), the number of matrices a full enumeration visits.
    fn required(&self) -> u128 {
        let size = self.family.lattice().size() as u128;
        let cells = self.family.universe().size() * self.family.universe().size();
        let mut required: u128 = 1;
        for _ in 0..cells {
            match required.checked_mul(size) {
                Some(r) => required = r,
                None => return u128::MAX,
            }
        }
        required
    }

    fn check_budget(&self) -> Result<()> {
        let required = self.required();
        if required > self.budget {
            return Err(Error::BudgetExceeded {
                required,
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn resolved_x0(&self) -> Result<FuzzyRelation<FiniteLattice>> {
        match &self.x0 {
            Some(x0) => {
                self.family.check_candidate(x0)?;
                Ok(x0.clone())
            }
            None => Ok(FuzzyRelation::universal(
                self.family.lattice().clone(),
                self.family.universe().clone(),
            )),
        }
    }

    fn passes_restriction(&self, x: &FuzzyRelation<FiniteLattice>) -> bool {
        match self.restriction {
            Restriction::None => true,
            Restriction::Preorders => x.is_preorder(),
            Restriction::Equivalences => x.is_equivalence(),
        }
    }
}

/// Visit every |L|-valued matrix over the universe, odometer order.
fn for_each_relation(
    family: &RelationFamily<FiniteLattice>,
    mut visit: impl FnMut(FuzzyRelation<FiniteLattice>) -> Result<()>,
) -> Result<()> {
    let lattice = family.lattice().clone();
    let universe = family.universe().clone();
    let elems: Vec<FinElem> = lattice.elements().collect();
    let cells = universe.size() * universe.size();
    let mut digits = vec![0usize; cells];
    loop {
        let rel = FuzzyRelation::from_fn(lattice.clone(), universe.clone(), |u, v| {
            elems[digits[u * universe.size() + v]]
        });
        visit(rel)?;
        let mut pos = cells;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < elems.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Enumerate the cut exhaustively. Fails up front with
/// [`Error::BudgetExceeded`] when |L|^(n²) exceeds the budget.
pub fn enumerate_cut(spec: &EnumerationSpec) -> Result<Vec<FuzzyRelation<FiniteLattice>>> {
    spec.check_budget()?;
    let x0 = spec.resolved_x0()?;
    let mut members = Vec::new();
    for_each_relation(&spec.family, |rel| {
        if spec.passes_restriction(&rel)
            && in_cut(spec.kind, &spec.family, &rel, &spec.degree, &x0)?
        {
            members.push(rel);
        }
        Ok(())
    })?;
    Ok(members)
}

/// The greatest member of the unrestricted cut: the join of all members,
/// verified to be a member itself. A restricted cut is rejected — the join
/// of two preorders need not be a preorder, so no greatest member is
/// guaranteed to exist there.
pub fn greatest_cut_member(spec: &EnumerationSpec) -> Result<FuzzyRelation<FiniteLattice>> {
    if spec.restriction != Restriction::None {
        return Err(Error::RestrictionUnsupported(
            "a restricted cut has no guaranteed greatest member; enumerate it instead".into(),
        ));
    }
    let members = enumerate_cut(spec)?;
    let Some((first, rest)) = members.split_first() else {
        // The zero relation solves everything to degree 1, so this cannot
        // happen for a well-formed spec; report it rather than guess.
        return Err(Error::JoinNotMember("the cut is empty".into()));
    };
    let mut join = first.clone();
    for member in rest {
        join = join.join(member)?;
    }
    let x0 = spec.resolved_x0()?;
    if !in_cut(spec.kind, &spec.family, &join, &spec.degree, &x0)? {
        return Err(Error::JoinNotMember(format!(
            "the join of all {} cut members is not itself in the cut",
            members.len()
        )));
    }
    Ok(join)
}

/// One fuzzy preorder and degree whose cut membership differs within a
/// functional triple (kind, kind+3, kind+6), which agree on preorders by
/// theory.
#[derive(Clone, Debug)]
pub struct AgreementViolation {
    pub relation: FuzzyRelation<FiniteLattice>,
    pub degree: FinElem,
    pub base_kind: u8,
    /// Membership verdicts for kinds (base, base+3, base+6).
    pub memberships: [bool; 3],
}

/// Result of sweeping every preorder on the universe against every degree.
#[derive(Clone, Debug)]
pub struct AgreementReport {
    pub preorders_checked: usize,
    pub violations: Vec<AgreementViolation>,
}

impl AgreementReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check, for every fuzzy preorder on the universe and every degree x in the
/// lattice, that membership in the x-cut agrees across each functional triple
/// (k, k+3, k+6) for k = 1, 2, 3. `spec.kind`, `spec.degree` and
/// `spec.restriction` are ignored; the sweep covers all nine functionals, all
/// degrees, and only preorders are meaningful candidates.
pub fn check_preorder_cut_agreement(spec: &EnumerationSpec) -> Result<AgreementReport> {
    spec.check_budget()?;
    let lattice = spec.family.lattice().clone();
    let mut report = AgreementReport {
        preorders_checked: 0,
        violations: Vec::new(),
    };
    for_each_relation(&spec.family, |rel| {
        if !rel.is_preorder() {
            return Ok(());
        }
        report.preorders_checked += 1;
        let mut degrees = Vec::with_capacity(9);
        for kind in 1u8..=9 {
            degrees.push(sd(kind, &spec.family, &rel)?);
        }
        for base in 1u8..=3 {
            let triple = [base, base + 3, base + 6];
            for x in lattice.elements() {
                let memberships = triple.map(|kind| lattice.leq(&x, &degrees[(kind - 1) as usize]));
                if memberships[1] != memberships[0] || memberships[2] != memberships[0] {
                    report.violations.push(AgreementViolation {
                        relation: rel.clone(),
                        degree: x,
                        base_kind: base,
                        memberships,
                    });
                }
            }
        }
        Ok(())
    })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Universe;
    use std::sync::Arc;

    fn chain3() -> Arc<FiniteLattice> {
        Arc::new(FiniteLattice::godel_chain(3).unwrap())
    }

    fn spec_for(rows: &[&[&str]], kind: u8, degree: &str) -> EnumerationSpec {
        let lattice = chain3();
        let universe = Arc::new(Universe::numbered(2).unwrap());
        let x = lattice
            .element(degree)
            .expect("degree names a lattice element");
        let family =
            RelationFamily::single(FuzzyRelation::from_rows_str(lattice, universe, rows).unwrap());
        EnumerationSpec::new(family, kind, x)
    }

    #[test]
    fn budget_gates_the_enumeration_up_front() {
        let spec = spec_for(&[&["1", "0"], &["1/2", "1"]], 3, "1").budget(80);
        match enumerate_cut(&spec) {
            Err(Error::BudgetExceeded { required, budget }) => {
                assert_eq!(required, 81, "3 values on 4 cells");
                assert_eq!(budget, 80);
            }
            other => panic!("expected a budget error, got {other:?}"),
        }
        let spec = spec_for(&[&["1", "0"], &["1/2", "1"]], 3, "1").budget(81);
        assert!(
            enumerate_cut(&spec).is_ok(),
            "exactly fitting the budget is fine"
        );
    }

    #[test]
    fn degree_zero_accepts_every_bounded_relation() {
        let spec = spec_for(&[&["1", "1/2"], &["0", "1"]], 3, "0");
        assert_eq!(enumerate_cut(&spec).unwrap().len(), 81);
        let bound = FuzzyRelation::from_rows_str(
            spec.family.lattice().clone(),
            spec.family.universe().clone(),
            &[&["1/2", "1/2"], &["1/2", "1/2"]],
        )
        .unwrap();
        let spec = spec.x0(bound);
        assert_eq!(
            enumerate_cut(&spec).unwrap().len(),
            16,
            "two values per cell remain"
        );
    }

    #[test]
    fn cut_is_closed_under_joins() {
        let spec = spec_for(&[&["1/2", "0"], &["1", "1/2"]], 3, "1/2");
        let members = enumerate_cut(&spec).unwrap();
        assert!(!members.is_empty());
        let x0 = spec.resolved_x0().unwrap();
        for a in &members {
            for b in &members {
                let j = a.join(b).unwrap();
                assert!(
                    in_cut(spec.kind, &spec.family, &j, &spec.degree, &x0).unwrap(),
                    "join of two cut members left the cut"
                );
            }
        }
    }

    #[test]
    fn greatest_member_dominates_the_whole_cut() {
        let spec = spec_for(&[&["1/2", "0"], &["1", "1/2"]], 3, "1/2");
        let greatest = greatest_cut_member(&spec).unwrap();
        for member in enumerate_cut(&spec).unwrap() {
            assert!(
                member.leq(&greatest).unwrap(),
                "found a member above the join"
            );
        }
    }

    #[test]
    fn restricted_cuts_refuse_to_pick_a_greatest_member() {
        let spec =
            spec_for(&[&["1", "0"], &["1/2", "1"]], 3, "1/2").restriction(Restriction::Preorders);
        assert!(matches!(
            greatest_cut_member(&spec),
            Err(Error::RestrictionUnsupported(_))
        ));
        for member in enumerate_cut(&spec).unwrap() {
            assert!(member.is_preorder(), "restriction must filter candidates");
        }
    }

    #[test]
    fn functional_triples_agree_on_preorders() {
        let spec = spec_for(&[&["1", "0"], &["1/2", "1"]], 1, "1/2");
        let report = check_preorder_cut_agreement(&spec).unwrap();
        assert!(
            report.preorders_checked > 0,
            "the sweep must see some preorders"
        );
        assert!(report.holds(), "violations: {:?}", report.violations);
    }
}
