//! Cross-checks the solver against brute-force enumeration.
//!
//! On a small finite lattice every relation can be enumerated, so the
//! greatest member of a cut can be found by sheer force: keep the relations
//! whose solution degree reaches the threshold, join them, and verify the
//! join stays in the cut. The iterative solver must land on exactly that
//! relation — bit for bit. The same enumeration also confirms that the three
//! gradings of a fuzzy preorder agree on every preorder in the space.
//!
//! Run with: cargo run --example oracle_check

use std::sync::Arc;

use wls::oracle::{
    check_preorder_cut_agreement, enumerate_cut, greatest_cut_member, EnumerationSpec,
};
use wls::{
    solve_greatest, FiniteLattice, FuzzyRelation, RelationFamily, ResiduatedLattice, SolveStatus,
    SolverConfig, SystemKind, Universe,
};

fn main() -> wls::Result<()> {
    let lattice = Arc::new(FiniteLattice::godel_chain(3)?);
    let universe = Arc::new(Universe::new(["s", "t"])?);
    let r: FuzzyRelation<FiniteLattice> = FuzzyRelation::from_rows_str(
        lattice.clone(),
        universe.clone(),
        &[&["1", "1/2"], &["0", "1"]],
    )?;
    println!("system relation R over the 3-element chain:\n{r}\n");
    let family = RelationFamily::single(r);
    let half = lattice.parse_value("1/2")?;

    // 3 values on 2×2 cells: all 81 relations fit comfortably in the budget.
    let spec = EnumerationSpec::new(family.clone(), 3, half);
    let cut = enumerate_cut(&spec)?;
    println!("the 1/2-cut contains {} of the 81 relations", cut.len());
    let greatest = greatest_cut_member(&spec)?;
    println!("their join is itself a member:\n{greatest}\n");

    let config = SolverConfig::new(half).kind(SystemKind::Wls3);
    let report = solve_greatest(&family, &config)?;
    assert_eq!(report.status, SolveStatus::Converged);
    assert_eq!(
        report.relation, greatest,
        "solver and oracle must agree exactly"
    );
    println!(
        "the iterative solver reproduces it in {} update(s)",
        report.iterations
    );
    for member in &cut {
        assert!(
            member.leq(&report.relation)?,
            "nothing in the cut escapes the result"
        );
    }

    let agreement = check_preorder_cut_agreement(&spec)?;
    assert!(agreement.holds());
    println!(
        "\nall {} preorders solve the system, its relaxation through X∘R∘X, and its\n\
         residual form to identical degrees ({} violations)",
        agreement.preorders_checked,
        agreement.violations.len()
    );
    Ok(())
}
