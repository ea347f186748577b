//! Computes a fuzzy equivalence that approximately commutes with a network.
//!
//! The iteration is the preorder one with both residuals replaced by their
//! symmetric (double) versions, so every iterate is reflexive, symmetric and
//! transitive. The result grades how interchangeable two nodes are while
//! solving the system to the requested degree.
//!
//! Run with: cargo run --example equivalence_solution

use std::sync::Arc;

use wls::{
    godel, in_cut, solve_equivalence, FuzzyRelation, RelationFamily, SolveStatus, SolverConfig,
    SystemKind, UnitStructure, UnitValue, Universe,
};

fn v(s: &str) -> UnitValue {
    s.parse().expect("a fraction in [0, 1]")
}

fn main() -> wls::Result<()> {
    // The Gödel structure is locally finite, so this run must terminate.
    let lattice = Arc::new(godel());
    let universe = Arc::new(Universe::new(["a", "b", "c", "d"])?);
    let r: FuzzyRelation<UnitStructure> = FuzzyRelation::from_rows_str(
        lattice.clone(),
        universe.clone(),
        &[
            &["1/2", "3/4", "0", "0"],
            &["3/4", "1/2", "0", "0"],
            &["0", "0", "1/2", "1/4"],
            &["0", "0", "1/4", "1/2"],
        ],
    )?;
    println!("The network relation R:\n{r}\n");

    let family = RelationFamily::single(r);
    let degree = v("3/4");
    let config = SolverConfig::new(degree.clone()).kind(SystemKind::Wls3);
    let report = solve_equivalence(&family, &config)?;
    assert_eq!(report.status, SolveStatus::Converged);

    let e = &report.relation;
    assert!(
        e.is_equivalence(),
        "the result is reflexive, symmetric and transitive"
    );
    println!(
        "A fuzzy equivalence in the {}-cut, found in {} updates:\n{e}\n",
        degree, report.iterations
    );
    for u in 0..universe.size() {
        println!(
            "how interchangeable {} is with the others: {}",
            universe.name(u),
            e.afterset_at(u)
        );
    }
    let top = FuzzyRelation::universal(lattice.clone(), universe.clone());
    println!(
        "\ncertified member of the cut: {}",
        in_cut(3, &family, e, &degree, &top)?
    );
    println!("its own solution degree: {}", report.solution_degree);
    Ok(())
}
