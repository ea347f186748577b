//! Computes the greatest relation that approximately commutes with a network.
//!
//! A six-node fuzzy network is given by one relation R whose entry R(u, v)
//! says how strongly node u feeds node v. We look for the greatest relation X
//! with X∘R = R∘X to degree at least 4/5 over the product structure: the
//! iteration shrinks the universal relation until it stabilizes, and the
//! fixed point is the greatest member of the 4/5-cut.
//!
//! Run with: cargo run --example greatest_solution

use std::sync::Arc;

use wls::{
    in_cut, product, solve_greatest, FuzzyRelation, RelationFamily, SolveStatus, SolverConfig,
    SystemKind, UnitStructure, UnitValue, Universe,
};

fn v(s: &str) -> UnitValue {
    s.parse().expect("a fraction in [0, 1]")
}

fn main() -> wls::Result<()> {
    let lattice = Arc::new(product());
    let universe = Arc::new(Universe::new(["n1", "n2", "n3", "n4", "n5", "n6"])?);
    let r: FuzzyRelation<UnitStructure> = FuzzyRelation::from_rows_str(
        lattice.clone(),
        universe.clone(),
        &[
            &["9/10", "0", "0", "0", "1/2", "0"],
            &["0", "4/5", "0", "3/10", "0", "1/5"],
            &["0", "0", "4/5", "2/5", "0", "2/5"],
            &["0", "0", "4/5", "1/5", "1/5", "0"],
            &["0", "1", "0", "1", "1/5", "0"],
            &["0", "0", "9/10", "0", "0", "1/10"],
        ],
    )?;
    println!("The network relation R:\n{r}\n");

    let family = RelationFamily::single(r);
    let degree = v("4/5");
    let config = SolverConfig::new(degree.clone())
        .kind(SystemKind::Wls3)
        .trace(true);
    let report = solve_greatest(&family, &config)?;

    for (step, iterate) in report
        .trace
        .as_ref()
        .expect("trace requested")
        .iter()
        .enumerate()
    {
        println!("X{step}:\n{iterate}\n");
    }
    println!(
        "status: {:?} after {} update steps",
        report.status, report.iterations
    );
    println!(
        "solution degree of the result: {} (requested {})",
        report.solution_degree, degree
    );
    let top = FuzzyRelation::universal(lattice.clone(), universe.clone());
    println!(
        "the result is in the 4/5-cut: {}",
        in_cut(3, &family, &report.relation, &degree, &top)?
    );

    // Asking for an exact solution (degree 1) over the product structure may
    // never stabilize; the cap turns that into an honest report instead of a
    // hang.
    let exact = SolverConfig::new(v("1"))
        .kind(SystemKind::Wls3)
        .max_iterations(40);
    let capped = solve_greatest(&family, &exact)?;
    assert_eq!(capped.status, SolveStatus::IterationCapReached);
    println!(
        "\nat degree 1 the same instance reaches the {}-step cap without stabilizing",
        capped.iterations
    );
    Ok(())
}
