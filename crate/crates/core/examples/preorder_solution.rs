//! Computes a fuzzy preorder that approximately commutes with a network.
//!
//! The greatest member of a cut is rarely a preorder, and some cuts have no
//! greatest preorder member at all. This iteration therefore keeps every
//! iterate a preorder and stops as soon as two successive iterates are equal
//! to degree at least x — the earlier of the two is then certified to lie in
//! the x-cut, although it need not be maximal there.
//!
//! Run with: cargo run --example preorder_solution

use std::sync::Arc;

use wls::{
    in_cut, product, sd, solve_preorder, FuzzyRelation, RelationFamily, SolverConfig, SystemKind,
    UnitStructure, UnitValue, Universe,
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
    let family = RelationFamily::single(r);
    let degree = v("4/5");
    let config = SolverConfig::new(degree.clone())
        .kind(SystemKind::Wls3)
        .trace(true);
    let report = solve_preorder(&family, &config)?;

    let trace = report.trace.as_ref().expect("trace requested");
    println!("update | successive equality degree | stop once ≥ {degree}");
    for (step, d) in report.equality_degrees.iter().enumerate() {
        println!("X{} → X{}   {}", step, step + 1, d);
    }
    println!();
    for (step, iterate) in trace.iter().enumerate() {
        assert!(iterate.is_preorder(), "every iterate stays a preorder");
        let at_step = sd(3, &family, iterate)?;
        println!("X{step} (a preorder, solves the system to degree {at_step}):");
        println!("{iterate}\n");
    }

    // The returned relation is the iterate *before* the stopping pair: its
    // membership in the cut is exactly what the stopping rule certifies.
    println!(
        "returned after {} updates:\n{}",
        report.iterations, report.relation
    );
    assert_eq!(&report.relation, &trace[trace.len() - 2]);
    let top = FuzzyRelation::universal(lattice.clone(), universe.clone());
    println!(
        "certified member of the {}-cut: {}",
        degree,
        in_cut(3, &family, &report.relation, &degree, &top)?
    );
    println!("its own solution degree: {}", report.solution_degree);
    Ok(())
}
