//! Solves a system over a finite residuated lattice given by tables.
//!
//! Degrees do not have to be numbers: any complete residuated lattice works.
//! Here the four-element diamond 0 < {a, b} < 1 with a and b incomparable
//! carries a system on two nodes. Only the order and the ⊗ table are
//! supplied — the residuum is derived as the adjoint and validated.
//!
//! Run with: cargo run --example finite_lattices

use std::sync::Arc;

use wls::lattice::generate_subalgebra;
use wls::{
    godel, product, solve_greatest, FiniteLattice, FuzzyRelation, RelationFamily,
    ResiduatedLattice, SolveStatus, SolverConfig, SystemKind, UnitValue, Universe,
};

fn main() -> wls::Result<()> {
    let names = vec!["0".into(), "a".into(), "b".into(), "1".into()];
    let leq = vec![
        vec![true, true, true, true],
        vec![false, true, false, true],
        vec![false, false, true, true],
        vec![false, false, false, true],
    ];
    // ⊗ = ∧ makes the diamond a Heyting algebra.
    let meet_table = vec![
        vec![0, 0, 0, 0],
        vec![0, 1, 0, 1],
        vec![0, 0, 2, 2],
        vec![0, 1, 2, 3],
    ];
    let lattice = Arc::new(FiniteLattice::from_tables(names, leq, meet_table, None)?);
    assert!(lattice.is_heyting());

    println!("derived residuum table (row → column):");
    let elems: Vec<_> = lattice.elements().collect();
    for &x in &elems {
        let row: Vec<String> = elems
            .iter()
            .map(|&y| lattice.name(lattice.residuum(&x, &y)).to_string())
            .collect();
        println!("  {}: {}", lattice.name(x), row.join(" "));
    }

    let universe = Arc::new(Universe::new(["s", "t"])?);
    let r: FuzzyRelation<FiniteLattice> =
        FuzzyRelation::from_rows_str(lattice.clone(), universe, &[&["1", "a"], &["b", "0"]])?;
    println!("\nthe system relation R:\n{r}\n");
    let family = RelationFamily::single(r);
    let degree = lattice.parse_value("a")?;
    let config = SolverConfig::new(degree).kind(SystemKind::Wls3);
    let report = solve_greatest(&family, &config)?;
    assert_eq!(
        report.status,
        SolveStatus::Converged,
        "finite lattices always stabilize"
    );
    println!(
        "greatest member of the a-cut, after {} updates:\n{}",
        report.iterations, report.relation
    );
    println!(
        "its solution degree: {}",
        lattice.format_value(&report.solution_degree)
    );

    // Termination over infinite lattices hinges on how many values the
    // iteration can produce: Gödel operations never invent new values, while
    // product multiplication escapes every finite bound.
    let seed: UnitValue = "1/2".parse().expect("a fraction");
    let (values, exhausted) = generate_subalgebra(&godel(), &[seed.clone()], 16);
    println!(
        "\nGödel closure of {{1/2}}: {} values, exhausted: {exhausted}",
        values.len()
    );
    let (values, exhausted) = generate_subalgebra(&product(), &[seed], 16);
    println!(
        "product closure of {{1/2}} capped at 16: {} values so far, exhausted: {exhausted}",
        values.len()
    );
    Ok(())
}
