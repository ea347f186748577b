//! Measures how well candidate relations solve a system, and shows why the
//! preorder solver cannot promise maximality.
//!
//! Nine functionals grade a candidate X against a family {Rᵢ}: kinds 1–3
//! grade X∘Rᵢ ≤ Rᵢ∘X, the converse inequality, and the equation; kinds 4–6
//! and 7–9 restate them through X∘Rᵢ∘X and through residuals. On fuzzy
//! preorders all three formulations agree, which is what lets the preorder
//! solver certify its stopping rule. Maximality is a different story: this
//! instance has a cut, bounded by a preorder X₀, that contains preorders but
//! no greatest one.
//!
//! Run with: cargo run --example solution_degrees

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
    let universe = Arc::new(Universe::new(["u1", "u2", "u3"])?);
    let rel = |rows: &[&[&str]]| -> wls::Result<FuzzyRelation<UnitStructure>> {
        FuzzyRelation::from_rows_str(lattice.clone(), universe.clone(), rows)
    };
    let r = rel(&[
        &["0", "2/5", "1"],
        &["3/5", "3/5", "4/5"],
        &["4/5", "1", "1"],
    ])?;
    let x0 = rel(&[
        &["1", "1/5", "3/50"],
        &["2/5", "1", "3/10"],
        &["6/25", "3/5", "1"],
    ])?;
    let x1 = rel(&[&["1", "1/5", "0"], &["2/5", "1", "0"], &["0", "0", "1"]])?;
    let x2 = rel(&[&["1", "0", "0"], &["0", "1", "3/10"], &["0", "3/5", "1"]])?;
    let family = RelationFamily::single(r);

    println!("all nine gradings of the preorder X₁ (rows of kinds k, k+3, k+6 agree):");
    for base in 1..=3u8 {
        let triple: Vec<String> = [base, base + 3, base + 6]
            .iter()
            .map(|&k| format!("sd{k} = {}", sd(k, &family, &x1).unwrap()))
            .collect();
        println!("  {}", triple.join(", "));
    }

    // The 2/3-cut bounded by X₀ contains the preorders X₁ and X₂ and, being
    // join-closed, their join. But a greatest preorder member P would have to
    // dominate that join and therefore its reflexive-transitive closure —
    // which is X₀ itself, and X₀ solves the system only to degree 1/2.
    let witness = v("2/3");
    assert!(x0.is_preorder() && x1.is_preorder() && x2.is_preorder());
    assert!(in_cut(3, &family, &x1, &witness, &x0)?);
    assert!(in_cut(3, &family, &x2, &witness, &x0)?);
    let join = x1.join(&x2)?;
    assert!(in_cut(3, &family, &join, &witness, &x0)?);
    assert_eq!(join.reflexive_transitive_closure(), x0);
    println!("\nX₁ and X₂ and X₁∨X₂ all lie in the 2/3-cut bounded by X₀");
    println!(
        "the closure of X₁∨X₂ is X₀ itself, but sd₃(X₀) = {}",
        sd(3, &family, &x0)?
    );
    assert!(!in_cut(3, &family, &x0, &witness, &x0)?);
    println!("so the 2/3-cut has no greatest preorder member — only maximal ones");

    // The preorder solver still finds a certified member of a smaller cut.
    let config = SolverConfig::new(v("3/4")).kind(SystemKind::Wls3).x0(x0);
    let report = solve_preorder(&family, &config)?;
    println!(
        "\na certified preorder in the 3/4-cut, found in {} updates:\n{}",
        report.iterations, report.relation
    );
    Ok(())
}
