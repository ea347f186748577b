//! Shrinks a fuzzy network by merging nodes a preorder cannot tell apart.
//!
//! Aggregation first solves for a fuzzy preorder X that commutes with every
//! network relation to the chosen degree, then factors the network: nodes
//! with identical rows of X collapse into one block, and each relation R is
//! replaced by X∘R∘X on the blocks. The choice of degree trades network size
//! against fidelity — lower degrees merge more.
//!
//! Run with: cargo run --example network_aggregation

use std::sync::Arc;

use wls::{
    aggregate, product, AggregationMethod, FuzzyNetwork, FuzzyRelation, RelationFamily,
    SolverConfig, SystemKind, UnitValue, Universe,
};

fn v(s: &str) -> UnitValue {
    s.parse().expect("a fraction in [0, 1]")
}

fn network() -> wls::Result<FuzzyNetwork<wls::UnitStructure>> {
    let lattice = Arc::new(product());
    let universe = Arc::new(Universe::new(["n1", "n2", "n3", "n4", "n5", "n6"])?);
    let r = FuzzyRelation::from_rows_str(
        lattice,
        universe,
        &[
            &["9/10", "0", "0", "0", "1/2", "0"],
            &["0", "4/5", "0", "3/10", "0", "1/5"],
            &["0", "0", "4/5", "2/5", "0", "2/5"],
            &["0", "0", "4/5", "1/5", "1/5", "0"],
            &["0", "1", "0", "1", "1/5", "0"],
            &["0", "0", "9/10", "0", "0", "1/10"],
        ],
    )?;
    FuzzyNetwork::named(vec!["R".into()], RelationFamily::single(r))
}

fn main() -> wls::Result<()> {
    let network = network()?;
    println!("original universe: {:?}\n", network.universe().names());

    for degree in ["3/5", "2/5"] {
        let config = SolverConfig::new(v(degree)).kind(SystemKind::Wls3);
        let result = aggregate(&network, AggregationMethod::Preorder, &config)?;
        let factor = result.factor.expect("the run converged");
        println!(
            "at degree {degree} the network factors into {} block(s):",
            factor.blocks.len()
        );
        for (block, members) in factor.universe().names().iter().zip(&factor.blocks) {
            println!("  {block}  ←  {members:?}");
        }
        println!("factored relation R:\n{}\n", factor.family.members()[0]);
    }

    // Degree 1 asks for an exact commuting preorder; over the product
    // structure this instance never stabilizes, so no factor network is
    // emitted — an uncertified aggregation would be worthless.
    let config = SolverConfig::new(v("1"))
        .kind(SystemKind::Wls3)
        .max_iterations(40);
    let result = aggregate(&network, AggregationMethod::Preorder, &config)?;
    assert!(result.factor.is_none());
    println!(
        "at degree 1 the solver reports {:?} and aggregation withholds the factor network",
        result.report.status
    );
    Ok(())
}
