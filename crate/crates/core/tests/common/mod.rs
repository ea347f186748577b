//! Hand-verified fixtures shared by the integration suites: a six-node
//! product-structure instance with its known solver iterates, and a bounded
//! three-node instance whose cut has no greatest preorder member.
#![allow(dead_code)]

use std::sync::Arc;
use wls::{product, FuzzyRelation, RelationFamily, UnitStructure, UnitValue, Universe};

pub fn v(s: &str) -> UnitValue {
    s.parse().expect("fixture values are well-formed")
}

pub fn rel(universe: &Arc<Universe>, rows: &[&[&str]]) -> FuzzyRelation<UnitStructure> {
    FuzzyRelation::from_rows_str(product(), universe.clone(), rows)
        .expect("fixture matrices are well-formed")
}

pub fn six_node_universe() -> Arc<Universe> {
    Arc::new(Universe::numbered(6).unwrap())
}

/// The six-node relation whose system drives the greatest-solution,
/// preorder and aggregation suites.
pub fn six_node_relation(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[
            &["9/10", "0", "0", "0", "1/2", "0"],
            &["0", "4/5", "0", "3/10", "0", "1/5"],
            &["0", "0", "4/5", "2/5", "0", "2/5"],
            &["0", "0", "4/5", "1/5", "1/5", "0"],
            &["0", "1", "0", "1", "1/5", "0"],
            &["0", "0", "9/10", "0", "0", "1/10"],
        ],
    )
}

pub fn six_node_family(u: &Arc<Universe>) -> RelationFamily<UnitStructure> {
    RelationFamily::single(six_node_relation(u))
}

/// First iterate of the greatest-solution run at degree 4/5 from ▲.
pub fn greatest_first_iterate(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[
            &["1", "1", "1", "1", "25/36", "5/9"],
            &["1", "1", "1", "1", "5/8", "1/2"],
            &["1", "1", "1", "1", "25/36", "5/9"],
            &["1", "1", "1", "1", "5/8", "1/2"],
            &["1", "1", "1", "1", "1", "1"],
            &["1", "1", "1", "1", "1", "1"],
        ],
    )
}

/// Fixed point of the same run, reached at the second update and confirmed
/// by the third.
pub fn greatest_fixed_point(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[
            &["1", "1", "1", "625/648", "25/36", "5/9"],
            &["1", "1", "1", "125/128", "5/8", "1/2"],
            &["1", "1", "1", "125/128", "25/36", "5/9"],
            &["1", "1", "1", "1", "5/8", "1/2"],
            &["1", "1", "1", "1", "1", "1"],
            &["1", "1", "1", "1", "1", "1"],
        ],
    )
}

/// The four preorder iterates of the preorder solver on the six-node system
/// starting from ▲, in order X₁..X₄.
pub fn preorder_iterates(u: &Arc<Universe>) -> Vec<FuzzyRelation<UnitStructure>> {
    vec![
        rel(
            u,
            &[
                &["1", "1", "1", "1", "5/9", "4/9"],
                &["8/9", "1", "9/10", "1", "1/2", "2/5"],
                &["8/9", "1", "1", "1", "5/9", "4/9"],
                &["8/9", "1", "9/10", "1", "1/2", "2/5"],
                &["1", "1", "1", "1", "1", "4/5"],
                &["1", "1", "1", "1", "9/10", "1"],
            ],
        ),
        rel(
            u,
            &[
                &["1", "8/9", "8/9", "50/81", "5/9", "4/9"],
                &["64/81", "1", "4/5", "5/8", "1/2", "2/5"],
                &["64/81", "1", "1", "5/8", "5/9", "4/9"],
                &["64/81", "1", "4/5", "1", "1/2", "2/5"],
                &["80/81", "1", "1", "1", "1", "4/5"],
                &["8/9", "1", "1", "1", "9/10", "1"],
            ],
        ),
        rel(
            u,
            &[
                &["1", "64/81", "64/81", "50/81", "5/9", "32/81"],
                &["512/729", "1", "4/5", "5/8", "40/81", "2/5"],
                &["512/729", "1", "1", "5/8", "40/81", "2/5"],
                &["512/729", "1", "4/5", "1", "40/81", "2/5"],
                &["640/729", "1", "1", "1", "1", "32/45"],
                &["64/81", "1", "1", "1", "9/16", "1"],
            ],
        ),
        rel(
            u,
            &[
                &["1", "512/729", "512/729", "50/81", "5/9", "256/729"],
                &["4096/6561", "1", "4/5", "50/81", "320/729", "2/5"],
                &["4096/6561", "8/9", "1", "50/81", "320/729", "2/5"],
                &["4096/6561", "1", "4/5", "1", "320/729", "2/5"],
                &["5120/6561", "1", "1", "1", "1", "256/405"],
                &["512/729", "1", "9/10", "1", "9/16", "1"],
            ],
        ),
    ]
}

/// A preorder strictly above the solver's 3/5-cut output that still lies in
/// the same cut — the witness that the output is not maximal.
pub fn wider_cut_witness(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[
            &["1", "1", "1", "1", "3/5", "3/5"],
            &["9/10", "1", "9/10", "1", "27/50", "27/50"],
            &["9/10", "1", "1", "1", "3/5", "27/50"],
            &["9/10", "1", "9/10", "1", "27/50", "27/50"],
            &["1", "1", "1", "1", "1", "4/5"],
            &["1", "1", "1", "1", "9/10", "1"],
        ],
    )
}

pub fn bounded_universe() -> Arc<Universe> {
    Arc::new(Universe::new(["u1", "u2", "u3"]).unwrap())
}

/// The three-node system used by the no-greatest-preorder suite.
pub fn bounded_relation(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[
            &["0", "2/5", "1"],
            &["3/5", "3/5", "4/5"],
            &["4/5", "1", "1"],
        ],
    )
}

/// The preorder bound X₀ the whole suite works under.
pub fn bounded_x0(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[
            &["1", "1/5", "3/50"],
            &["2/5", "1", "3/10"],
            &["6/25", "3/5", "1"],
        ],
    )
}

/// A cut member at degree 3/4 (and hence 2/3).
pub fn bounded_x1(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[&["1", "1/5", "0"], &["2/5", "1", "0"], &["0", "0", "1"]],
    )
}

/// A second cut member at degree 2/3, incomparable with the first.
pub fn bounded_x2(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[&["1", "0", "0"], &["0", "1", "3/10"], &["0", "3/5", "1"]],
    )
}

/// What the preorder solver returns on the bounded instance at degree 3/4.
pub fn bounded_preorder_output(u: &Arc<Universe>) -> FuzzyRelation<UnitStructure> {
    rel(
        u,
        &[
            &["1", "1/5", "3/50"],
            &["3/10", "1", "3/10"],
            &["3/25", "2/5", "1"],
        ],
    )
}

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}
