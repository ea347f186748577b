//! Acceptance gate: end-to-end checks of every promised behavior, at exact
//! rational equality and with the stated runtime budgets. Each test prints
//! one PASS line (visible with `--nocapture`); a failure of any assertion
//! fails the corresponding gate.

mod common;

use common::*;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};
use wls::oracle::{greatest_cut_member, EnumerationSpec};
use wls::{
    aggregate, in_cut, product, sd, solve_greatest, solve_preorder, AggregationMethod, FinElem,
    FiniteLattice, FuzzyNetwork, FuzzyRelation, RelationFamily, ResiduatedLattice, SolveStatus,
    SolverConfig, SystemKind, Universe,
};

#[test]
fn greatest_solution_reaches_the_known_fixed_point_within_a_second() {
    let started = Instant::now();
    let u = six_node_universe();
    let family = six_node_family(&u);

    let report = solve_greatest(&family, &SolverConfig::new(v("4/5")).trace(true)).unwrap();
    assert_eq!(report.status, SolveStatus::Converged);
    assert_eq!(
        report.iterations, 3,
        "two real updates and one confirming step"
    );
    let trace = report.trace.as_ref().unwrap();
    assert_eq!(trace[1], greatest_first_iterate(&u), "first iterate is off");
    assert_eq!(trace[2], greatest_fixed_point(&u), "second iterate is off");
    assert_eq!(
        trace[3], trace[2],
        "the third step must confirm the fixed point"
    );
    assert_eq!(report.relation, greatest_fixed_point(&u));
    assert!(
        product().leq(&v("4/5"), &report.solution_degree),
        "the returned relation must itself solve the system to 4/5"
    );

    let capped = solve_greatest(&family, &SolverConfig::new(v("1")).max_iterations(60)).unwrap();
    assert_eq!(
        capped.status,
        SolveStatus::IterationCapReached,
        "the exact system has no finitely reached greatest solution"
    );

    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "took {elapsed:?}, budget is 1s"
    );
    println!("PASS greatest solution: 6-node instance, fixed point after 3 iterations, exact entries, {elapsed:?}");
}

#[test]
fn preorder_solver_stops_after_four_updates_with_exact_degrees() {
    let started = Instant::now();
    let u = six_node_universe();
    let family = six_node_family(&u);

    let report = solve_preorder(&family, &SolverConfig::new(v("4/5")).trace(true)).unwrap();
    assert_eq!(report.status, SolveStatus::Converged);
    assert_eq!(report.iterations, 4);
    assert_eq!(
        report.equality_degrees,
        vec![v("2/5"), v("50/81"), v("5/8"), v("8/9")],
        "per-step closeness of successive iterates"
    );
    let expected = preorder_iterates(&u);
    let trace = report.trace.as_ref().unwrap();
    assert_eq!(
        &trace[1..],
        &expected[..],
        "iterates X₁..X₄ must match exactly"
    );
    for iterate in trace {
        assert!(iterate.is_preorder(), "every iterate must stay a preorder");
    }
    assert_eq!(
        report.relation, expected[2],
        "the certified result is the earlier iterate X₃, not X₄"
    );
    assert!(product().leq(&v("4/5"), &report.solution_degree));

    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "took {elapsed:?}, budget is 1s"
    );
    println!("PASS preorder solution: 4 update steps, degrees 2/5 50/81 5/8 8/9, returns X₃, {elapsed:?}");
}

#[test]
fn bounded_cut_witnesses_that_no_greatest_preorder_member_exists() {
    let u = bounded_universe();
    let family = RelationFamily::single(bounded_relation(&u));
    let x0 = bounded_x0(&u);
    let x1 = bounded_x1(&u);
    let x2 = bounded_x2(&u);

    assert_eq!(
        sd(3, &family, &x0).unwrap(),
        v("1/2"),
        "X₀ solves the system to exactly 1/2"
    );
    assert!(in_cut(3, &family, &x1, &v("3/4"), &x0).unwrap());
    assert!(in_cut(3, &family, &x2, &v("2/3"), &x0).unwrap());
    let join = x1.join(&x2).unwrap();
    assert!(
        in_cut(3, &family, &join, &v("2/3"), &x0).unwrap(),
        "the join of the two members stays in the 2/3-cut"
    );
    assert_eq!(
        join.reflexive_transitive_closure(),
        x0,
        "the only preorder above both members inside the bound is X₀ itself"
    );
    assert!(
        !in_cut(3, &family, &x0, &v("2/3"), &x0).unwrap(),
        "but X₀ is not in the 2/3-cut, so that cut has no greatest preorder"
    );

    let config = SolverConfig::new(v("3/4")).x0(x0);
    let report = solve_preorder(&family, &config).unwrap();
    assert_eq!(report.status, SolveStatus::Converged);
    assert_eq!(report.relation, bounded_preorder_output(&u));

    println!("PASS bounded-cut suite: cut members join outside the preorders, solver output exact");
}

#[test]
fn aggregation_merges_interchangeable_nodes_and_withholds_uncertified_factors() {
    let u = six_node_universe();
    let family = six_node_family(&u);
    let network = FuzzyNetwork::new(family.clone());
    let expected = preorder_iterates(&u);

    let done = aggregate(
        &network,
        AggregationMethod::Preorder,
        &SolverConfig::new(v("3/5")),
    )
    .unwrap();
    assert_eq!(done.report.status, SolveStatus::Converged);
    assert_eq!(
        done.report.relation, expected[0],
        "the 3/5 run stops at the first iterate"
    );
    let factor = done.factor.as_ref().unwrap();
    assert_eq!(factor.blocks.len(), 5);
    assert_eq!(
        factor.blocks[1],
        vec!["n2".to_string(), "n4".to_string()],
        "the two interchangeable nodes merge"
    );
    assert_eq!(
        factor.universe().names(),
        ["n1", "n2+n4", "n3", "n5", "n6"],
        "blocks keep first-occurrence order and sorted member names"
    );

    let low = aggregate(
        &network,
        AggregationMethod::Preorder,
        &SolverConfig::new(v("2/5")),
    )
    .unwrap();
    assert_eq!(
        low.report.relation,
        FuzzyRelation::universal(product(), u.clone()),
        "a low target accepts the universal relation immediately"
    );
    assert_eq!(
        low.factor.as_ref().unwrap().blocks.len(),
        1,
        "everything merges"
    );

    let capped = aggregate(
        &network,
        AggregationMethod::Preorder,
        &SolverConfig::new(v("1")).max_iterations(40),
    )
    .unwrap();
    assert_eq!(capped.report.status, SolveStatus::IterationCapReached);
    assert!(
        capped.factor.is_none(),
        "no factor network without a certificate"
    );

    let witness = wider_cut_witness(&u);
    assert!(witness.is_preorder());
    assert!(
        expected[0].leq(&witness).unwrap() && expected[0] != witness,
        "the witness lies strictly above the solver output"
    );
    assert!(
        product().leq(&v("3/5"), &sd(3, &family, &witness).unwrap()),
        "and still solves the system to 3/5 — the output is not maximal"
    );
    assert_eq!(
        network.factor(&witness).unwrap().blocks.len(),
        5,
        "both cut members induce factor networks of the same size"
    );

    println!("PASS aggregation: 5 blocks with n2+n4 merged at 3/5, 1 block at 2/5, cap at 1 reported, non-maximality witnessed");
}

#[test]
fn solver_matches_exhaustive_search_on_every_small_instance() {
    let started = Instant::now();
    let lattice = Arc::new(FiniteLattice::godel_chain(3).unwrap());
    let universe = Arc::new(Universe::numbered(2).unwrap());
    let elements: Vec<FinElem> = lattice.elements().collect();

    let mut all_relations = Vec::with_capacity(81);
    for a in &elements {
        for b in &elements {
            for c in &elements {
                for d in &elements {
                    all_relations.push(
                        FuzzyRelation::<FiniteLattice>::new(
                            lattice.clone(),
                            universe.clone(),
                            vec![vec![*a, *b], vec![*c, *d]],
                        )
                        .unwrap(),
                    );
                }
            }
        }
    }
    assert_eq!(all_relations.len(), 81);

    let kinds = [SystemKind::Wls1, SystemKind::Wls2, SystemKind::Wls3];
    let mut runs = 0usize;
    for r in &all_relations {
        let family = RelationFamily::single(r.clone());
        for x0 in &all_relations {
            for &x in &elements {
                for kind in kinds {
                    let config = SolverConfig::new(x)
                        .kind(kind)
                        .x0(x0.clone())
                        .max_iterations(10_000);
                    let report = solve_greatest(&family, &config).unwrap();
                    assert_eq!(
                        report.status,
                        SolveStatus::Converged,
                        "finite lattices admit no infinite strictly descending runs"
                    );
                    let spec =
                        EnumerationSpec::new(family.clone(), kind.sd_kind(), x).x0(x0.clone());
                    let expected = greatest_cut_member(&spec).unwrap();
                    assert_eq!(
                        report.relation, expected,
                        "solver disagrees with brute force: kind {kind:?}, degree {}, R =\n{}X₀ =\n{}",
                        lattice.format_value(&x),
                        r,
                        x0
                    );
                    runs += 1;
                }
            }
        }
    }
    assert_eq!(runs, 81 * 81 * 3 * 3);

    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(300),
        "took {elapsed:?}, budget is 5min"
    );
    println!("PASS exhaustive oracle agreement: {runs} solver runs, zero mismatches, {elapsed:?}");
}

#[test]
fn algebraic_laws_hold_exhaustively_on_small_lattices() {
    let diamond = FiniteLattice::from_tables(
        vec!["0".into(), "a".into(), "b".into(), "1".into()],
        vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ],
        vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ],
        None,
    )
    .unwrap();
    let lattices = vec![
        FiniteLattice::godel_chain(2).unwrap(),
        FiniteLattice::godel_chain(3).unwrap(),
        FiniteLattice::godel_chain(4).unwrap(),
        diamond,
    ];

    let mut triples = 0usize;
    for l in &lattices {
        let elements: Vec<FinElem> = l.elements().collect();
        for &a in &elements {
            for &b in &elements {
                // ⊗ is commutative with unit 1; → compares to the order
                assert_eq!(l.otimes(&a, &b), l.otimes(&b, &a));
                assert_eq!(l.otimes(&a, &l.top()), a);
                assert_eq!(l.leq(&a, &b), l.residuum(&a, &b) == l.top());
                assert!(l.leq(&l.otimes(&a, &l.residuum(&a, &b)), &b), "a⊗(a→b) ≤ b");
                assert!(l.leq(&a, &l.residuum(&b, &l.otimes(&b, &a))), "a ≤ b→(b⊗a)");
                for &c in &elements {
                    // the adjunction and the exchange law
                    assert_eq!(
                        l.leq(&l.otimes(&a, &b), &c),
                        l.leq(&a, &l.residuum(&b, &c)),
                        "adjunction fails"
                    );
                    assert_eq!(
                        l.residuum(&l.otimes(&a, &b), &c),
                        l.residuum(&a, &l.residuum(&b, &c)),
                        "(a⊗b)→c = a→(b→c) fails"
                    );
                    // ⊗ distributes over ∨; → turns ∨ into ∧ on the left
                    assert_eq!(
                        l.otimes(&a, &l.join(&b, &c)),
                        l.join(&l.otimes(&a, &b), &l.otimes(&a, &c))
                    );
                    assert_eq!(
                        l.residuum(&l.join(&a, &b), &c),
                        l.meet(&l.residuum(&a, &c), &l.residuum(&b, &c))
                    );
                    assert_eq!(
                        l.residuum(&a, &l.meet(&b, &c)),
                        l.meet(&l.residuum(&a, &b), &l.residuum(&a, &c))
                    );
                    triples += 1;
                }
            }
            assert_eq!(l.biresiduum(&a, &a), l.top());
        }
        // Gödel chains are Heyting: ⊗ = ∧
        if l.is_heyting() {
            for &a in &elements {
                for &b in &elements {
                    assert_eq!(l.otimes(&a, &b), l.meet(&a, &b));
                }
            }
        }
    }

    // Relation-level laws, exhaustively over the 3-chain on two nodes.
    let lattice = Arc::new(FiniteLattice::godel_chain(3).unwrap());
    let universe = Arc::new(Universe::numbered(2).unwrap());
    let elements: Vec<FinElem> = lattice.elements().collect();
    let mut relations = Vec::new();
    for a in &elements {
        for b in &elements {
            for c in &elements {
                for d in &elements {
                    relations.push(
                        FuzzyRelation::<FiniteLattice>::new(
                            lattice.clone(),
                            universe.clone(),
                            vec![vec![*a, *b], vec![*c, *d]],
                        )
                        .unwrap(),
                    );
                }
            }
        }
    }
    for r in &relations {
        assert!(
            r.right_residual(r).unwrap().is_preorder(),
            "R\\R must be a preorder"
        );
        assert!(
            r.left_residual(r).unwrap().is_preorder(),
            "R/R must be a preorder"
        );
        let closure = r.reflexive_transitive_closure();
        assert!(closure.is_preorder());
        assert_eq!(
            closure.reflexive_transitive_closure(),
            closure,
            "closure must be idempotent"
        );
        assert!(r.leq(&closure).unwrap());
    }

    println!(
        "PASS algebraic laws: {} lattice triples and {} relations checked exhaustively",
        triples,
        relations.len()
    );
}

#[test]
fn cli_round_trips_fixtures_and_honors_the_exit_code_contract() {
    let wls = env!("CARGO_BIN_EXE_wls");
    let run = |args: &[&str]| {
        Command::new(wls)
            .args(args)
            .output()
            .expect("the binary must spawn")
    };
    let six = fixture_path("six_node_network.json");
    let six = six.to_str().unwrap();
    let three = fixture_path("three_node_bounded.json");
    let three = three.to_str().unwrap();

    // Exact greatest solution through the CLI.
    let out = run(&["solve", "--input", six, "--degree", "4/5"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["status"], "converged");
    assert_eq!(report["iterations"], 3);
    assert_eq!(report["relation"][0][3], "625/648");
    assert_eq!(report["relation"][1][3], "125/128");

    // The exact problem has no reachable greatest solution: exit 2.
    let out = run(&["solve", "--input", six, "--degree", "1", "--max-iter", "50"]);
    assert_eq!(out.status.code(), Some(2));

    // Preorder run reproduces the degree trace.
    let out = run(&["solve-preorder", "--input", six, "--degree", "4/5"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        report["equality_degrees"],
        serde_json::json!(["2/5", "50/81", "5/8", "8/9"])
    );

    // Exact solution degree of the bounded instance's X₀.
    let out = run(&[
        "degree",
        "--input",
        three,
        "--relation",
        "X0",
        "--kind",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1/2");

    // Aggregation merges n2 and n4 at 3/5 and reports the cap at 1.
    let out = run(&["aggregate", "--input", six, "--degree", "3/5"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        report["factor"]["blocks"][1],
        serde_json::json!(["n2", "n4"])
    );
    assert_eq!(report["factor"]["blocks"].as_array().unwrap().len(), 5);
    let out = run(&[
        "aggregate",
        "--input",
        six,
        "--degree",
        "1",
        "--max-iter",
        "40",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["factor"].is_null());

    // Input errors are exit 1 with a diagnostic on stderr.
    for (fixture, subcommand) in [
        ("bad_shape.json", "solve"),
        ("bad_value.json", "solve"),
        ("bad_x0.json", "solve-preorder"),
    ] {
        let path = fixture_path(fixture);
        let out = run(&[
            subcommand,
            "--input",
            path.to_str().unwrap(),
            "--degree",
            "1/2",
        ]);
        assert_eq!(out.status.code(), Some(1), "{fixture} must be rejected");
        assert!(!out.stderr.is_empty(), "{fixture} needs a diagnostic");
    }

    // Problem files survive a parse → serialize → parse cycle bit-exactly.
    for fixture in [
        "six_node_network.json",
        "three_node_bounded.json",
        "finite_diamond.json",
    ] {
        let text = std::fs::read_to_string(fixture_path(fixture)).unwrap();
        let first = wls::cli::load_problem_str(&text).unwrap().to_file();
        let reserialized = serde_json::to_string_pretty(&first).unwrap();
        let second = wls::cli::load_problem_str(&reserialized).unwrap().to_file();
        assert_eq!(first, second, "{fixture} does not round-trip");
    }

    // The bundled exhaustive verification passes.
    let out = run(&["oracle-verify"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    println!(
        "PASS command-line contract: reports exact, exit codes 0/2/1 honored, fixtures round-trip"
    );
}
