//! Command-line front end and the JSON problem/report formats.
//!
//! A problem file describes one instance:
//!
//! ```json
//! {
//!   "lattice": "product",
//!   "universe": ["n1", "n2"],
//!   "relations": { "R": [["9/10", "0"], ["1/2", "1"]] },
//!   "family": ["R"],
//!   "x0": "universal"
//! }
//! ```
//!
//! `lattice` is `"godel"`, `"product"`, `"lukasiewicz"`, or an inline table
//! description `{ "elements": [...], "leq": [[bool]], "otimes": [[name]],
//! "residuum": [[name]] }` (residuum optional, derived when absent). Matrix
//! entries are reduced fraction strings for the unit-interval structures and
//! element names for table lattices. `x0` (optional, also available as
//! `--x0`) is `"identity"`, `"universal"`, or the name of a relation in
//! `relations`; the flag wins over the file field.
//!
//! Every command exits 0 on success, 2 when a run ends without a certificate
//! (iteration cap, failed verification), and 1 on any input error. All
//! emitted values are canonical: reduced fractions, stable key order.

use crate::degree::{sd, RelationFamily, SystemKind};
use crate::error::{Error, Result};
use crate::lattice::{
    godel, lukasiewicz, product, FiniteLattice, ResiduatedLattice, UnitStructure,
};
use crate::network::{aggregate, AggregationMethod, FuzzyNetwork};
use crate::oracle::{
    check_preorder_cut_agreement, greatest_cut_member, EnumerationSpec, DEFAULT_BUDGET,
};
use crate::relation::{FuzzyRelation, Universe};
use crate::solver::{
    solve_equivalence, solve_greatest, solve_preorder, SolveReport, SolveStatus, SolverConfig,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

/// The on-disk problem format. Parsing it and serializing it back is
/// lossless up to canonical fraction form and key order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub lattice: LatticeSpec,
    pub universe: Vec<String>,
    pub relations: BTreeMap<String, Vec<Vec<String>>>,
    /// Names of the relations forming the system, in order.
    pub family: Vec<String>,
    /// Default initial bound: `identity`, `universal`, or a relation name.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x0: Option<String>,
}

/// Either one of the built-in unit-interval structures by name, or a finite
/// lattice given by tables.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeSpec {
    Named(String),
    Tables(FiniteLatticeSpec),
}

/// Tables of a finite residuated lattice, entries by element name.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteLatticeSpec {
    pub elements: Vec<String>,
    /// leq[i][j] says whether elements[i] ≤ elements[j].
    pub leq: Vec<Vec<bool>>,
    pub otimes: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residuum: Option<Vec<Vec<String>>>,
}

/// A parsed problem over one of the two lattice representations.
pub enum Problem {
    Unit(LoadedProblem<UnitStructure>),
    Finite(LoadedProblem<FiniteLattice>),
}

/// A problem file resolved into library types.
pub struct LoadedProblem<L: ResiduatedLattice> {
    pub lattice: Arc<L>,
    pub universe: Arc<Universe>,
    pub relations: BTreeMap<String, FuzzyRelation<L>>,
    /// Family member names, in file order.
    pub names: Vec<String>,
    pub family: RelationFamily<L>,
    /// The file's `x0` field, unresolved.
    pub x0: Option<String>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadInput(msg.into())
}

impl<L: ResiduatedLattice> LoadedProblem<L> {
    fn build(lattice: Arc<L>, file: &ProblemFile) -> Result<Self> {
        let universe = Arc::new(Universe::new(file.universe.iter().cloned())?);
        let mut relations = BTreeMap::new();
        for (name, rows) in &file.relations {
            let parsed = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| lattice.parse_value(s))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
                .and_then(|rows| FuzzyRelation::new(lattice.clone(), universe.clone(), rows))
                .map_err(|e| bad(format!("relation {name:?}: {e}")))?;
            relations.insert(name.clone(), parsed);
        }
        let mut members = Vec::with_capacity(file.family.len());
        let mut seen = std::collections::BTreeSet::new();
        for name in &file.family {
            if !seen.insert(name) {
                return Err(bad(format!("relation {name:?} listed twice in the family")));
            }
            members.push(
                relations
                    .get(name)
                    .ok_or_else(|| bad(format!("family lists unknown relation {name:?}")))?
                    .clone(),
            );
        }
        let family = RelationFamily::new(lattice.clone(), universe.clone(), members)?;
        let problem = LoadedProblem {
            lattice,
            universe,
            relations,
            names: file.family.clone(),
            family,
            x0: file.x0.clone(),
        };
        if let Some(x0) = &problem.x0 {
            problem.resolve_x0(Some(x0))?;
        }
        Ok(problem)
    }

    /// Resolve an initial-bound reference; `None` falls back to the file's
    /// `x0` field, and `Ok(None)` means the solver default (universal).
    pub fn resolve_x0(&self, flag: Option<&str>) -> Result<Option<FuzzyRelation<L>>> {
        let reference = flag.or(self.x0.as_deref());
        Ok(match reference {
            None | Some("universal") => None,
            Some("identity") => Some(FuzzyRelation::identity(
                self.lattice.clone(),
                self.universe.clone(),
            )),
            Some(name) => Some(
                self.relations
                    .get(name)
                    .ok_or_else(|| bad(format!("x0 names unknown relation {name:?}")))?
                    .clone(),
            ),
        })
    }

    fn matrix(&self, r: &FuzzyRelation<L>) -> Vec<Vec<String>> {
        r.to_rows()
            .iter()
            .map(|row| row.iter().map(|v| self.lattice.format_value(v)).collect())
            .collect()
    }
}

fn build_finite(spec: &FiniteLatticeSpec) -> Result<FiniteLattice> {
    let index: BTreeMap<&str, usize> = spec
        .elements
        .iter()
        .enumerate()
        .map(|(i, name)| (name.as_str(), i))
        .collect();
    let table = |t: &Vec<Vec<String>>, what: &str| -> Result<Vec<Vec<usize>>> {
        t.iter()
            .map(|row| {
                row.iter()
                    .map(|name| {
                        index.get(name.as_str()).copied().ok_or_else(|| {
                            bad(format!("{what} table uses unknown element {name:?}"))
                        })
                    })
                    .collect()
            })
            .collect()
    };
    let otimes = table(&spec.otimes, "otimes")?;
    let residuum = spec
        .residuum
        .as_ref()
        .map(|t| table(t, "residuum"))
        .transpose()?;
    FiniteLattice::from_tables(spec.elements.clone(), spec.leq.clone(), otimes, residuum)
}

/// Parse a problem file into library types, validating everything.
pub fn load_problem_str(text: &str) -> Result<Problem> {
    let file: ProblemFile = serde_json::from_str(text)?;
    match &file.lattice {
        LatticeSpec::Named(name) => {
            let structure = match name.as_str() {
                "godel" => godel(),
                "product" => product(),
                "lukasiewicz" => lukasiewicz(),
                other => {
                    return Err(bad(format!(
                        "unknown lattice {other:?}; expected godel, product, lukasiewicz, or a table description"
                    )))
                }
            };
            Ok(Problem::Unit(LoadedProblem::build(
                Arc::new(structure),
                &file,
            )?))
        }
        LatticeSpec::Tables(spec) => Ok(Problem::Finite(LoadedProblem::build(
            Arc::new(build_finite(spec)?),
            &file,
        )?)),
    }
}

/// Read and parse a problem file.
pub fn load_problem(path: &Path) -> Result<Problem> {
    load_problem_str(&std::fs::read_to_string(path)?)
}

impl Problem {
    /// Serialize back to the on-disk format, values in canonical form.
    pub fn to_file(&self) -> ProblemFile {
        match self {
            Problem::Unit(p) => {
                let name = match &*p.lattice {
                    UnitStructure::Godel => "godel",
                    UnitStructure::Product => "product",
                    UnitStructure::Lukasiewicz => "lukasiewicz",
                };
                to_file_with(p, LatticeSpec::Named(name.to_string()))
            }
            Problem::Finite(p) => {
                let l = &p.lattice;
                let elems: Vec<_> = l.elements().collect();
                let names = |t: &dyn Fn(usize, usize) -> String| -> Vec<Vec<String>> {
                    (0..elems.len())
                        .map(|i| (0..elems.len()).map(|j| t(i, j)).collect())
                        .collect()
                };
                let spec = FiniteLatticeSpec {
                    elements: elems.iter().map(|&e| l.name(e).to_string()).collect(),
                    leq: elems
                        .iter()
                        .map(|a| elems.iter().map(|b| l.leq(a, b)).collect())
                        .collect(),
                    otimes: names(&|i, j| l.name(l.otimes(&elems[i], &elems[j])).to_string()),
                    residuum: Some(names(&|i, j| {
                        l.name(l.residuum(&elems[i], &elems[j])).to_string()
                    })),
                };
                to_file_with(p, LatticeSpec::Tables(spec))
            }
        }
    }
}

fn to_file_with<L: ResiduatedLattice>(p: &LoadedProblem<L>, lattice: LatticeSpec) -> ProblemFile {
    ProblemFile {
        lattice,
        universe: p.universe.names().to_vec(),
        relations: p
            .relations
            .iter()
            .map(|(name, r)| (name.clone(), p.matrix(r)))
            .collect(),
        family: p.names.clone(),
        x0: p.x0.clone(),
    }
}

#[derive(Parser)]
#[command(
    name = "wls",
    version,
    about = "Solve weakly linear systems of fuzzy relation inequalities to a prescribed degree"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Greatest relation solving the system to the target degree
    Solve(SolveArgs),
    /// A fuzzy preorder solving the system to the target degree
    SolvePreorder(SolveArgs),
    /// A fuzzy equivalence solving the system to the target degree
    SolveEquivalence(SolveArgs),
    /// Degree to which a named relation solves the system
    Degree(DegreeArgs),
    /// Solve for a preorder/equivalence and factor the network by it
    Aggregate(AggregateArgs),
    /// Cross-check the solver against brute-force enumeration
    OracleVerify(OracleVerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Wls1,
    Wls2,
    Wls3,
}

impl From<KindArg> for SystemKind {
    fn from(k: KindArg) -> SystemKind {
        match k {
            KindArg::Wls1 => SystemKind::Wls1,
            KindArg::Wls2 => SystemKind::Wls2,
            KindArg::Wls3 => SystemKind::Wls3,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Preorder,
    Equivalence,
}

#[derive(Args)]
struct SolveArgs {
    /// Problem file (JSON)
    #[arg(long)]
    input: PathBuf,
    /// Target degree x: a fraction like 4/5, or an element name for table lattices
    #[arg(long)]
    degree: String,
    /// Which side(s) of the system constrain the iteration
    #[arg(long, value_enum, default_value_t = KindArg::Wls3)]
    kind: KindArg,
    /// Initial bound: identity, universal, or a relation name from the file
    #[arg(long)]
    x0: Option<String>,
    /// Iteration cap; exceeding it exits 2
    #[arg(long, default_value_t = 1000)]
    max_iter: usize,
    /// Include every iterate in the report
    #[arg(long)]
    trace: bool,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DegreeArgs {
    /// Problem file (JSON)
    #[arg(long)]
    input: PathBuf,
    /// Name of the candidate relation in the file
    #[arg(long)]
    relation: String,
    /// Solution-degree functional, 1..=9
    #[arg(long)]
    kind: u8,
    /// Write the value here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AggregateArgs {
    /// Problem file (JSON); the family is the network's edge labelling
    #[arg(long)]
    input: PathBuf,
    /// Target degree x for the aggregating relation
    #[arg(long)]
    degree: String,
    /// Aggregate by a preorder or by an equivalence
    #[arg(long, value_enum, default_value_t = MethodArg::Preorder)]
    method: MethodArg,
    /// Which side(s) of the system constrain the iteration
    #[arg(long, value_enum, default_value_t = KindArg::Wls3)]
    kind: KindArg,
    /// Initial bound: identity, universal, or a relation name from the file
    #[arg(long)]
    x0: Option<String>,
    /// Iteration cap; exceeding it exits 2 and emits no factor network
    #[arg(long, default_value_t = 1000)]
    max_iter: usize,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleVerifyArgs {
    /// Size of the Gödel chain lattice to sweep
    #[arg(long, default_value_t = 3)]
    chain: usize,
    /// Number of nodes in the swept universe
    #[arg(long, default_value_t = 2)]
    universe_size: usize,
    /// Maximum number of matrices any single enumeration may visit
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

/// Parse arguments from the process environment and run one command.
/// Returns the process exit code: 0 success, 2 no-certificate, 1 input error.
pub fn run() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => match dispatch(&cli.command) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            code
        }
    }
}

fn dispatch(command: &Command) -> Result<i32> {
    match command {
        Command::Solve(args) => run_solve(args, Target::Greatest),
        Command::SolvePreorder(args) => run_solve(args, Target::Preorder),
        Command::SolveEquivalence(args) => run_solve(args, Target::Equivalence),
        Command::Degree(args) => run_degree(args),
        Command::Aggregate(args) => run_aggregate(args),
        Command::OracleVerify(args) => run_oracle_verify(args),
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => say(text),
    }
    Ok(())
}

/// Print a line to stdout, exiting quietly if the reading end has gone away.
fn say(text: &str) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{text}").is_err() {
        std::process::exit(0);
    }
}

#[derive(Clone, Copy)]
enum Target {
    Greatest,
    Preorder,
    Equivalence,
}

#[derive(Serialize)]
struct ReportJson {
    status: String,
    kind: String,
    degree: String,
    iterations: usize,
    solution_degree: String,
    relation: Vec<Vec<String>>,
    equality_degrees: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<Vec<Vec<String>>>>,
}

fn status_name(status: SolveStatus) -> String {
    match status {
        SolveStatus::Converged => "converged".to_string(),
        SolveStatus::IterationCapReached => "iteration-cap-reached".to_string(),
    }
}

fn kind_name(kind: KindArg) -> String {
    match kind {
        KindArg::Wls1 => "wls1",
        KindArg::Wls2 => "wls2",
        KindArg::Wls3 => "wls3",
    }
    .to_string()
}

fn report_json<L: ResiduatedLattice>(
    p: &LoadedProblem<L>,
    args: &SolveArgs,
    degree: &L::Value,
    report: &SolveReport<L>,
) -> ReportJson {
    ReportJson {
        status: status_name(report.status),
        kind: kind_name(args.kind),
        degree: p.lattice.format_value(degree),
        iterations: report.iterations,
        solution_degree: p.lattice.format_value(&report.solution_degree),
        relation: p.matrix(&report.relation),
        equality_degrees: report
            .equality_degrees
            .iter()
            .map(|d| p.lattice.format_value(d))
            .collect(),
        trace: report
            .trace
            .as_ref()
            .map(|t| t.iter().map(|r| p.matrix(r)).collect()),
    }
}

fn run_solve(args: &SolveArgs, target: Target) -> Result<i32> {
    fn go<L: ResiduatedLattice>(
        p: &LoadedProblem<L>,
        args: &SolveArgs,
        target: Target,
    ) -> Result<(ReportJson, SolveStatus)> {
        let degree = p.lattice.parse_value(&args.degree)?;
        let mut config = SolverConfig::new(degree)
            .kind(args.kind.into())
            .max_iterations(args.max_iter)
            .trace(args.trace);
        if let Some(x0) = p.resolve_x0(args.x0.as_deref())? {
            config = config.x0(x0);
        }
        let report = match target {
            Target::Greatest => solve_greatest(&p.family, &config)?,
            Target::Preorder => solve_preorder(&p.family, &config)?,
            Target::Equivalence => solve_equivalence(&p.family, &config)?,
        };
        Ok((report_json(p, args, &config.degree, &report), report.status))
    }
    let (json, status) = match &load_problem(&args.input)? {
        Problem::Unit(p) => go(p, args, target)?,
        Problem::Finite(p) => go(p, args, target)?,
    };
    emit(args.output.as_ref(), &serde_json::to_string_pretty(&json)?)?;
    Ok(match status {
        SolveStatus::Converged => 0,
        SolveStatus::IterationCapReached => 2,
    })
}

fn run_degree(args: &DegreeArgs) -> Result<i32> {
    fn go<L: ResiduatedLattice>(p: &LoadedProblem<L>, args: &DegreeArgs) -> Result<String> {
        let candidate = p
            .relations
            .get(&args.relation)
            .ok_or_else(|| bad(format!("no relation named {:?} in the file", args.relation)))?;
        let value = sd(args.kind, &p.family, candidate)?;
        Ok(p.lattice.format_value(&value))
    }
    let text = match &load_problem(&args.input)? {
        Problem::Unit(p) => go(p, args)?,
        Problem::Finite(p) => go(p, args)?,
    };
    emit(args.output.as_ref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct AggregateJson {
    status: String,
    method: String,
    kind: String,
    degree: String,
    iterations: usize,
    solution_degree: String,
    relation: Vec<Vec<String>>,
    equality_degrees: Vec<String>,
    factor: Option<FactorJson>,
}

#[derive(Serialize)]
struct FactorJson {
    blocks: Vec<Vec<String>>,
    universe: Vec<String>,
    equivalence: Vec<Vec<String>>,
    relations: BTreeMap<String, Vec<Vec<String>>>,
}

fn run_aggregate(args: &AggregateArgs) -> Result<i32> {
    fn go<L: ResiduatedLattice>(
        p: &LoadedProblem<L>,
        args: &AggregateArgs,
    ) -> Result<(AggregateJson, SolveStatus)> {
        let degree = p.lattice.parse_value(&args.degree)?;
        let mut config = SolverConfig::new(degree)
            .kind(args.kind.into())
            .max_iterations(args.max_iter);
        if let Some(x0) = p.resolve_x0(args.x0.as_deref())? {
            config = config.x0(x0);
        }
        let method = match args.method {
            MethodArg::Preorder => AggregationMethod::Preorder,
            MethodArg::Equivalence => AggregationMethod::Equivalence,
        };
        let network = FuzzyNetwork::named(p.names.clone(), p.family.clone())?;
        let result = aggregate(&network, method, &config)?;
        let factor = result.factor.as_ref().map(|f| FactorJson {
            blocks: f.blocks.clone(),
            universe: f.universe().names().to_vec(),
            equivalence: p.matrix(&f.equivalence),
            relations: f
                .names
                .iter()
                .cloned()
                .zip(f.family.members().iter().map(|r| p.matrix(r)))
                .collect(),
        });
        let json = AggregateJson {
            status: status_name(result.report.status),
            method: match args.method {
                MethodArg::Preorder => "preorder",
                MethodArg::Equivalence => "equivalence",
            }
            .to_string(),
            kind: kind_name(args.kind),
            degree: p.lattice.format_value(&config.degree),
            iterations: result.report.iterations,
            solution_degree: p.lattice.format_value(&result.report.solution_degree),
            relation: p.matrix(&result.report.relation),
            equality_degrees: result
                .report
                .equality_degrees
                .iter()
                .map(|d| p.lattice.format_value(d))
                .collect(),
            factor,
        };
        Ok((json, result.report.status))
    }
    let (json, status) = match &load_problem(&args.input)? {
        Problem::Unit(p) => go(p, args)?,
        Problem::Finite(p) => go(p, args)?,
    };
    emit(args.output.as_ref(), &serde_json::to_string_pretty(&json)?)?;
    Ok(match status {
        SolveStatus::Converged => 0,
        SolveStatus::IterationCapReached => 2,
    })
}

fn run_oracle_verify(args: &OracleVerifyArgs) -> Result<i32> {
    let lattice = Arc::new(FiniteLattice::godel_chain(args.chain)?);
    let universe = Arc::new(Universe::numbered(args.universe_size)?);
    let elements: Vec<_> = lattice.elements().collect();
    let cells = universe.size() * universe.size();
    let mut family_count: u128 = 1;
    for _ in 0..cells {
        family_count =
            family_count
                .checked_mul(elements.len() as u128)
                .ok_or(Error::BudgetExceeded {
                    required: u128::MAX,
                    budget: args.budget,
                })?;
    }
    if family_count > args.budget {
        return Err(Error::BudgetExceeded {
            required: family_count,
            budget: args.budget,
        });
    }

    let mut solver_runs = 0usize;
    let mut mismatches = 0usize;
    let mut agreement_violations = 0usize;
    let mut preorders_checked = 0usize;

    let mut digits = vec![0usize; cells];
    'families: loop {
        let r = FuzzyRelation::from_fn(lattice.clone(), universe.clone(), |u, v| {
            elements[digits[u * universe.size() + v]]
        });
        let family = RelationFamily::single(r);

        for kind in [SystemKind::Wls1, SystemKind::Wls2, SystemKind::Wls3] {
            for &x in &elements {
                let config = SolverConfig::new(x).kind(kind).max_iterations(10_000);
                let report = solve_greatest(&family, &config)?;
                let spec =
                    EnumerationSpec::new(family.clone(), kind.sd_kind(), x).budget(args.budget);
                let expected = greatest_cut_member(&spec)?;
                solver_runs += 1;
                if report.status != SolveStatus::Converged || report.relation != expected {
                    mismatches += 1;
                    if mismatches <= 5 {
                        eprintln!(
                            "mismatch: kind {kind:?}, degree {}, family member:\n{}solver:\n{}oracle:\n{}",
                            lattice.format_value(&x),
                            family.members()[0],
                            report.relation,
                            expected
                        );
                    }
                }
            }
        }

        let spec = EnumerationSpec::new(family.clone(), 1, lattice.top()).budget(args.budget);
        let agreement = check_preorder_cut_agreement(&spec)?;
        preorders_checked += agreement.preorders_checked;
        agreement_violations += agreement.violations.len();

        let mut pos = cells;
        loop {
            if pos == 0 {
                break 'families;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < elements.len() {
                break;
            }
            digits[pos] = 0;
        }
    }

    say(&format!(
        "checked {family_count} single-relation families over a {}-element chain, {} nodes",
        elements.len(),
        universe.size()
    ));
    say(&format!(
        "solver vs. exhaustive greatest member: {solver_runs} runs, {mismatches} mismatches"
    ));
    say(&format!(
        "preorder cut agreement across functional triples: {preorders_checked} preorder checks, {agreement_violations} violations"
    ));
    Ok(if mismatches == 0 && agreement_violations == 0 {
        0
    } else {
        2
    })
}
