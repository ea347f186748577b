//! Complete residuated lattices: the three standard structures on the unit
//! interval (Gödel, product, Łukasiewicz) over exact rationals, and general
//! finite residuated lattices given by tables.
//!
//! A residuated lattice bundles a bounded lattice (L, ∧, ∨, 0, 1) with a
//! commutative monoid (L, ⊗, 1) and the residuum →, linked by the adjunction
//!
//! ```text
//! x ⊗ y ≤ z   iff   x ≤ y → z
//! ```
//!
//! Everything downstream (relations, solution degrees, solvers) is generic
//! over [`ResiduatedLattice`], and all unit-interval arithmetic is exact
//! rational — equality of iterates is decided bit-exactly, never with an
//! epsilon.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigRational, One, Zero};

use crate::error::{Error, Result};

/// Operations of a complete residuated lattice over carrier `Value`.
///
/// `Value`'s `Eq`/`Ord`/`Hash` are structural (used for storage and bit-exact
/// comparison); the lattice order is [`leq`](Self::leq). For the rational
/// structures the two orders coincide, for table-driven finite lattices they
/// need not.
pub trait ResiduatedLattice: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Value: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn bottom(&self) -> Self::Value;
    fn top(&self) -> Self::Value;
    fn leq(&self, a: &Self::Value, b: &Self::Value) -> bool;
    fn meet(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn join(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// The monoid operation ⊗ (unit = top).
    fn otimes(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// The residuum a → b, the greatest x with x ⊗ a ≤ b.
    fn residuum(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// The biresiduum a ↔ b = (a → b) ∧ (b → a), the degree of equality.
    fn biresiduum(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.meet(&self.residuum(a, b), &self.residuum(b, a))
    }
    /// True iff ⊗ is idempotent, which forces ⊗ = ∧ (a Heyting algebra).
    fn is_heyting(&self) -> bool;
    /// Render a value the way the CLI serializes it ("p/q" or an element name).
    fn format_value(&self, v: &Self::Value) -> String;
    /// Inverse of [`format_value`](Self::format_value); also accepts exact
    /// decimals like "0.9" for the rational structures.
    fn parse_value(&self, s: &str) -> Result<Self::Value>;
}

/// An exact rational in [0, 1]; the carrier of the three standard structures.
///
/// Always stored reduced (that is what `BigRational` guarantees), so `Eq` and
/// `Hash` agree with numeric equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct UnitValue(BigRational);

impl UnitValue {
    pub fn new(r: BigRational) -> Result<Self> {
        if r < BigRational::zero() || r > BigRational::one() {
            return Err(Error::InvalidValue(format!("{r} is outside [0, 1]")));
        }
        Ok(UnitValue(r))
    }

    /// Convenience constructor from small integers: `UnitValue::from_ratio(4, 5)`.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidValue("zero denominator".into()));
        }
        Self::new(Ratio::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        UnitValue(BigRational::zero())
    }

    pub fn one() -> Self {
        UnitValue(BigRational::one())
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational prints "p/q", or just "p" when the denominator is 1.
        write!(f, "{}", self.0)
    }
}

impl FromStr for UnitValue {
    type Err = Error;

    /// Accepts "p/q", a bare integer, or an exact decimal ("0.9" = 9/10).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidValue(format!("cannot parse {s:?} as a rational in [0, 1]"));
        let r = if let Some((p, q)) = s.split_once('/') {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::InvalidValue(format!("{s:?} has a zero denominator")));
            }
            Ratio::new(p, q)
        } else if let Some((whole, frac)) = s.split_once('.') {
            if !frac.chars().all(|c| c.is_ascii_digit()) || frac.is_empty() {
                return Err(bad());
            }
            if s.starts_with('-') {
                return Err(Error::InvalidValue(format!("{s:?} is negative")));
            }
            let whole = if whole.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(whole).map_err(|_| bad())?
            };
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac = BigInt::from_str(frac).map_err(|_| bad())?;
            Ratio::new(whole * &scale + frac, scale)
        } else {
            Ratio::from_integer(BigInt::from_str(s).map_err(|_| bad())?)
        };
        UnitValue::new(r)
    }
}

/// One of the three standard complete residuated lattices on [0, 1].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UnitStructure {
    /// ⊗ = min, a → b = 1 if a ≤ b else b. The only Heyting algebra of the three.
    Godel,
    /// ⊗ = multiplication, a → b = 1 if a ≤ b else b/a. Also known as Goguen.
    Product,
    /// ⊗ = max(a + b − 1, 0), a → b = min(1 − a + b, 1), a ↔ b = 1 − |a − b|.
    Lukasiewicz,
}

pub fn godel() -> UnitStructure {
    UnitStructure::Godel
}

pub fn product() -> UnitStructure {
    UnitStructure::Product
}

pub fn lukasiewicz() -> UnitStructure {
    UnitStructure::Lukasiewicz
}

impl ResiduatedLattice for UnitStructure {
    type Value = UnitValue;

    fn bottom(&self) -> UnitValue {
        UnitValue::zero()
    }

    fn top(&self) -> UnitValue {
        UnitValue::one()
    }

    fn leq(&self, a: &UnitValue, b: &UnitValue) -> bool {
        a <= b
    }

    fn meet(&self, a: &UnitValue, b: &UnitValue) -> UnitValue {
        a.min(b).clone()
    }

    fn join(&self, a: &UnitValue, b: &UnitValue) -> UnitValue {
        a.max(b).clone()
    }

    fn otimes(&self, a: &UnitValue, b: &UnitValue) -> UnitValue {
        match self {
            UnitStructure::Godel => a.min(b).clone(),
            UnitStructure::Product => UnitValue(&a.0 * &b.0),
            UnitStructure::Lukasiewicz => {
                let sum = &a.0 + &b.0 - BigRational::one();
                if sum < BigRational::zero() {
                    UnitValue::zero()
                } else {
                    UnitValue(sum)
                }
            }
        }
    }

    fn residuum(&self, a: &UnitValue, b: &UnitValue) -> UnitValue {
        if a <= b {
            return UnitValue::one();
        }
        match self {
            UnitStructure::Godel => b.clone(),
            // a > b ≥ 0 here, so a > 0 and the quotient is well-defined; it is
            // < 1 by a > b, hence stays in the carrier.
            UnitStructure::Product => UnitValue(&b.0 / &a.0),
            UnitStructure::Lukasiewicz => UnitValue(BigRational::one() - &a.0 + &b.0),
        }
    }

    fn is_heyting(&self) -> bool {
        matches!(self, UnitStructure::Godel)
    }

    fn format_value(&self, v: &UnitValue) -> String {
        v.to_string()
    }

    fn parse_value(&self, s: &str) -> Result<UnitValue> {
        s.parse()
    }
}

/// An element of a [`FiniteLattice`], a plain index into its tables.
///
/// Elements only make sense together with the lattice that produced them;
/// mixing lattices is caught at the relation level, where operands carry
/// their lattice and are compared before any arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FinElem(usize);

impl FinElem {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite residuated lattice described by explicit tables.
///
/// Construction validates everything the structure promises: the order is a
/// bounded *distributive* lattice, ⊗ is a commutative monoid with unit = top,
/// and the residuum satisfies the adjunction for every triple. When no
/// residuum table is supplied it is derived as a → b = ⋁{x : x ⊗ a ≤ b} and
/// then validated like a supplied one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteLattice {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    otimes: Vec<Vec<usize>>,
    residuum: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    heyting: bool,
}

impl FiniteLattice {
    /// Build and validate a lattice from an order table, a ⊗ table, and an
    /// optional residuum table (derived when absent). Tables are indexed by
    /// position in `names`.
    pub fn from_tables(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        otimes: Vec<Vec<usize>>,
        residuum: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = names.len();
        let fail = |msg: String| Err(Error::InvalidLattice(msg));
        if n == 0 {
            return fail("no elements".into());
        }
        {
            let mut seen = BTreeSet::new();
            for name in &names {
                if !seen.insert(name) {
                    return fail(format!("duplicate element name {name:?}"));
                }
            }
        }
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|row| row.len() == n);
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return fail("order table is not |L|x|L|".into());
        }
        if !square(&otimes) || otimes.iter().flatten().any(|&v| v >= n) {
            return fail("product table is not a valid |L|x|L| index table".into());
        }
        if let Some(res) = &residuum {
            if !square(res) || res.iter().flatten().any(|&v| v >= n) {
                return fail("residuum table is not a valid |L|x|L| index table".into());
            }
        }

        // Partial order.
        for a in 0..n {
            if !leq[a][a] {
                return fail(format!("order not reflexive at {:?}", names[a]));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return fail(format!(
                        "order not antisymmetric between {:?} and {:?}",
                        names[a], names[b]
                    ));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return fail(format!(
                            "order not transitive via {:?} -> {:?} -> {:?}",
                            names[a], names[b], names[c]
                        ));
                    }
                }
            }
        }

        // Meets and joins must exist (greatest lower / least upper bounds).
        let mut meet = vec![vec![0usize; n]; n];
        let mut join = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let glb = (0..n)
                    .filter(|&x| leq[x][a] && leq[x][b])
                    .find(|&x| (0..n).all(|y| !(leq[y][a] && leq[y][b]) || leq[y][x]));
                let lub = (0..n)
                    .filter(|&x| leq[a][x] && leq[b][x])
                    .find(|&x| (0..n).all(|y| !(leq[a][y] && leq[b][y]) || leq[x][y]));
                match (glb, lub) {
                    (Some(g), Some(l)) => {
                        meet[a][b] = g;
                        join[a][b] = l;
                    }
                    _ => {
                        return fail(format!(
                            "{:?} and {:?} lack a meet or a join",
                            names[a], names[b]
                        ))
                    }
                }
            }
        }
        let bottom = match (0..n).find(|&x| (0..n).all(|y| leq[x][y])) {
            Some(b) => b,
            None => return fail("no bottom element".into()),
        };
        let top = match (0..n).find(|&x| (0..n).all(|y| leq[y][x])) {
            Some(t) => t,
            None => return fail("no top element".into()),
        };

        // Distributivity.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return fail(format!(
                            "lattice not distributive at ({:?}, {:?}, {:?})",
                            names[a], names[b], names[c]
                        ));
                    }
                }
            }
        }

        // Commutative monoid with unit = top.
        for a in 0..n {
            if otimes[a][top] != a || otimes[top][a] != a {
                return fail(format!("top is not a unit for ⊗ at {:?}", names[a]));
            }
            for b in 0..n {
                if otimes[a][b] != otimes[b][a] {
                    return fail(format!(
                        "⊗ not commutative at ({:?}, {:?})",
                        names[a], names[b]
                    ));
                }
                for c in 0..n {
                    if otimes[otimes[a][b]][c] != otimes[a][otimes[b][c]] {
                        return fail(format!(
                            "⊗ not associative at ({:?}, {:?}, {:?})",
                            names[a], names[b], names[c]
                        ));
                    }
                }
            }
        }

        // Residuum: derive as the join of {x : x ⊗ a ≤ b} when absent, then
        // validate the adjunction exhaustively either way.
        let residuum = match residuum {
            Some(r) => r,
            None => {
                let mut table = vec![vec![bottom; n]; n];
                for a in 0..n {
                    for b in 0..n {
                        let mut acc = bottom;
                        for x in 0..n {
                            if leq[otimes[x][a]][b] {
                                acc = join[acc][x];
                            }
                        }
                        table[a][b] = acc;
                    }
                }
                table
            }
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if leq[otimes[x][y]][z] != leq[x][residuum[y][z]] {
                        return fail(format!(
                            "residuation fails at x={:?} y={:?} z={:?}",
                            names[x], names[y], names[z]
                        ));
                    }
                }
            }
        }

        let heyting = (0..n).all(|a| otimes[a][a] == a);
        Ok(FiniteLattice {
            names,
            leq,
            meet,
            join,
            otimes,
            residuum,
            bottom,
            top,
            heyting,
        })
    }

    /// The n-element Gödel chain 0 < 1/(n−1) < ... < 1 with ⊗ = min.
    /// `godel_chain(2)` is the two-element Boolean lattice.
    pub fn godel_chain(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLattice(
                "a chain needs at least 2 elements".into(),
            ));
        }
        let names = (0..n)
            .map(|k| Ratio::new(BigInt::from(k), BigInt::from(n - 1)).to_string())
            .collect();
        let leq = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
        let otimes = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
        Self::from_tables(names, leq, otimes, None)
    }

    /// Number of elements in the carrier.
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn element(&self, name: &str) -> Option<FinElem> {
        self.names.iter().position(|n| n == name).map(FinElem)
    }

    pub fn elements(&self) -> impl Iterator<Item = FinElem> + '_ {
        (0..self.names.len()).map(FinElem)
    }

    pub fn name(&self, e: FinElem) -> &str {
        &self.names[e.0]
    }
}

impl ResiduatedLattice for FiniteLattice {
    type Value = FinElem;

    fn bottom(&self) -> FinElem {
        FinElem(self.bottom)
    }

    fn top(&self) -> FinElem {
        FinElem(self.top)
    }

    fn leq(&self, a: &FinElem, b: &FinElem) -> bool {
        self.leq[a.0][b.0]
    }

    fn meet(&self, a: &FinElem, b: &FinElem) -> FinElem {
        FinElem(self.meet[a.0][b.0])
    }

    fn join(&self, a: &FinElem, b: &FinElem) -> FinElem {
        FinElem(self.join[a.0][b.0])
    }

    fn otimes(&self, a: &FinElem, b: &FinElem) -> FinElem {
        FinElem(self.otimes[a.0][b.0])
    }

    fn residuum(&self, a: &FinElem, b: &FinElem) -> FinElem {
        FinElem(self.residuum[a.0][b.0])
    }

    fn is_heyting(&self) -> bool {
        self.heyting
    }

    fn format_value(&self, v: &FinElem) -> String {
        self.names[v.0].clone()
    }

    fn parse_value(&self, s: &str) -> Result<FinElem> {
        self.element(s)
            .ok_or_else(|| Error::InvalidValue(format!("{s:?} is not an element of this lattice")))
    }
}

/// Closure of `seeds` (plus 0 and 1) under ∧, ∨, ⊗ and →, truncated once it
/// grows past `cap` elements.
///
/// Returns the generated set in sorted order and whether the closure was
/// exhausted. `exhausted = false` means the true subalgebra has more than
/// `cap` elements — possibly infinitely many; finiteness of a generated
/// subalgebra is not decidable in general, which is exactly why the solvers
/// carry an iteration cap instead of assuming termination.
pub fn generate_subalgebra<L: ResiduatedLattice>(
    lattice: &L,
    seeds: &[L::Value],
    cap: usize,
) -> (Vec<L::Value>, bool) {
    let mut set: BTreeSet<L::Value> = seeds.iter().cloned().collect();
    set.insert(lattice.bottom());
    set.insert(lattice.top());
    loop {
        if set.len() > cap {
            return (set.into_iter().collect(), false);
        }
        let current: Vec<L::Value> = set.iter().cloned().collect();
        let before = set.len();
        for a in &current {
            for b in &current {
                set.insert(lattice.meet(a, b));
                set.insert(lattice.join(a, b));
                set.insert(lattice.otimes(a, b));
                set.insert(lattice.residuum(a, b));
            }
        }
        if set.len() == before {
            // No growth, and the cap check at the top of the loop already
            // passed: the closure is complete.
            return (set.into_iter().collect(), true);
        }
    }
}
