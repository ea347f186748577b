//! Fuzzy sets and fuzzy relations over a finite universe, with the calculus
//! the solvers are built from: sup-⊗ composition, the four residuals,
//! inclusion/equality degrees, reflexive-transitive closure, and the
//! preorder/equivalence predicates.
//!
//! Conventions: row `u` of a relation is the afterset `uR`, column `u` is the
//! foreset `Ru`. All residual formulas are stated (and implemented) through
//! aftersets and foresets so that there is exactly one definitional path.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::ResiduatedLattice;

/// A finite, nonempty, ordered set of named nodes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidUniverse(
                "a universe needs at least one node".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidUniverse(format!(
                    "duplicate node name {name:?}"
                )));
            }
        }
        Ok(Universe { names })
    }

    /// `n1, n2, ..., nk` — handy for examples and tests.
    pub fn numbered(size: usize) -> Result<Self> {
        Self::new((1..=size).map(|i| format!("n{i}")))
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A mapping from the universe into the lattice; also the shape of aftersets
/// and foresets.
#[derive(Clone, Debug)]
pub struct FuzzySet<L: ResiduatedLattice> {
    lattice: Arc<L>,
    universe: Arc<Universe>,
    values: Vec<L::Value>,
}

impl<L: ResiduatedLattice> PartialEq for FuzzySet<L> {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice
            && self.universe.names == other.universe.names
            && self.values == other.values
    }
}

impl<L: ResiduatedLattice> Eq for FuzzySet<L> {}

impl<L: ResiduatedLattice> FuzzySet<L> {
    pub fn new(
        lattice: impl Into<Arc<L>>,
        universe: impl Into<Arc<Universe>>,
        values: Vec<L::Value>,
    ) -> Result<Self> {
        let lattice = lattice.into();
        let universe = universe.into();
        if values.len() != universe.size() {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a universe of {} nodes",
                values.len(),
                universe.size()
            )));
        }
        Ok(FuzzySet {
            lattice,
            universe,
            values,
        })
    }

    pub fn lattice(&self) -> &Arc<L> {
        &self.lattice
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn values(&self) -> &[L::Value] {
        &self.values
    }

    pub fn get(&self, u: usize) -> &L::Value {
        &self.values[u]
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.universe.names != other.universe.names {
            return Err(Error::UniverseMismatch(
                "fuzzy sets over different universes".into(),
            ));
        }
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch(
                "fuzzy sets over different lattices".into(),
            ));
        }
        Ok(())
    }

    /// A ≲ B = ⋀_u A(u) → B(u), the degree to which A is contained in B.
    pub fn inclusion_degree(&self, other: &Self) -> Result<L::Value> {
        self.compatible(other)?;
        let l = &self.lattice;
        let mut acc = l.top();
        for (a, b) in self.values.iter().zip(&other.values) {
            acc = l.meet(&acc, &l.residuum(a, b));
        }
        Ok(acc)
    }

    /// A ≈ B = ⋀_u A(u) ↔ B(u), the degree to which A and B are equal.
    pub fn equality_degree(&self, other: &Self) -> Result<L::Value> {
        self.compatible(other)?;
        let l = &self.lattice;
        let mut acc = l.top();
        for (a, b) in self.values.iter().zip(&other.values) {
            acc = l.meet(&acc, &l.biresiduum(a, b));
        }
        Ok(acc)
    }

    /// ⋁_u A(u) ⊗ B(u) — the sup-⊗ "inner product" of two sets.
    pub fn dot(&self, other: &Self) -> Result<L::Value> {
        self.compatible(other)?;
        let l = &self.lattice;
        let mut acc = l.bottom();
        for (a, b) in self.values.iter().zip(&other.values) {
            acc = l.join(&acc, &l.otimes(a, b));
        }
        Ok(acc)
    }

    /// Row vector times matrix: (A ∘ R)(v) = ⋁_w A(w) ⊗ R(w, v).
    pub fn compose_relation(&self, r: &FuzzyRelation<L>) -> Result<Self> {
        if self.universe.names != r.universe.names {
            return Err(Error::UniverseMismatch(
                "set and relation universes differ".into(),
            ));
        }
        if self.lattice != r.lattice {
            return Err(Error::LatticeMismatch(
                "set and relation lattices differ".into(),
            ));
        }
        let l = &self.lattice;
        let n = self.universe.size();
        let values = (0..n)
            .map(|v| {
                let mut acc = l.bottom();
                for w in 0..n {
                    acc = l.join(&acc, &l.otimes(&self.values[w], r.get(w, v)));
                }
                acc
            })
            .collect();
        Ok(FuzzySet {
            lattice: self.lattice.clone(),
            universe: self.universe.clone(),
            values,
        })
    }
}

impl<L: ResiduatedLattice> fmt::Display for FuzzySet<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|v| self.lattice.format_value(v))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A square matrix of lattice values over a universe; immutable once built.
#[derive(Clone, Debug)]
pub struct FuzzyRelation<L: ResiduatedLattice> {
    lattice: Arc<L>,
    universe: Arc<Universe>,
    /// Row-major: entry (u, v) lives at u * |U| + v.
    entries: Vec<L::Value>,
}

impl<L: ResiduatedLattice> PartialEq for FuzzyRelation<L> {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice
            && self.universe.names == other.universe.names
            && self.entries == other.entries
    }
}

impl<L: ResiduatedLattice> Eq for FuzzyRelation<L> {}

impl<L: ResiduatedLattice> FuzzyRelation<L> {
    pub fn new(
        lattice: impl Into<Arc<L>>,
        universe: impl Into<Arc<Universe>>,
        rows: Vec<Vec<L::Value>>,
    ) -> Result<Self> {
        let lattice = lattice.into();
        let universe = universe.into();
        let n = universe.size();
        if rows.len() != n || rows.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "expected a {n}x{n} matrix for this universe"
            )));
        }
        Ok(FuzzyRelation {
            lattice,
            universe,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Parse a matrix of value strings with the lattice's own parser.
    pub fn from_rows_str(
        lattice: impl Into<Arc<L>>,
        universe: impl Into<Arc<Universe>>,
        rows: &[&[&str]],
    ) -> Result<Self> {
        let lattice = lattice.into();
        let parsed = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| lattice.parse_value(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, universe, parsed)
    }

    pub fn from_fn(
        lattice: impl Into<Arc<L>>,
        universe: impl Into<Arc<Universe>>,
        mut f: impl FnMut(usize, usize) -> L::Value,
    ) -> Self {
        let lattice = lattice.into();
        let universe = universe.into();
        let n = universe.size();
        let mut entries = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                entries.push(f(u, v));
            }
        }
        FuzzyRelation {
            lattice,
            universe,
            entries,
        }
    }

    /// The identity relation △ (1 on the diagonal, 0 elsewhere).
    pub fn identity(lattice: impl Into<Arc<L>>, universe: impl Into<Arc<Universe>>) -> Self {
        let lattice = lattice.into();
        let top = lattice.top();
        let bottom = lattice.bottom();
        Self::from_fn(lattice, universe, |u, v| {
            if u == v {
                top.clone()
            } else {
                bottom.clone()
            }
        })
    }

    /// The universal relation ▲ (1 everywhere).
    pub fn universal(lattice: impl Into<Arc<L>>, universe: impl Into<Arc<Universe>>) -> Self {
        let lattice = lattice.into();
        let top = lattice.top();
        Self::from_fn(lattice, universe, |_, _| top.clone())
    }

    pub fn lattice(&self) -> &Arc<L> {
        &self.lattice
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.universe.size()
    }

    pub fn get(&self, u: usize, v: usize) -> &L::Value {
        &self.entries[u * self.universe.size() + v]
    }

    pub fn row(&self, u: usize) -> &[L::Value] {
        let n = self.universe.size();
        &self.entries[u * n..(u + 1) * n]
    }

    pub fn to_rows(&self) -> Vec<Vec<L::Value>> {
        (0..self.size()).map(|u| self.row(u).to_vec()).collect()
    }

    pub(crate) fn compatible(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.universe, &other.universe)
            && self.universe.names != other.universe.names
        {
            return Err(Error::UniverseMismatch(
                "relations over different universes".into(),
            ));
        }
        if !Arc::ptr_eq(&self.lattice, &other.lattice) && self.lattice != other.lattice {
            return Err(Error::LatticeMismatch(
                "relations over different lattices".into(),
            ));
        }
        Ok(())
    }

    /// Sup-⊗ composition: (R ∘ P)(u, v) = ⋁_w R(u, w) ⊗ P(w, v).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let l = &self.lattice;
        let n = self.size();
        Ok(Self::from_fn(
            self.lattice.clone(),
            self.universe.clone(),
            |u, v| {
                let mut acc = l.bottom();
                for w in 0..n {
                    acc = l.join(&acc, &l.otimes(self.get(u, w), other.get(w, v)));
                }
                acc
            },
        ))
    }

    /// (R ∘ b)(u) = ⋁_w R(u, w) ⊗ b(w) — matrix times column vector.
    pub fn compose_set(&self, b: &FuzzySet<L>) -> Result<FuzzySet<L>> {
        if self.universe.names != b.universe().names {
            return Err(Error::UniverseMismatch(
                "relation and set universes differ".into(),
            ));
        }
        if self.lattice != *b.lattice() {
            return Err(Error::LatticeMismatch(
                "relation and set lattices differ".into(),
            ));
        }
        let l = &self.lattice;
        let n = self.size();
        let values = (0..n)
            .map(|u| {
                let mut acc = l.bottom();
                for w in 0..n {
                    acc = l.join(&acc, &l.otimes(self.get(u, w), b.get(w)));
                }
                acc
            })
            .collect();
        FuzzySet::new(self.lattice.clone(), self.universe.clone(), values)
    }

    /// R⁰ = △, Rⁿ⁺¹ = R ∘ Rⁿ.
    pub fn power(&self, n: usize) -> Self {
        let mut acc = Self::identity(self.lattice.clone(), self.universe.clone());
        for _ in 0..n {
            acc = self
                .compose(&acc)
                .expect("a relation is always compatible with itself");
        }
        acc
    }

    /// R⁻¹(u, v) = R(v, u).
    pub fn inverse(&self) -> Self {
        Self::from_fn(self.lattice.clone(), self.universe.clone(), |u, v| {
            self.get(v, u).clone()
        })
    }

    /// (x ⊗ R)(u, v) = x ⊗ R(u, v).
    pub fn scalar_otimes(&self, x: &L::Value) -> Self {
        let l = self.lattice.clone();
        Self::from_fn(self.lattice.clone(), self.universe.clone(), |u, v| {
            l.otimes(x, self.get(u, v))
        })
    }

    /// (x → R)(u, v) = x → R(u, v); the scalar goes on the left of →.
    pub fn scalar_to(&self, x: &L::Value) -> Self {
        let l = self.lattice.clone();
        Self::from_fn(self.lattice.clone(), self.universe.clone(), |u, v| {
            l.residuum(x, self.get(u, v))
        })
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let l = self.lattice.clone();
        Ok(Self::from_fn(
            self.lattice.clone(),
            self.universe.clone(),
            |u, v| l.meet(self.get(u, v), other.get(u, v)),
        ))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let l = self.lattice.clone();
        Ok(Self::from_fn(
            self.lattice.clone(),
            self.universe.clone(),
            |u, v| l.join(self.get(u, v), other.get(u, v)),
        ))
    }

    /// Entrywise order: R ≤ P.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| self.lattice.leq(a, b)))
    }

    /// R ≲ P over all |U|² entries.
    pub fn inclusion_degree(&self, other: &Self) -> Result<L::Value> {
        self.compatible(other)?;
        let l = &self.lattice;
        let mut acc = l.top();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = l.meet(&acc, &l.residuum(a, b));
        }
        Ok(acc)
    }

    /// R ≈ P over all |U|² entries.
    pub fn equality_degree(&self, other: &Self) -> Result<L::Value> {
        self.compatible(other)?;
        let l = &self.lattice;
        let mut acc = l.top();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = l.meet(&acc, &l.biresiduum(a, b));
        }
        Ok(acc)
    }

    /// Right residual R\Q: the greatest X with R ∘ X ≤ Q.
    /// Entrywise (R\Q)(u, v) = Ru ≲ Qv, an inclusion degree of foresets.
    pub fn right_residual(&self, q: &Self) -> Result<Self> {
        self.compatible(q)?;
        let l = self.lattice.clone();
        let n = self.size();
        Ok(Self::from_fn(
            self.lattice.clone(),
            self.universe.clone(),
            |u, v| {
                let mut acc = l.top();
                for w in 0..n {
                    acc = l.meet(&acc, &l.residuum(self.get(w, u), q.get(w, v)));
                }
                acc
            },
        ))
    }

    /// Left residual Q/R (self = Q): the greatest X with X ∘ R ≤ Q.
    /// Entrywise (Q/R)(u, v) = vR ≲ uQ, an inclusion degree of aftersets.
    pub fn left_residual(&self, r: &Self) -> Result<Self> {
        self.compatible(r)?;
        let l = self.lattice.clone();
        let n = self.size();
        Ok(Self::from_fn(
            self.lattice.clone(),
            self.universe.clone(),
            |u, v| {
                let mut acc = l.top();
                for w in 0..n {
                    acc = l.meet(&acc, &l.residuum(r.get(v, w), self.get(u, w)));
                }
                acc
            },
        ))
    }

    /// Double right residual R\\Q: like R\Q but with ≈ in place of ≲,
    /// (R\\Q)(u, v) = Ru ≈ Qv.
    pub fn double_right_residual(&self, q: &Self) -> Result<Self> {
        self.compatible(q)?;
        let l = self.lattice.clone();
        let n = self.size();
        Ok(Self::from_fn(
            self.lattice.clone(),
            self.universe.clone(),
            |u, v| {
                let mut acc = l.top();
                for w in 0..n {
                    acc = l.meet(&acc, &l.biresiduum(self.get(w, u), q.get(w, v)));
                }
                acc
            },
        ))
    }

    /// Double left residual Q//R (self = Q): (Q//R)(u, v) = vR ≈ uQ.
    pub fn double_left_residual(&self, r: &Self) -> Result<Self> {
        self.compatible(r)?;
        let l = self.lattice.clone();
        let n = self.size();
        Ok(Self::from_fn(
            self.lattice.clone(),
            self.universe.clone(),
            |u, v| {
                let mut acc = l.top();
                for w in 0..n {
                    acc = l.meet(&acc, &l.biresiduum(r.get(v, w), self.get(u, w)));
                }
                acc
            },
        ))
    }

    /// △ ≤ R.
    pub fn is_reflexive(&self) -> bool {
        let top = self.lattice.top();
        (0..self.size()).all(|u| *self.get(u, u) == top)
    }

    /// R⁻¹ ≤ R (equivalently R⁻¹ = R).
    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|u| (u + 1..n).all(|v| self.get(u, v) == self.get(v, u)))
    }

    /// R ∘ R ≤ R.
    pub fn is_transitive(&self) -> bool {
        let squared = self
            .compose(self)
            .expect("a relation is always compatible with itself");
        squared.leq(self).expect("same universe")
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_preorder() && self.is_symmetric()
    }

    /// The natural fuzzy equivalence P̃ = P ∧ P⁻¹ of a preorder P.
    /// P̃(u, v) = 1 exactly when u and v have equal aftersets (= equal rows).
    pub fn natural_equivalence(&self) -> Result<Self> {
        if !self.is_preorder() {
            return Err(Error::NotPreorder(
                "natural equivalence is defined for preorders".into(),
            ));
        }
        self.meet(&self.inverse())
    }

    /// R^∞, the least preorder containing R, computed exactly as
    /// (△ ∨ R)^(|U|−1): values never exceed the ⊗-unit, so any path longer
    /// than |U|−1 steps repeats a node and is dominated by the shortcut.
    pub fn reflexive_transitive_closure(&self) -> Self {
        let reflexive = Self::identity(self.lattice.clone(), self.universe.clone())
            .join(self)
            .expect("same universe");
        reflexive.power(self.size() - 1)
    }

    /// Afterset uR: row u as a fuzzy set.
    pub fn afterset(&self, node: &str) -> Result<FuzzySet<L>> {
        let u = self
            .universe
            .index(node)
            .ok_or_else(|| Error::UnknownNode(node.into()))?;
        Ok(self.afterset_at(u))
    }

    pub fn afterset_at(&self, u: usize) -> FuzzySet<L> {
        FuzzySet {
            lattice: self.lattice.clone(),
            universe: self.universe.clone(),
            values: self.row(u).to_vec(),
        }
    }

    /// Foreset Ru: column u as a fuzzy set.
    pub fn foreset(&self, node: &str) -> Result<FuzzySet<L>> {
        let u = self
            .universe
            .index(node)
            .ok_or_else(|| Error::UnknownNode(node.into()))?;
        Ok(self.foreset_at(u))
    }

    pub fn foreset_at(&self, u: usize) -> FuzzySet<L> {
        let n = self.size();
        FuzzySet {
            lattice: self.lattice.clone(),
            universe: self.universe.clone(),
            values: (0..n).map(|w| self.get(w, u).clone()).collect(),
        }
    }
}

impl<L: ResiduatedLattice> fmt::Display for FuzzyRelation<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let cells: Vec<Vec<String>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| self.lattice.format_value(self.get(u, v)))
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
