//! Complete k-weighted graphs and the structural solution types built on them.

mod euler;
mod shortcut;
mod solution;

use std::fmt;
use std::ops::{Add, AddAssign, Index};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use euler::euler_circuit;
pub use shortcut::shortcut_walk;
pub use solution::{
    odd_vertices, validate_hamiltonian, CycleCover, Matching, Multigraph, SpanningTree, Tour,
};

/// An edge `(u, v)`. Undirected edges are stored with `u < v`; arcs keep their
/// orientation. Serialized as a two-element array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn undirected(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn arc(from: usize, to: usize) -> Self {
        Edge(from, to)
    }

    pub fn new(a: usize, b: usize, directed: bool) -> Self {
        if directed {
            Edge::arc(a, b)
        } else {
            Edge::undirected(a, b)
        }
    }

    pub fn u(&self) -> usize {
        self.0
    }

    pub fn v(&self) -> usize {
        self.1
    }

    pub fn touches(&self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// A k-dimensional vector of nonnegative integer objective values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(SmallVec<[u64; 4]>);

impl WeightVector {
    pub fn zero(k: usize) -> Self {
        WeightVector(SmallVec::from_elem(0, k))
    }

    pub fn from_slice(values: &[u64]) -> Self {
        WeightVector(SmallVec::from_slice(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &u64> {
        self.0.iter()
    }

    /// Componentwise `self <= other`.
    pub fn le_all(&self, other: &WeightVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, factor: u64) -> WeightVector {
        WeightVector(self.0.iter().map(|x| x * factor).collect())
    }

    pub fn max_component(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<u64>> for WeightVector {
    fn from(v: Vec<u64>) -> Self {
        WeightVector(SmallVec::from_vec(v))
    }
}

impl Index<usize> for WeightVector {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl AddAssign<&WeightVector> for WeightVector {
    fn add_assign(&mut self, rhs: &WeightVector) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a += b;
        }
    }
}

impl Add<&WeightVector> for &WeightVector {
    type Output = WeightVector;

    fn add(self, rhs: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A complete graph on `n` vertices with `k` positive integer weight
/// functions. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    k: usize,
    directed: bool,
    gamma: Option<Rational>,
    // weights[(c * n + u) * n + v]; diagonal entries are zero.
    weights: Vec<u64>,
}

impl Instance {
    /// Builds an instance from `k` full `n x n` matrices.
    ///
    /// Rejects missing entries, nonpositive off-diagonal weights, nonzero
    /// diagonals, asymmetric undirected matrices and declared gamma values that
    /// the weights do not satisfy.
    pub fn new(
        n: usize,
        directed: bool,
        gamma: Option<Rational>,
        matrices: &[Vec<Vec<u64>>],
    ) -> Result<Self> {
        let k = matrices.len();
        if n < 3 {
            return Err(Error::MalformedInput(format!("need n >= 3, got {n}")));
        }
        if k == 0 {
            return Err(Error::MalformedInput("need at least one criterion".into()));
        }
        let mut weights = vec![0u64; k * n * n];
        for (c, m) in matrices.iter().enumerate() {
            if m.len() != n {
                return Err(Error::MalformedInput(format!(
                    "criterion {c}: expected {n} rows, found {}",
                    m.len()
                )));
            }
            for (u, row) in m.iter().enumerate() {
                if row.len() != n {
                    let missing = row.len();
                    return Err(Error::MalformedInput(format!(
                        "criterion {c}: row {u} has {missing} entries, expected {n} (pair ({u}, {missing}) missing)"
                    )));
                }
                for (v, &w) in row.iter().enumerate() {
                    weights[(c * n + u) * n + v] = w;
                }
            }
        }
        Self::from_flat(n, k, directed, gamma, weights)
    }

    /// Builds an instance by evaluating `f(criterion, u, v)` for every
    /// ordered pair `u != v`. For undirected instances `f` is called with
    /// `u < v` only and mirrored.
    pub fn from_fn(
        n: usize,
        k: usize,
        directed: bool,
        gamma: Option<Rational>,
        mut f: impl FnMut(usize, usize, usize) -> u64,
    ) -> Result<Self> {
        let mut weights = vec![0u64; k * n * n];
        for c in 0..k {
            for u in 0..n {
                for v in 0..n {
                    if u == v || (!directed && v < u) {
                        continue;
                    }
                    let w = f(c, u, v);
                    weights[(c * n + u) * n + v] = w;
                    if !directed {
                        weights[(c * n + v) * n + u] = w;
                    }
                }
            }
        }
        Self::from_flat(n, k, directed, gamma, weights)
    }

    fn from_flat(
        n: usize,
        k: usize,
        directed: bool,
        gamma: Option<Rational>,
        weights: Vec<u64>,
    ) -> Result<Self> {
        if n < 3 {
            return Err(Error::MalformedInput(format!("need n >= 3, got {n}")));
        }
        if k == 0 {
            return Err(Error::MalformedInput("need at least one criterion".into()));
        }
        let inst = Instance {
            n,
            k,
            directed,
            gamma: None,
            weights,
        };
        for c in 0..k {
            for u in 0..n {
                if inst.w(c, u, u) != 0 {
                    return Err(Error::MalformedInput(format!(
                        "criterion {c}: diagonal entry ({u}, {u}) must be 0"
                    )));
                }
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    if inst.w(c, u, v) == 0 {
                        return Err(Error::MalformedInput(format!(
                            "criterion {c}: pair ({u}, {v}) has no positive weight"
                        )));
                    }
                    if !directed && inst.w(c, u, v) != inst.w(c, v, u) {
                        return Err(Error::MalformedInput(format!(
                            "criterion {c}: undirected weights differ on ({u}, {v}): {} vs {}",
                            inst.w(c, u, v),
                            inst.w(c, v, u)
                        )));
                    }
                }
            }
        }
        inst.with_gamma(gamma)
    }

    /// Replaces the declared gamma after checking that every criterion
    /// satisfies it.
    pub fn with_gamma(mut self, gamma: Option<Rational>) -> Result<Self> {
        if let Some(g) = &gamma {
            if *g < rational::ratio(1, 2) || *g > rational::int(1) {
                return Err(Error::Parameter(format!(
                    "declared gamma {} outside [1/2, 1]",
                    rational::to_string(g)
                )));
            }
            if let Some((c, u, v, x)) = self.gamma_violation(g) {
                return Err(Error::MalformedInput(format!(
                    "declared gamma {} violated in criterion {c}: w({u},{v}) > gamma * (w({u},{x}) + w({x},{v}))",
                    rational::to_string(g)
                )));
            }
        }
        self.gamma = gamma;
        Ok(self)
    }

    /// First `(criterion, u, v, x)` with `w(u,v) > gamma * (w(u,x) + w(x,v))`.
    pub fn gamma_violation(&self, gamma: &Rational) -> Option<(usize, usize, usize, usize)> {
        let (p, q) = (*gamma.numer(), *gamma.denom());
        for c in 0..self.k {
            for u in 0..self.n {
                for v in 0..self.n {
                    if u == v || (!self.directed && v < u) {
                        continue;
                    }
                    let lhs = self.w(c, u, v) as i128 * q;
                    for x in 0..self.n {
                        if x == u || x == v {
                            continue;
                        }
                        let rhs = (self.w(c, u, x) + self.w(c, x, v)) as i128 * p;
                        if lhs > rhs {
                            return Some((c, u, v, x));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn gamma(&self) -> Option<Rational> {
        self.gamma
    }

    /// Weight of the pair `(u, v)` in criterion `c`.
    #[inline]
    pub fn w(&self, c: usize, u: usize, v: usize) -> u64 {
        self.weights[(c * self.n + u) * self.n + v]
    }

    pub fn weight(&self, u: usize, v: usize) -> WeightVector {
        WeightVector((0..self.k).map(|c| self.w(c, u, v)).collect())
    }

    pub fn edge_weight(&self, e: &Edge) -> WeightVector {
        self.weight(e.0, e.1)
    }

    pub fn matrix(&self, c: usize) -> Vec<Vec<u64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.w(c, u, v)).collect())
            .collect()
    }

    /// Componentwise sum over an edge multiset.
    pub fn total_weight<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Result<WeightVector> {
        let mut total = WeightVector::zero(self.k);
        for e in edges {
            self.check_edge(e)?;
            for c in 0..self.k {
                total.0[c] += self.w(c, e.0, e.1);
            }
        }
        Ok(total)
    }

    pub fn check_edge(&self, e: &Edge) -> Result<()> {
        if e.0 >= self.n || e.1 >= self.n {
            return Err(Error::MalformedInput(format!(
                "edge {e} references a vertex outside 0..{}",
                self.n
            )));
        }
        if e.0 == e.1 {
            return Err(Error::MalformedInput(format!("self-loop {e}")));
        }
        Ok(())
    }

    /// All edges (undirected: `u < v`; directed: every ordered pair), in
    /// canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if u == v || (!self.directed && v < u) {
                    continue;
                }
                out.push(Edge(u, v));
            }
        }
        out
    }

    pub fn min_weights(&self) -> Vec<u64> {
        self.criterion_extreme(|a, b| a.min(b), u64::MAX)
    }

    pub fn max_weights(&self) -> Vec<u64> {
        self.criterion_extreme(|a, b| a.max(b), 0)
    }

    fn criterion_extreme(&self, pick: impl Fn(u64, u64) -> u64, init: u64) -> Vec<u64> {
        (0..self.k)
            .map(|c| {
                let mut acc = init;
                for u in 0..self.n {
                    for v in 0..self.n {
                        if u != v {
                            acc = pick(acc, self.w(c, u, v));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Largest per-criterion `w_max / w_min`.
    pub fn spread(&self) -> Rational {
        let lo = self.min_weights();
        let hi = self.max_weights();
        lo.iter()
            .zip(hi.iter())
            .map(|(&a, &b)| rational::ratio(b as i128, a as i128))
            .max()
            .unwrap_or_else(|| rational::int(1))
    }

    /// All weights lie in `{1, 2}`.
    pub fn is_one_two(&self) -> bool {
        (0..self.k).all(|c| {
            (0..self.n).all(|u| (0..self.n).all(|v| u == v || matches!(self.w(c, u, v), 1 | 2)))
        })
    }
}
