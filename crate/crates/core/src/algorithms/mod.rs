//! Tree doubling, the multi-criteria Christofides variant and cycle-cover
//! patching. Every algorithm validates its own structural invariants on every
//! emitted tour and fails with [`Error::Structural`] if one is ever violated.

mod christofides;
mod cycle_cover;
mod tree_doubling;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Instance, Tour, WeightVector};
use crate::oracles::{CurveBackend, EnumerationBackend, OracleCaps};
use crate::pareto::{ParetoItem, ParetoSet};
use crate::rational::Rational;

pub use christofides::christofides_multi;
pub use cycle_cover::{cycle_cover_patch, cycle_cover_subcurve_eps, patch_cover, Patched};
pub use tree_doubling::tree_doubling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    TreeDoubling,
    Christofides,
    CycleCover,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::TreeDoubling, Algorithm::Christofides, Algorithm::CycleCover];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::TreeDoubling => "tree-doubling",
            Algorithm::Christofides => "christofides",
            Algorithm::CycleCover => "cycle-cover",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s.replace('_', "-"))
            .ok_or_else(|| Error::Parameter(format!("unknown algorithm {s:?}")))
    }
}

/// Which edge of each cycle patching removes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RemovalPolicy {
    /// The edge maximizing `sum_i w_i(e) / w_i^min`, ties to the smallest edge.
    #[default]
    AggregateHeaviest,
    /// The smallest canonical edge of the cycle.
    CanonicalFirst,
}

/// Order in which the paths left after removal are chained.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JoinOrder {
    /// Cycles by smallest contained vertex.
    #[default]
    Canonical,
    /// From the current path end, continue with the path whose start is
    /// closest in aggregate normalized weight.
    GreedyNearest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub eps: Rational,
    pub seed: u64,
    pub removal: RemovalPolicy,
    pub joining: JoinOrder,
    /// Explicit `w_max / w_min` cap for cycle-cover patching.
    pub beta_cap: Option<Rational>,
    pub caps: OracleCaps,
}

impl SolveOptions {
    pub fn new(eps: Rational) -> Self {
        SolveOptions {
            eps,
            seed: 0,
            removal: RemovalPolicy::default(),
            joining: JoinOrder::default(),
            beta_cap: None,
            caps: OracleCaps::default(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_caps(mut self, caps: OracleCaps) -> Self {
        self.caps = caps;
        self
    }

    pub fn with_removal(mut self, removal: RemovalPolicy) -> Self {
        self.removal = removal;
        self
    }

    pub fn with_joining(mut self, joining: JoinOrder) -> Self {
        self.joining = joining;
        self
    }

    pub fn with_beta_cap(mut self, beta: Rational) -> Self {
        self.beta_cap = Some(beta);
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Size of the tree or cycle-cover subcurve.
    pub subcurve: usize,
    /// Tours built before the final dominance filter.
    pub candidates: usize,
    /// Matching-curve runs per tree (amplification); 0 when not applicable.
    pub runs_per_tree: usize,
    /// Largest number of edges removed from a single cover.
    pub max_removed: usize,
    /// Tours whose structural invariants were checked.
    pub checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmOutput {
    pub front: ParetoSet,
    pub stats: SolveStats,
}

/// Runs `alg` with the exhaustive enumeration backend.
pub fn solve(alg: Algorithm, inst: &Instance, opts: &SolveOptions) -> Result<AlgorithmOutput> {
    solve_with(alg, inst, opts, &EnumerationBackend::new(opts.caps))
}

pub fn solve_with(
    alg: Algorithm,
    inst: &Instance,
    opts: &SolveOptions,
    backend: &dyn CurveBackend,
) -> Result<AlgorithmOutput> {
    match alg {
        Algorithm::TreeDoubling => tree_doubling(inst, opts, backend),
        Algorithm::Christofides => christofides_multi(inst, opts, backend),
        Algorithm::CycleCover => cycle_cover_patch(inst, opts, backend),
    }
}

/// Declared gamma, or the metric case when none is declared.
pub(crate) fn effective_gamma(inst: &Instance) -> Rational {
    inst.gamma().unwrap_or_else(Rational::one)
}

pub(crate) fn check_eps(eps: &Rational) -> Result<()> {
    if *eps < Rational::zero() {
        return Err(Error::Parameter(format!("eps must be nonnegative, got {eps}")));
    }
    Ok(())
}

pub(crate) fn require_undirected(inst: &Instance, what: &'static str) -> Result<()> {
    if inst.directed() {
        return Err(Error::UndirectedRequired(what));
    }
    Ok(())
}

/// `a <= factor * b` componentwise.
pub(crate) fn within_factor(a: &WeightVector, b: &WeightVector, factor: &Rational) -> bool {
    a.iter()
        .zip(b.iter())
        .all(|(&x, &y)| x as i128 * factor.denom() <= factor.numer() * y as i128)
}

/// Validates a tour and packages it as a front item.
pub(crate) fn tour_item(tour: &Tour, inst: &Instance, source: usize) -> Result<ParetoItem> {
    tour.validate()?;
    let edges = tour.canonical_edges();
    let weight = inst.total_weight(&edges)?;
    Ok(ParetoItem::new(weight, edges).with_source(source))
}
