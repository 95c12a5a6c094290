use num_traits::Zero;

use super::{oracle_cycle_covers, oracle_matchings, oracle_spanning_trees, OracleCaps};
use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::pareto::{grid_select, ParetoSet};
use crate::rational::Rational;

/// The solution family an approximate curve is requested for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveRequest {
    Tree,
    /// Perfect matchings of the complete graph induced by the subset.
    Matching(Vec<usize>),
    CycleCover,
}

/// Source of (1+eps)-approximate subroutine curves.
///
/// A randomized backend only promises its contract with some probability per
/// run; callers then amplify over several runs distinguished by `run_seed`.
pub trait CurveBackend: Sync {
    fn curve(&self, req: &CurveRequest, inst: &Instance, eps: &Rational, run_seed: u64) -> Result<ParetoSet>;

    fn randomized(&self) -> bool;
}

/// Exhaustive enumeration followed by grid selection. Deterministic, so
/// `run_seed` is ignored.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationBackend {
    pub caps: OracleCaps,
}

impl EnumerationBackend {
    pub fn new(caps: OracleCaps) -> Self {
        EnumerationBackend { caps }
    }
}

impl CurveBackend for EnumerationBackend {
    fn curve(&self, req: &CurveRequest, inst: &Instance, eps: &Rational, _run_seed: u64) -> Result<ParetoSet> {
        approx_oracle(req, inst, eps, &self.caps)
    }

    fn randomized(&self) -> bool {
        false
    }
}

/// A (1+eps)-approximate Pareto curve for the requested family.
///
/// With `eps = 0`, or on one-two instances where the exact front is already
/// small, the exact front is returned.
pub fn approx_oracle(req: &CurveRequest, inst: &Instance, eps: &Rational, caps: &OracleCaps) -> Result<ParetoSet> {
    if *eps < Rational::zero() {
        return Err(Error::Parameter(format!("eps must be nonnegative, got {eps}")));
    }
    let exact = match req {
        CurveRequest::Tree => oracle_spanning_trees(inst, caps)?,
        CurveRequest::Matching(subset) => oracle_matchings(inst, subset, caps)?,
        CurveRequest::CycleCover => oracle_cycle_covers(inst, caps)?,
    };
    if eps.is_zero() || inst.is_one_two() {
        return Ok(exact);
    }
    grid_select(&exact, eps)
}
