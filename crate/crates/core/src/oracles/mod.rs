//! Ground-truth Pareto curves by exhaustive enumeration, the Tutte f-factor
//! gadget, and grid-quantized approximate curves used as subroutines.
//!
//! Enumerations are guarded by [`OracleCaps`] and refuse oversized inputs
//! instead of truncating.

mod approx;
mod cycle_covers;
mod matchings;
mod tours;
mod trees;
mod tutte;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightVector;

pub use approx::{approx_oracle, CurveBackend, CurveRequest, EnumerationBackend};
pub use cycle_covers::{for_each_cycle_cover, oracle_cycle_covers};
pub use matchings::oracle_matchings;
pub use tours::oracle_tours;
pub use trees::oracle_spanning_trees;
pub use tutte::{tutte_reduce, FFactorSpec, GadgetEdge, GadgetGraph, GadgetVertex, VertexRole};

/// Environment variable overriding enumeration caps: either one integer for
/// every cap or `key=value` pairs separated by commas (keys: `tours`,
/// `tours_undirected`, `tours_directed`, `trees`, `matchings`, `cycle_covers`).
pub const CAP_ENV: &str = "MCTSP_ORACLE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCaps {
    pub tours_undirected: usize,
    pub tours_directed: usize,
    pub trees: usize,
    /// Largest vertex subset for perfect matchings.
    pub matchings: usize,
    pub cycle_covers: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            tours_undirected: 10,
            tours_directed: 9,
            trees: 8,
            matchings: 12,
            cycle_covers: 8,
        }
    }
}

impl OracleCaps {
    pub fn uniform(cap: usize) -> Self {
        OracleCaps {
            tours_undirected: cap,
            tours_directed: cap,
            trees: cap,
            matchings: cap,
            cycle_covers: cap,
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Ok(n) = spec.parse::<usize>() {
            return Ok(Self::uniform(n));
        }
        let mut caps = Self::default();
        for part in spec.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("{CAP_ENV}: expected key=value, got {part:?}")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("{CAP_ENV}: bad value in {part:?}")))?;
            match key.trim() {
                "tours" => {
                    caps.tours_undirected = value;
                    caps.tours_directed = value;
                }
                "tours_undirected" => caps.tours_undirected = value,
                "tours_directed" => caps.tours_directed = value,
                "trees" => caps.trees = value,
                "matchings" => caps.matchings = value,
                "cycle_covers" => caps.cycle_covers = value,
                other => {
                    return Err(Error::Parameter(format!("{CAP_ENV}: unknown key {other:?}")))
                }
            }
        }
        Ok(caps)
    }

    /// Defaults, overridden by [`CAP_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV) {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}

/// `partial + remaining * per_edge_min`, the weight floor of any completion.
pub(crate) fn lower_bound(partial: &[u64], remaining: u64, per_edge_min: &[u64]) -> WeightVector {
    WeightVector::from(
        partial
            .iter()
            .zip(per_edge_min.iter())
            .map(|(p, m)| p + remaining * m)
            .collect::<Vec<_>>(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_parsing() {
        assert_eq!(OracleCaps::parse("11").unwrap(), OracleCaps::uniform(11));
        let c = OracleCaps::parse("tours=11, trees=9").unwrap();
        assert_eq!(c.tours_undirected, 11);
        assert_eq!(c.tours_directed, 11);
        assert_eq!(c.trees, 9);
        assert_eq!(c.matchings, 12);
        assert!(OracleCaps::parse("bogus=1").is_err());
        assert!(OracleCaps::parse("trees").is_err());
    }
}
