//! Seeded instance generation, gamma validation and inference, weight-spread
//! checks and the JSON instance format.

mod gamma;
mod io;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::rational::{self, Rational};

pub use gamma::{check_weight_spread, infer_gamma, validate_gamma, CriterionCheck, SpreadReport};
pub use io::{from_json_str, read_instance, to_json_string, write_instance, InstanceFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    GammaMetricUndirected,
    GammaMetricDirected,
    OneTwoUndirected,
    OneTwoDirected,
    MetricClosure,
}

impl Variant {
    pub fn directed(self) -> bool {
        matches!(self, Variant::GammaMetricDirected | Variant::OneTwoDirected)
    }

    pub fn is_one_two(self) -> bool {
        matches!(self, Variant::OneTwoUndirected | Variant::OneTwoDirected)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::GammaMetricUndirected => "gamma_metric_undirected",
            Variant::GammaMetricDirected => "gamma_metric_directed",
            Variant::OneTwoUndirected => "one_two_undirected",
            Variant::OneTwoDirected => "one_two_directed",
            Variant::MetricClosure => "metric_closure",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.replace('-', "_")))
            .map_err(|_| Error::Parameter(format!("unknown variant {s:?}")))
    }
}

/// Parameters of one generated instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub k: usize,
    pub variant: Variant,
    /// Only used by the gamma-metric variants.
    #[serde(with = "rational::serde_str", default = "default_gamma")]
    pub gamma: Rational,
    #[serde(default = "default_scale")]
    pub scale: u64,
    #[serde(default)]
    pub seed: u64,
    /// Probability of weight 1 in the one-two variants.
    #[serde(with = "rational::serde_str", default = "default_one_fraction")]
    pub one_fraction: Rational,
}

fn default_gamma() -> Rational {
    rational::int(1)
}

fn default_scale() -> u64 {
    100
}

fn default_one_fraction() -> Rational {
    rational::ratio(1, 2)
}

impl GenSpec {
    pub fn new(variant: Variant, n: usize, k: usize, seed: u64) -> Self {
        GenSpec {
            n,
            k,
            variant,
            gamma: default_gamma(),
            scale: default_scale(),
            seed,
            one_fraction: default_one_fraction(),
        }
    }

    pub fn with_gamma(mut self, gamma: Rational) -> Self {
        self.gamma = gamma;
        self
    }

    pub fn with_scale(mut self, scale: u64) -> Self {
        self.scale = scale;
        self
    }

    pub fn with_one_fraction(mut self, f: Rational) -> Self {
        self.one_fraction = f;
        self
    }
}

/// Generates an instance deterministically from `spec.seed`.
///
/// Gamma-metric weights are drawn uniformly from `[M, floor(2 gamma M)]`;
/// any two such weights sum to at least `2M`, so `w(u,v) <= 2 gamma M <=
/// gamma (w(u,x) + w(x,v))` holds for every triple. One-two weights are `1`
/// with probability `one_fraction`. The metric-closure variant draws weights
/// from `[1, M]` and replaces them by shortest-path distances.
pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let n = spec.n;
    let k = spec.k;
    if n < 3 {
        return Err(Error::Parameter(format!("need n >= 3, got {n}")));
    }
    if k == 0 {
        return Err(Error::Parameter("need k >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let directed = spec.variant.directed();
    match spec.variant {
        Variant::GammaMetricUndirected | Variant::GammaMetricDirected => {
            let g = spec.gamma;
            if g < rational::ratio(1, 2) || g > rational::int(1) {
                return Err(Error::Parameter(format!(
                    "gamma {} outside [1/2, 1]",
                    rational::to_string(&g)
                )));
            }
            let lo = spec.scale;
            let hi = (rational::int(2 * spec.scale as i128) * g).floor().to_integer() as u64;
            if lo < 2 || hi < lo {
                return Err(Error::Parameter(format!(
                    "weight range [{lo}, {hi}] is empty (scale must be >= 2)"
                )));
            }
            Instance::from_fn(n, k, directed, Some(g), |_, _, _| rng.gen_range(lo..=hi))
        }
        Variant::OneTwoUndirected | Variant::OneTwoDirected => {
            let f = spec.one_fraction;
            if f < rational::zero() || f > rational::int(1) {
                return Err(Error::Parameter("one_fraction outside [0, 1]".into()));
            }
            let (num, den) = (*f.numer() as u64, *f.denom() as u64);
            Instance::from_fn(n, k, directed, Some(rational::int(1)), |_, _, _| {
                if rng.gen_range(0..den) < num {
                    1
                } else {
                    2
                }
            })
        }
        Variant::MetricClosure => {
            if spec.scale < 1 {
                return Err(Error::Parameter("scale must be >= 1".into()));
            }
            let mut mats = Vec::with_capacity(k);
            for _ in 0..k {
                let mut d = vec![vec![0u64; n]; n];
                for u in 0..n {
                    for v in (u + 1)..n {
                        let w = rng.gen_range(1..=spec.scale);
                        d[u][v] = w;
                        d[v][u] = w;
                    }
                }
                for x in 0..n {
                    for u in 0..n {
                        for v in 0..n {
                            let via = d[u][x] + d[x][v];
                            if u != v && via < d[u][v] {
                                d[u][v] = via;
                            }
                        }
                    }
                }
                mats.push(d);
            }
            Instance::new(n, false, Some(rational::int(1)), &mats)
        }
    }
}
