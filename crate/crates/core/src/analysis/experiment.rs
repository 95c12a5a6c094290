use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::bounds::{ratio_bound, RatioModel};
use crate::algorithms::{solve, Algorithm, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::instances::{generate, GenSpec, Variant};
use crate::oracles::{oracle_tours, OracleCaps};
use crate::par;
use crate::pareto::{coverage_beta, CoverageFactor, ParetoSet};
use crate::rational::{self, ratio, Rational};

/// One block of an experiment: every algorithm on every seed of one
/// generator configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentRun {
    pub variant: Variant,
    pub n: usize,
    pub k: usize,
    #[serde(default, with = "rational::serde_str_opt", skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<u64>,
    #[serde(default, with = "rational::serde_str_opt", skip_serializing_if = "Option::is_none")]
    pub one_fraction: Option<Rational>,
    pub algorithms: Vec<Algorithm>,
    #[serde(with = "rational::serde_str")]
    pub eps: Rational,
    #[serde(default)]
    pub seed_start: u64,
    pub seeds: u64,
}

impl ExperimentRun {
    pub fn gen_spec(&self, seed: u64) -> GenSpec {
        let mut g = GenSpec::new(self.variant, self.n, self.k, seed);
        if let Some(gamma) = self.gamma {
            g = g.with_gamma(gamma);
        }
        if let Some(scale) = self.scale {
            g = g.with_scale(scale);
        }
        if let Some(f) = self.one_fraction {
            g = g.with_one_fraction(f);
        }
        g
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub runs: Vec<ExperimentRun>,
    /// Record wall time per row. Off by default so reports are reproducible
    /// byte for byte.
    #[serde(default)]
    pub timing: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<OracleCaps>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    /// Generator variant name, or the file an instance was read from.
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub directed: bool,
    #[serde(default, with = "rational::serde_str_opt")]
    pub gamma: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceDescriptor {
    pub fn of(inst: &Instance, label: impl Into<String>, seed: Option<u64>) -> Self {
        InstanceDescriptor {
            label: label.into(),
            n: inst.n(),
            k: inst.k(),
            directed: inst.directed(),
            gamma: inst.gamma(),
            seed,
        }
    }
}

/// Empirical coverage of one algorithm run against the exact tour front.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub instance: InstanceDescriptor,
    pub algorithm: Algorithm,
    #[serde(with = "rational::serde_str")]
    pub eps: Rational,
    pub beta: Option<CoverageFactor>,
    #[serde(with = "rational::serde_str_opt")]
    pub bound: Option<Rational>,
    pub pass: bool,
    pub front_size: usize,
    pub oracle_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

/// The smallest bound guaranteed for `alg` on `inst` at precision `eps`.
///
/// Cycle-cover patching takes the best of the generic spread bound (with
/// `beta_cap`, or the instance's own spread) and the gamma-specific bound;
/// one-two instances get the exact 4/3 and 3/2.
pub fn guaranteed_bound(
    alg: Algorithm,
    inst: &Instance,
    eps: &Rational,
    beta_cap: Option<&Rational>,
) -> Result<(RatioModel, Rational)> {
    let gamma = inst.gamma().unwrap_or_else(Rational::one);
    let eps = *eps;
    let eval = |m: RatioModel| ratio_bound(&m).map(|v| (m, v));
    match alg {
        Algorithm::TreeDoubling => eval(RatioModel::TreeDoubling { gamma, eps }),
        Algorithm::Christofides => eval(RatioModel::Christofides { gamma, eps }),
        Algorithm::CycleCover if inst.is_one_two() => {
            if inst.directed() {
                eval(RatioModel::AtspOneTwo)
            } else {
                eval(RatioModel::StspOneTwo)
            }
        }
        Algorithm::CycleCover => {
            let directed = inst.directed();
            let specific = if directed {
                RatioModel::CycleCoverAtsp { gamma, eps }
            } else {
                RatioModel::CycleCoverRefined { gamma, eps }
            };
            let specific = inst.gamma().and_then(|_| eval(specific).ok());
            if directed && specific.is_none() && beta_cap.is_none() {
                return Err(Error::Domain(format!(
                    "no cycle-cover bound for a directed instance with gamma {gamma} >= 1/sqrt(3) without a beta cap"
                )));
            }
            let beta = beta_cap.copied().unwrap_or_else(|| inst.spread());
            let alpha = if directed { ratio(1, 2) } else { ratio(1, 3) };
            let generic = eval(RatioModel::CycleCoverGeneric { alpha, beta, eps })?;
            Ok(match specific {
                Some(s) if s.1 < generic.1 => s,
                _ => generic,
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Judgement {
    pub beta: CoverageFactor,
    pub model: RatioModel,
    pub bound: Rational,
    pub pass: bool,
}

/// Coverage of `front` against `oracle`, compared with the guaranteed bound.
pub fn judge(
    alg: Algorithm,
    inst: &Instance,
    front: &ParetoSet,
    oracle: &ParetoSet,
    eps: &Rational,
    beta_cap: Option<&Rational>,
) -> Result<Judgement> {
    let beta = coverage_beta(front, oracle)?;
    let (model, bound) = guaranteed_bound(alg, inst, eps, beta_cap)?;
    Ok(Judgement {
        beta,
        model,
        bound,
        pass: beta.at_most(&bound),
    })
}

struct Job<'a> {
    run: &'a ExperimentRun,
    seed: u64,
}

fn run_job(job: &Job<'_>, caps: &OracleCaps, timing: bool) -> Vec<RatioReport> {
    let run = job.run;
    let spec = run.gen_spec(job.seed);
    let failed = |alg: Algorithm, desc: InstanceDescriptor, e: &Error| RatioReport {
        instance: desc,
        algorithm: alg,
        eps: run.eps,
        beta: None,
        bound: None,
        pass: false,
        front_size: 0,
        oracle_size: 0,
        error: Some(e.to_string()),
        wall_ms: None,
    };
    let bare = InstanceDescriptor {
        label: run.variant.name().into(),
        n: run.n,
        k: run.k,
        directed: run.variant.directed(),
        gamma: run.gamma,
        seed: Some(job.seed),
    };
    let inst = match generate(&spec) {
        Ok(i) => i,
        Err(e) => return run.algorithms.iter().map(|&a| failed(a, bare.clone(), &e)).collect(),
    };
    let desc = InstanceDescriptor::of(&inst, run.variant.name(), Some(job.seed));
    let oracle = match oracle_tours(&inst, caps) {
        Ok(o) => o,
        Err(e) => return run.algorithms.iter().map(|&a| failed(a, desc.clone(), &e)).collect(),
    };
    let opts = SolveOptions::new(run.eps).with_seed(job.seed).with_caps(*caps);
    run.algorithms
        .iter()
        .map(|&alg| {
            let start = Instant::now();
            let out = solve(alg, &inst, &opts)
                .and_then(|o| judge(alg, &inst, &o.front, &oracle, &run.eps, None).map(|j| (o, j)));
            let wall_ms = timing.then(|| start.elapsed().as_millis() as u64);
            match out {
                Ok((o, j)) => RatioReport {
                    instance: desc.clone(),
                    algorithm: alg,
                    eps: run.eps,
                    beta: Some(j.beta),
                    bound: Some(j.bound),
                    pass: j.pass,
                    front_size: o.front.len(),
                    oracle_size: oracle.len(),
                    error: None,
                    wall_ms,
                },
                Err(e) => RatioReport {
                    wall_ms,
                    oracle_size: oracle.len(),
                    ..failed(alg, desc.clone(), &e)
                },
            }
        })
        .collect()
}

/// Generates, solves and checks every (run, seed, algorithm) combination.
/// Failures are recorded in their row and never abort the experiment. Rows
/// are sorted by variant and seed; the result is a function of the config.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<RatioReport>> {
    let caps = match config.caps {
        Some(c) => c,
        None => OracleCaps::from_env()?,
    };
    let jobs: Vec<Job<'_>> = config
        .runs
        .iter()
        .flat_map(|run| (0..run.seeds).map(move |i| Job { run, seed: run.seed_start + i }))
        .collect();
    let mut rows: Vec<RatioReport> = par::map(&jobs, |j| run_job(j, &caps, config.timing))
        .into_iter()
        .flatten()
        .collect();
    rows.sort_by(|a, b| (&a.instance.label, a.instance.seed).cmp(&(&b.instance.label, b.instance.seed)));
    Ok(rows)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    /// Largest empirical coverage per `variant/algorithm`.
    pub max_beta: BTreeMap<String, CoverageFactor>,
}

pub fn summarize(rows: &[RatioReport]) -> ExperimentSummary {
    let mut s = ExperimentSummary {
        rows: rows.len(),
        ..ExperimentSummary::default()
    };
    for r in rows {
        if r.error.is_some() {
            s.errors += 1;
        } else if r.pass {
            s.passed += 1;
        } else {
            s.failed += 1;
        }
        if let Some(b) = r.beta {
            let key = format!("{}/{}", r.instance.label, r.algorithm);
            let e = s.max_beta.entry(key).or_insert(b);
            if b > *e {
                *e = b;
            }
        }
    }
    s
}
