//! `mctsp`: generate instances, compute approximate Pareto curves of tours,
//! verify them against the exact front, run experiments and emit bound curves.
//!
//! Exit status: 0 on success, 1 when a verification or experiment bound check
//! fails, 2 on usage and input errors.

mod solution;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mctsp::algorithms::{solve, Algorithm, JoinOrder, RemovalPolicy, SolveOptions};
use mctsp::analysis::{
    emit_curves, gamma_grid, judge, run_experiment, summarize, ExperimentConfig, InstanceDescriptor, RatioReport,
};
use mctsp::graph::validate_hamiltonian;
use mctsp::instances::{generate, read_instance, to_json_string, GenSpec, Variant};
use mctsp::oracles::{oracle_tours, OracleCaps};
use mctsp::{rational, Error, Instance, ParetoSet, Rational, SolutionKind};

use solution::{FrontFile, SolutionFile};

#[derive(Parser)]
#[command(name = "mctsp", version, about = "Approximate Pareto curves for multi-criteria TSP")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_removal(s: &str) -> Result<RemovalPolicy, String> {
    match s {
        "aggregate-heaviest" => Ok(RemovalPolicy::AggregateHeaviest),
        "canonical-first" => Ok(RemovalPolicy::CanonicalFirst),
        _ => Err(format!("unknown removal policy {s:?} (aggregate-heaviest, canonical-first)")),
    }
}

fn parse_joining(s: &str) -> Result<JoinOrder, String> {
    match s {
        "canonical" => Ok(JoinOrder::Canonical),
        "greedy-nearest" => Ok(JoinOrder::GreedyNearest),
        _ => Err(format!("unknown join order {s:?} (canonical, greedy-nearest)")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded instance file.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// gamma_metric_undirected, gamma_metric_directed, one_two_undirected,
        /// one_two_directed or metric_closure.
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        gamma: Rational,
        #[arg(long, default_value_t = 100)]
        scale: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of weight 1 for the one-two variants.
        #[arg(long, value_parser = parse_rational, default_value = "1/2")]
        one_fraction: Rational,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute an approximate Pareto curve of tours.
    Solve {
        #[arg(long)]
        instance: PathBuf,
        /// tree-doubling, christofides or cycle-cover.
        #[arg(long, value_parser = parse_algorithm)]
        algorithm: Algorithm,
        #[arg(long, value_parser = parse_rational, default_value = "1/10")]
        eps: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_removal, default_value = "aggregate-heaviest")]
        removal: RemovalPolicy,
        #[arg(long, value_parser = parse_joining, default_value = "canonical")]
        joining: JoinOrder,
        /// Explicit w_max / w_min cap for cycle-cover patching.
        #[arg(long, value_parser = parse_rational)]
        beta_cap: Option<Rational>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a solution against the exact tour front and its bound.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        /// `exact` to enumerate all tours, or a file holding the front.
        #[arg(long, default_value = "exact")]
        oracle: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an experiment config; reports go out as JSON lines.
    Bench {
        #[arg(long)]
        config: PathBuf,
        /// Record wall time per row (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the summary; standard error when absent.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Emit bound curves over a gamma grid as CSV.
    Curves {
        #[arg(long, value_parser = parse_rational, default_value = "1/2")]
        grid_start: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        grid_end: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1/100")]
        grid_step: Rational,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

type CliResult = Result<ExitCode, Error>;

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn cmd_generate(spec: GenSpec, out: Option<&Path>) -> CliResult {
    let inst = generate(&spec)?;
    emit(out, &to_json_string(&inst))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(instance: &Path, algorithm: Algorithm, opts: SolveOptions, out: Option<&Path>) -> CliResult {
    let inst = read_instance(instance)?;
    let result = solve(algorithm, &inst, &opts)?;
    let file = SolutionFile {
        version: 1,
        algorithm,
        eps: opts.eps,
        seed: opts.seed,
        gamma: inst.gamma(),
        removal: opts.removal,
        joining: opts.joining,
        beta_cap: opts.beta_cap,
        kind: result.front.kind(),
        stats: result.stats,
        items: result.front.into_items(),
    };
    emit(out, &to_json(&file)?)?;
    Ok(ExitCode::SUCCESS)
}

/// Every item must be a Hamiltonian cycle of the instance with its stated weight.
fn check_solution(inst: &Instance, sol: &SolutionFile) -> Result<(), Error> {
    if sol.kind != SolutionKind::Tour {
        return Err(Error::KindMismatch {
            expected: SolutionKind::Tour.to_string(),
            found: sol.kind.to_string(),
        });
    }
    for (i, it) in sol.items.iter().enumerate() {
        let edges: Vec<_> = it
            .edges
            .iter()
            .map(|e| mctsp::Edge::new(e.0, e.1, inst.directed()))
            .collect();
        validate_hamiltonian(inst.n(), inst.directed(), &edges)
            .map_err(|e| Error::Structural(format!("item {i}: {e}")))?;
        let w = inst.total_weight(&edges)?;
        if w != it.weight {
            return Err(Error::Structural(format!("item {i}: stated weight {} but edges weigh {w}", it.weight)));
        }
    }
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))
}

fn cmd_verify(instance: &Path, solution: &Path, oracle: &str, out: Option<&Path>) -> CliResult {
    let inst = read_instance(instance)?;
    let sol: SolutionFile = read_json(solution)?;
    let oracle_front = if oracle == "exact" {
        oracle_tours(&inst, &OracleCaps::from_env()?)?
    } else {
        let f: FrontFile = read_json(Path::new(oracle))?;
        ParetoSet::new(f.kind, f.items)
    };
    let front = ParetoSet::new(sol.kind, sol.items.clone());
    let descriptor = InstanceDescriptor::of(&inst, instance.display().to_string(), None);
    let mut report = RatioReport {
        instance: descriptor,
        algorithm: sol.algorithm,
        eps: sol.eps,
        beta: None,
        bound: None,
        pass: false,
        front_size: front.len(),
        oracle_size: oracle_front.len(),
        error: None,
        wall_ms: None,
    };
    match check_solution(&inst, &sol) {
        Ok(()) => {
            let j = judge(sol.algorithm, &inst, &front, &oracle_front, &sol.eps, sol.beta_cap.as_ref())?;
            report.beta = Some(j.beta);
            report.bound = Some(j.bound);
            report.pass = j.pass;
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    emit(out, &to_json(&report)?)?;
    if !report.pass {
        eprintln!(
            "verification failed: {}",
            report.error.clone().unwrap_or_else(|| format!(
                "coverage {} exceeds bound {}",
                report.beta.map(|b| b.to_wire()).unwrap_or_default(),
                report.bound.map(|b| rational::to_string(&b)).unwrap_or_default()
            ))
        );
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(config: &Path, timing: bool, out: Option<&Path>, summary_out: Option<&Path>) -> CliResult {
    let mut cfg: ExperimentConfig = read_json(config)?;
    cfg.timing |= timing;
    let rows = run_experiment(&cfg)?;
    let mut lines = String::new();
    for r in &rows {
        lines.push_str(&serde_json::to_string(r)?);
        lines.push('\n');
    }
    emit(out, &lines)?;
    let summary = summarize(&rows);
    let text = to_json(&summary)?;
    match summary_out {
        Some(p) => fs::write(p, text)?,
        None => eprint!("{text}"),
    }
    Ok(if summary.failed > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_curves(start: &Rational, end: &Rational, step: &Rational, out: Option<&Path>) -> CliResult {
    let grid = gamma_grid(start, end, step)?;
    emit(out, &emit_curves(&grid))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Generate {
            n,
            k,
            variant,
            gamma,
            scale,
            seed,
            one_fraction,
            out,
        } => {
            let spec = GenSpec::new(variant, n, k, seed)
                .with_gamma(gamma)
                .with_scale(scale)
                .with_one_fraction(one_fraction);
            cmd_generate(spec, out.as_deref())
        }
        Command::Solve {
            instance,
            algorithm,
            eps,
            seed,
            removal,
            joining,
            beta_cap,
            out,
        } => {
            let mut opts = SolveOptions::new(eps)
                .with_seed(seed)
                .with_caps(OracleCaps::from_env()?)
                .with_removal(removal)
                .with_joining(joining);
            opts.beta_cap = beta_cap;
            cmd_solve(&instance, algorithm, opts, out.as_deref())
        }
        Command::Verify {
            instance,
            solution,
            oracle,
            out,
        } => cmd_verify(&instance, &solution, &oracle, out.as_deref()),
        Command::Bench {
            config,
            timing,
            out,
            summary,
        } => cmd_bench(&config, timing, out.as_deref(), summary.as_deref()),
        Command::Curves {
            grid_start,
            grid_end,
            grid_step,
            out,
        } => cmd_curves(&grid_start, &grid_end, &grid_step, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
