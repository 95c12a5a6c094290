use super::{check_eps, require_undirected, tour_item, AlgorithmOutput, SolveOptions, SolveStats};
use crate::error::{Error, Result};
use crate::graph::{euler_circuit, odd_vertices, shortcut_walk, Instance, Multigraph, SpanningTree};
use crate::oracles::{CurveBackend, CurveRequest};
use crate::par;
use crate::pareto::{amplify, filter_dominated, ParetoItem, ParetoSet, SolutionKind};
use crate::rational::int;

/// `ceil(log2(2p))` independent runs push the per-tree failure probability of
/// a success-1/2 subroutine below `1/(2p)`, so all `p` trees succeed together
/// with probability at least 1/2.
pub fn amplification_runs(p: usize) -> usize {
    (2 * p.max(1)).next_power_of_two().trailing_zeros() as usize
}

/// For every tree `T` of an `eps/2`-approximate tree curve, joins `T` with
/// every matching of an `eps/2`-approximate curve of perfect matchings on the
/// odd-degree vertices of `T`, then walks and shortcuts the union.
pub fn christofides_multi(
    inst: &Instance,
    opts: &SolveOptions,
    backend: &dyn CurveBackend,
) -> Result<AlgorithmOutput> {
    require_undirected(inst, "christofides")?;
    check_eps(&opts.eps)?;
    let half = opts.eps / int(2);
    let trees = backend.curve(&CurveRequest::Tree, inst, &half, opts.seed)?;
    let p = trees.len();
    let runs = if backend.randomized() { amplification_runs(p) } else { 1 };
    let per_tree: Vec<Result<Vec<ParetoItem>>> = par::map_range(p, |i| {
        let tree = SpanningTree::new(inst.n(), trees.items()[i].edges.clone())?;
        let req = CurveRequest::Matching(odd_vertices(&tree));
        let mut curves = Vec::with_capacity(runs);
        for r in 0..runs {
            let seed = par::derive_seed(opts.seed, (i * runs + r) as u64 + 1);
            let curve = backend.curve(&req, inst, &half, seed).map_err(|e| match e {
                Error::CapExceeded { .. } => Error::Refused(format!("tree {i}: {e}")),
                other => other,
            })?;
            curves.push(curve);
        }
        let matchings = amplify(&curves)?;
        let mut out = Vec::with_capacity(matchings.len());
        for m in matchings.items() {
            let mut union = Multigraph::new(inst.n(), false, tree.edges().to_vec());
            union.extend(&m.edges);
            if !union.is_eulerian() {
                return Err(Error::Structural(format!(
                    "tree {i} joined with matching {:?} is not Eulerian",
                    m.edges
                )));
            }
            let walk = euler_circuit(&union, 0)?;
            let tour = shortcut_walk(inst, &walk)?;
            out.push(tour_item(&tour, inst, i)?);
        }
        Ok(out)
    });
    let mut items = Vec::new();
    for r in per_tree {
        items.extend(r?);
    }
    let stats = SolveStats {
        subcurve: p,
        candidates: items.len(),
        runs_per_tree: runs,
        checked: items.len(),
        ..SolveStats::default()
    };
    let front = filter_dominated(&ParetoSet::new(SolutionKind::Tour, items));
    Ok(AlgorithmOutput { front, stats })
}
