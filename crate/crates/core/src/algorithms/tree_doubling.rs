use num_traits::One;

use super::{check_eps, require_undirected, tour_item, within_factor, AlgorithmOutput, SolveOptions, SolveStats};
use crate::error::{Error, Result};
use crate::graph::{euler_circuit, shortcut_walk, Instance, SpanningTree};
use crate::oracles::{CurveBackend, CurveRequest};
use crate::par;
use crate::pareto::{filter_dominated, ParetoItem, ParetoSet, SolutionKind};
use crate::rational::{int, Rational};

/// Doubles every tree of an `eps/2`-approximate spanning-tree curve, walks an
/// Euler circuit from vertex 0 and shortcuts it.
pub fn tree_doubling(inst: &Instance, opts: &SolveOptions, backend: &dyn CurveBackend) -> Result<AlgorithmOutput> {
    require_undirected(inst, "tree doubling")?;
    check_eps(&opts.eps)?;
    let half = opts.eps / int(2);
    let trees = backend.curve(&CurveRequest::Tree, inst, &half, opts.seed)?;
    // Tour weight <= (1 + gamma) * tree weight holds only under a declared gamma.
    let factor = inst.gamma().map(|g| g + Rational::one());
    let items: Vec<Result<ParetoItem>> = par::map_range(trees.len(), |i| {
        let src = &trees.items()[i];
        let tree = SpanningTree::new(inst.n(), src.edges.clone())?;
        let walk = euler_circuit(&tree.doubled(), 0)?;
        let tour = shortcut_walk(inst, &walk)?;
        let item = tour_item(&tour, inst, i)?;
        if let Some(f) = &factor {
            if !within_factor(&item.weight, &src.weight, f) {
                return Err(Error::Structural(format!(
                    "tour {} exceeds (1 + gamma) times tree {i} weight {}",
                    item.weight, src.weight
                )));
            }
        }
        Ok(item)
    });
    let items = items.into_iter().collect::<Result<Vec<_>>>()?;
    let stats = SolveStats {
        subcurve: trees.len(),
        candidates: items.len(),
        checked: items.len(),
        ..SolveStats::default()
    };
    let front = filter_dominated(&ParetoSet::new(SolutionKind::Tour, items));
    Ok(AlgorithmOutput { front, stats })
}
