use super::{check_cap, OracleCaps};
use crate::error::Result;
use crate::graph::{Edge, Instance};
use crate::pareto::{ParetoAccumulator, ParetoSet, SolutionKind};

/// Calls `visit` once per cycle cover of the complete graph on `0..n`.
///
/// Each cycle is grown from the smallest uncovered vertex. Undirected cycles
/// need length at least 3 and are emitted in one orientation only (second
/// vertex smaller than last); directed cycles need length at least 2.
pub fn for_each_cycle_cover(n: usize, directed: bool, mut visit: impl FnMut(&[Vec<usize>])) {
    let mut covered = vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    grow(n, directed, &mut covered, &mut cycles, &mut visit);
}

fn grow(
    n: usize,
    directed: bool,
    covered: &mut [bool],
    cycles: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    let Some(start) = covered.iter().position(|c| !c) else {
        visit(cycles);
        return;
    };
    covered[start] = true;
    cycles.push(vec![start]);
    extend(n, directed, covered, cycles, visit);
    cycles.pop();
    covered[start] = false;
}

fn extend(
    n: usize,
    directed: bool,
    covered: &mut [bool],
    cycles: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    let cur = cycles.last().unwrap();
    let len = cur.len();
    let min_len = if directed { 2 } else { 3 };
    if len >= min_len && (directed || cur[1] < cur[len - 1]) {
        grow(n, directed, covered, cycles, visit);
    }
    let start = cycles.last().unwrap()[0];
    for v in (start + 1)..n {
        if covered[v] {
            continue;
        }
        covered[v] = true;
        cycles.last_mut().unwrap().push(v);
        extend(n, directed, covered, cycles, visit);
        cycles.last_mut().unwrap().pop();
        covered[v] = false;
    }
}

/// Exact Pareto front over all cycle covers: derangements grouped into cycles
/// when directed, two-factors with cycles of length at least 3 otherwise.
pub fn oracle_cycle_covers(inst: &Instance, caps: &OracleCaps) -> Result<ParetoSet> {
    let n = inst.n();
    check_cap("cycle cover", n, caps.cycle_covers)?;
    let directed = inst.directed();
    let k = inst.k();
    let mut front = ParetoAccumulator::new(SolutionKind::CycleCover);
    for_each_cycle_cover(n, directed, |cycles| {
        let mut w = vec![0u64; k];
        for c in cycles {
            let m = c.len();
            for j in 0..m {
                for (crit, x) in w.iter_mut().enumerate() {
                    *x += inst.w(crit, c[j], c[(j + 1) % m]);
                }
            }
        }
        front.offer(&w.into(), || {
            cycles
                .iter()
                .flat_map(|c| {
                    let m = c.len();
                    (0..m).map(move |j| Edge::new(c[j], c[(j + 1) % m], directed))
                })
                .collect()
        });
    });
    Ok(front.finish())
}
