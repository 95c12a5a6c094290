use num_traits::Zero;

use super::{check_eps, effective_gamma, tour_item, AlgorithmOutput, JoinOrder, RemovalPolicy, SolveOptions, SolveStats};
use crate::analysis::{ratio_bound, RatioModel};
use crate::error::{Error, Result};
use crate::graph::{CycleCover, Edge, Instance, Tour};
use crate::oracles::{CurveBackend, CurveRequest};
use crate::par;
use crate::pareto::{filter_dominated, ParetoItem, ParetoSet, SolutionKind};
use crate::rational::{self, ratio, Rational};

/// A cover turned into a tour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Patched {
    pub tour: Tour,
    pub removed: Vec<Edge>,
    pub added: Vec<Edge>,
}

/// Largest fraction of `n` that can be removed: every cycle has at least 3
/// vertices undirected, 2 directed.
fn alpha(directed: bool) -> Rational {
    if directed {
        ratio(1, 2)
    } else {
        ratio(1, 3)
    }
}

/// `sum_i w_i(u, v) / w_i^min`.
fn aggregate(inst: &Instance, mins: &[u64], u: usize, v: usize) -> Rational {
    mins.iter()
        .enumerate()
        .map(|(c, &m)| ratio(inst.w(c, u, v) as i128, m as i128))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Position `j` of the removed edge `c[j] -> c[j + 1]`.
fn removal_index(inst: &Instance, c: &[usize], policy: RemovalPolicy, mins: &[u64]) -> usize {
    let m = c.len();
    let edge = |j: usize| Edge::new(c[j], c[(j + 1) % m], inst.directed());
    match policy {
        RemovalPolicy::CanonicalFirst => (0..m).min_by_key(|&j| edge(j)).unwrap(),
        RemovalPolicy::AggregateHeaviest => {
            let mut best = 0;
            let mut best_score = aggregate(inst, mins, c[0], c[1 % m]);
            for j in 1..m {
                let score = aggregate(inst, mins, c[j], c[(j + 1) % m]);
                if score > best_score || (score == best_score && edge(j) < edge(best)) {
                    best = j;
                    best_score = score;
                }
            }
            best
        }
    }
}

fn join_order(inst: &Instance, paths: &[Vec<usize>], joining: JoinOrder, mins: &[u64]) -> Vec<usize> {
    match joining {
        JoinOrder::Canonical => (0..paths.len()).collect(),
        JoinOrder::GreedyNearest => {
            let mut used = vec![false; paths.len()];
            let mut order = vec![0];
            used[0] = true;
            while order.len() < paths.len() {
                let end = *paths[*order.last().unwrap()].last().unwrap();
                let mut best: Option<(Rational, usize)> = None;
                for (i, p) in paths.iter().enumerate() {
                    if used[i] {
                        continue;
                    }
                    let d = aggregate(inst, mins, end, p[0]);
                    if best.as_ref().map_or(true, |(bd, _)| d < *bd) {
                        best = Some((d, i));
                    }
                }
                let (_, i) = best.unwrap();
                used[i] = true;
                order.push(i);
            }
            order
        }
    }
}

/// Removes one edge per cycle and chains the resulting paths into a tour.
/// Directed paths keep their orientation and are joined head to tail. A cover
/// with a single cycle is already a tour and is returned as is.
pub fn patch_cover(inst: &Instance, cover: &CycleCover, removal: RemovalPolicy, joining: JoinOrder) -> Result<Patched> {
    let directed = inst.directed();
    if cover.n() != inst.n() || cover.directed() != directed {
        return Err(Error::MalformedInput(format!(
            "cover on {} vertices (directed: {}) does not fit the instance",
            cover.n(),
            cover.directed()
        )));
    }
    let cycles = cover.cycles();
    if cycles.len() == 1 {
        return Ok(Patched {
            tour: Tour::from_order(cycles[0].clone(), directed)?,
            removed: Vec::new(),
            added: Vec::new(),
        });
    }
    let mins = inst.min_weights();
    let mut removed = Vec::with_capacity(cycles.len());
    let mut paths = Vec::with_capacity(cycles.len());
    for c in cycles {
        let m = c.len();
        let j = removal_index(inst, c, removal, &mins);
        removed.push(Edge::new(c[j], c[(j + 1) % m], directed));
        paths.push((1..=m).map(|t| c[(j + t) % m]).collect::<Vec<_>>());
    }
    let order = join_order(inst, &paths, joining, &mins);
    let mut added = Vec::with_capacity(order.len());
    let mut tour = Vec::with_capacity(inst.n());
    for (pos, &i) in order.iter().enumerate() {
        let next = &paths[order[(pos + 1) % order.len()]];
        added.push(Edge::new(*paths[i].last().unwrap(), next[0], directed));
        tour.extend_from_slice(&paths[i]);
    }
    Ok(Patched {
        tour: Tour::from_order(tour, directed)?,
        removed,
        added,
    })
}

/// Precision for the cycle-cover subcurve: `eps / rho` with `rho` the
/// smallest ratio guaranteed for this instance (without eps), so that
/// `(1 + eps') * rho <= rho + eps`. Never larger than `eps / (1 + alpha (beta - 1))`.
pub fn cycle_cover_subcurve_eps(inst: &Instance, eps: &Rational, beta_cap: Option<&Rational>) -> Result<Rational> {
    let directed = inst.directed();
    let gamma = effective_gamma(inst);
    let one_two = inst.is_one_two();
    if directed && !one_two && !rational::below_inv_sqrt3(&gamma) && beta_cap.is_none() {
        return Err(Error::Refused(format!(
            "directed instance with gamma {gamma} >= 1/sqrt(3): w_max / w_min can be unbounded, pass an explicit beta cap"
        )));
    }
    let spread = inst.spread();
    let beta = match beta_cap {
        Some(cap) if *cap < spread => {
            return Err(Error::Parameter(format!("beta cap {cap} is below the instance spread {spread}")))
        }
        Some(cap) => *cap,
        None => spread,
    };
    let zero = Rational::zero();
    let mut rho = ratio_bound(&RatioModel::CycleCoverGeneric {
        alpha: alpha(directed),
        beta,
        eps: zero,
    })?;
    let refined = if directed {
        RatioModel::CycleCoverAtsp { gamma, eps: zero }
    } else {
        RatioModel::CycleCoverRefined { gamma, eps: zero }
    };
    if inst.gamma().is_some() {
        if let Ok(r) = ratio_bound(&refined) {
            rho = rho.min(r);
        }
    }
    Ok(eps / rho)
}

/// Patches every cover of an approximate cycle-cover curve into a tour.
pub fn cycle_cover_patch(inst: &Instance, opts: &SolveOptions, backend: &dyn CurveBackend) -> Result<AlgorithmOutput> {
    check_eps(&opts.eps)?;
    let sub_eps = cycle_cover_subcurve_eps(inst, &opts.eps, opts.beta_cap.as_ref())?;
    let covers = backend.curve(&CurveRequest::CycleCover, inst, &sub_eps, opts.seed)?;
    let n = inst.n();
    let a = alpha(inst.directed());
    let results: Vec<Result<(ParetoItem, usize)>> = par::map_range(covers.len(), |i| {
        let cover = CycleCover::from_edges(n, inst.directed(), &covers.items()[i].edges)?;
        let patched = patch_cover(inst, &cover, opts.removal, opts.joining)?;
        let r = patched.removed.len();
        let expected = if cover.cycles().len() == 1 { 0 } else { cover.cycles().len() };
        if r != expected || patched.added.len() != expected {
            return Err(Error::Structural(format!("cover {i}: removed {r} edges from {} cycles", cover.cycles().len())));
        }
        if r as i128 * a.denom() > a.numer() * n as i128 {
            return Err(Error::Structural(format!("cover {i}: removed {r} edges, more than {a} of {n}")));
        }
        Ok((tour_item(&patched.tour, inst, i)?, r))
    });
    let mut items = Vec::with_capacity(results.len());
    let mut max_removed = 0;
    for r in results {
        let (item, removed) = r?;
        max_removed = max_removed.max(removed);
        items.push(item);
    }
    let stats = SolveStats {
        subcurve: covers.len(),
        candidates: items.len(),
        max_removed,
        checked: items.len(),
        ..SolveStats::default()
    };
    let front = filter_dominated(&ParetoSet::new(SolutionKind::Tour, items));
    Ok(AlgorithmOutput { front, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{solve, Algorithm};
    use crate::graph::validate_hamiltonian;
    use crate::instances::{generate, GenSpec, Variant};
    use crate::oracles::{oracle_tours, OracleCaps};
    use crate::pareto::coverage_beta;
    use crate::rational::int;

    fn defaults() -> (RemovalPolicy, JoinOrder) {
        (RemovalPolicy::default(), JoinOrder::default())
    }

    #[test]
    fn single_cycle_is_unchanged() {
        let inst = Instance::from_fn(5, 1, false, None, |_, u, v| (u + v) as u64).unwrap();
        let cover = CycleCover::new(5, false, vec![vec![0, 2, 4, 1, 3]]).unwrap();
        let (r, j) = defaults();
        let p = patch_cover(&inst, &cover, r, j).unwrap();
        assert_eq!(p.tour.canonical_edges(), cover.canonical_edges());
        assert!(p.removed.is_empty() && p.added.is_empty());
    }

    #[test]
    fn two_triangles_keep_four_edges() {
        let inst = Instance::from_fn(6, 2, false, None, |c, u, v| 1 + ((u * v + c) % 3) as u64).unwrap();
        let cover = CycleCover::new(6, false, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        for removal in [RemovalPolicy::AggregateHeaviest, RemovalPolicy::CanonicalFirst] {
            for joining in [JoinOrder::Canonical, JoinOrder::GreedyNearest] {
                let p = patch_cover(&inst, &cover, removal, joining).unwrap();
                let edges = p.tour.canonical_edges();
                assert_eq!(edges.len(), 6);
                let kept = edges.iter().filter(|e| cover.canonical_edges().contains(e)).count();
                assert_eq!(kept, 4);
                assert_eq!(p.removed.len(), 2);
                assert_eq!(p.added.len(), 2);
                validate_hamiltonian(6, false, &edges).unwrap();
            }
        }
        let (_, j) = defaults();
        let p = patch_cover(&inst, &cover, RemovalPolicy::CanonicalFirst, j).unwrap();
        assert_eq!(p.removed, vec![Edge(0, 1), Edge(3, 4)]);
    }

    #[test]
    fn aggregate_heaviest_picks_the_heavy_edge() {
        let inst = Instance::from_fn(6, 1, false, None, |_, u, v| if (u, v) == (1, 2) { 2 } else { 1 }).unwrap();
        let cover = CycleCover::new(6, false, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let (r, j) = defaults();
        let p = patch_cover(&inst, &cover, r, j).unwrap();
        assert_eq!(p.removed[0], Edge(1, 2));
    }

    #[test]
    fn directed_two_cycles_join_head_to_tail() {
        let inst = Instance::from_fn(4, 1, true, None, |_, u, v| 1 + (u + 2 * v) as u64 % 2).unwrap();
        let cover = CycleCover::new(4, true, vec![vec![0, 1], vec![2, 3]]).unwrap();
        // One arc goes from each 2-cycle; each choice pair yields one tour.
        let valid = [vec![0, 1, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 3, 1], vec![0, 3, 2, 1]];
        for removal in [RemovalPolicy::AggregateHeaviest, RemovalPolicy::CanonicalFirst] {
            let p = patch_cover(&inst, &cover, removal, JoinOrder::Canonical).unwrap();
            assert_eq!(p.tour.edges().len(), 4);
            validate_hamiltonian(4, true, &p.tour.edges()).unwrap();
            assert!(valid.contains(&p.tour.order().to_vec()), "{:?}", p.tour.order());
            for a in &p.added {
                assert!(p.tour.edges().contains(a));
            }
            for r in &p.removed {
                assert!(!p.tour.edges().contains(r));
            }
        }
    }

    #[test]
    fn one_two_within_four_thirds() {
        for seed in 0..5 {
            let inst = generate(&GenSpec::new(Variant::OneTwoUndirected, 7, 2, seed)).unwrap();
            let out = solve(Algorithm::CycleCover, &inst, &SolveOptions::new(Rational::zero())).unwrap();
            let oracle = oracle_tours(&inst, &OracleCaps::default()).unwrap();
            assert!(coverage_beta(&out.front, &oracle).unwrap().at_most(&ratio(4, 3)));
            assert!(3 * out.stats.max_removed <= 7);
        }
    }

    #[test]
    fn uniform_half_is_exact_both_directions() {
        for directed in [false, true] {
            let inst = Instance::from_fn(6, 2, directed, Some(ratio(1, 2)), |_, _, _| 5).unwrap();
            let out = solve(Algorithm::CycleCover, &inst, &SolveOptions::new(ratio(1, 10))).unwrap();
            let oracle = oracle_tours(&inst, &OracleCaps::default()).unwrap();
            assert_eq!(coverage_beta(&out.front, &oracle).unwrap().value(), Some(int(1)));
        }
    }

    #[test]
    fn directed_metric_needs_a_beta_cap() {
        let inst = Instance::from_fn(5, 1, true, None, |_, u, v| 2 + ((u + v) % 2) as u64).unwrap();
        let opts = SolveOptions::new(ratio(1, 10));
        let err = solve(Algorithm::CycleCover, &inst, &opts).unwrap_err();
        assert!(matches!(err, Error::Refused(_)), "{err}");
        let out = solve(Algorithm::CycleCover, &inst, &opts.clone().with_beta_cap(ratio(3, 2))).unwrap();
        assert!(!out.front.is_empty());
        assert!(solve(Algorithm::CycleCover, &inst, &opts.with_beta_cap(ratio(5, 4))).is_err());
    }

    #[test]
    fn subcurve_eps_uses_the_tightest_bound() {
        let inst = Instance::from_fn(5, 1, false, Some(ratio(1, 2)), |_, _, _| 4).unwrap();
        assert_eq!(cycle_cover_subcurve_eps(&inst, &ratio(1, 10), None).unwrap(), ratio(1, 10));
        let inst = generate(&GenSpec::new(Variant::OneTwoDirected, 5, 1, 2)).unwrap();
        let e = cycle_cover_subcurve_eps(&inst, &int(1), None).unwrap();
        assert!(e <= int(1) / (int(1) + ratio(1, 2) * (inst.spread() - int(1))));
    }
}
