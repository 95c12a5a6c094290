use super::{check_cap, lower_bound, OracleCaps};
use crate::error::Result;
use crate::graph::{Edge, Instance};
use crate::par;
use crate::pareto::{ParetoAccumulator, ParetoSet, SolutionKind};

/// Exact Pareto front over all Hamiltonian cycles.
///
/// Tours are rooted at vertex 0; undirected tours are counted once per
/// orientation. The search is split on the second vertex of the tour and the
/// partial fronts merged, with branch-and-bound pruning against each partial
/// front.
pub fn oracle_tours(inst: &Instance, caps: &OracleCaps) -> Result<ParetoSet> {
    let n = inst.n();
    let cap = if inst.directed() {
        caps.tours_directed
    } else {
        caps.tours_undirected
    };
    check_cap("tour", n, cap)?;
    let min_w = inst.min_weights();
    let seconds: Vec<usize> = (1..n).collect();
    let parts = par::map(&seconds, |&second| {
        let mut search = TourSearch::new(inst, &min_w);
        search.run(second);
        search.front
    });
    let front = parts
        .into_iter()
        .fold(ParetoAccumulator::new(SolutionKind::Tour), ParetoAccumulator::merge);
    Ok(front.finish())
}

struct TourSearch<'a> {
    inst: &'a Instance,
    min_w: &'a [u64],
    path: Vec<usize>,
    used: Vec<bool>,
    partial: Vec<u64>,
    front: ParetoAccumulator,
}

impl<'a> TourSearch<'a> {
    fn new(inst: &'a Instance, min_w: &'a [u64]) -> Self {
        TourSearch {
            inst,
            min_w,
            path: Vec::with_capacity(inst.n()),
            used: vec![false; inst.n()],
            partial: vec![0; inst.k()],
            front: ParetoAccumulator::new(SolutionKind::Tour),
        }
    }

    fn run(&mut self, second: usize) {
        self.path.push(0);
        self.used[0] = true;
        self.step(second);
    }

    fn add(&mut self, u: usize, v: usize, sign: bool) {
        for c in 0..self.inst.k() {
            let w = self.inst.w(c, u, v);
            if sign {
                self.partial[c] += w;
            } else {
                self.partial[c] -= w;
            }
        }
    }

    fn step(&mut self, v: usize) {
        let n = self.inst.n();
        let last = *self.path.last().unwrap();
        self.add(last, v, true);
        self.path.push(v);
        self.used[v] = true;

        let placed = self.path.len();
        let remaining = (n - placed + 1) as u64;
        let lb = lower_bound(&self.partial, remaining, self.min_w);
        if !self.front.strictly_dominated(&lb) {
            if placed == n {
                self.close();
            } else {
                for next in 1..n {
                    if !self.used[next] {
                        self.step(next);
                    }
                }
            }
        }

        self.used[v] = false;
        self.path.pop();
        self.add(last, v, false);
    }

    fn close(&mut self) {
        let n = self.inst.n();
        let directed = self.inst.directed();
        if !directed && self.path[n - 1] < self.path[1] {
            return;
        }
        let last = self.path[n - 1];
        let mut w = self.partial.clone();
        for (c, x) in w.iter_mut().enumerate() {
            *x += self.inst.w(c, last, 0);
        }
        let path = &self.path;
        self.front.offer(&w.into(), || {
            (0..n)
                .map(|i| Edge::new(path[i], path[(i + 1) % n], directed))
                .collect()
        });
    }
}
