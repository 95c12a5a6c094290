use super::{check_cap, lower_bound, OracleCaps};
use crate::error::{Error, Result};
use crate::graph::{Edge, Instance};
use crate::par;
use crate::pareto::{ParetoAccumulator, ParetoSet, SolutionKind};

/// Exact Pareto front over all spanning trees (undirected only).
///
/// Contraction-deletion over the canonical edge order: every edge is either
/// contracted into the tree or deleted, and deletion is only allowed while the
/// remaining edges still connect the current components, so every leaf is a
/// spanning tree. The search is split on the neighbourhood of vertex 0.
pub fn oracle_spanning_trees(inst: &Instance, caps: &OracleCaps) -> Result<ParetoSet> {
    if inst.directed() {
        return Err(Error::UndirectedRequired("spanning trees"));
    }
    let n = inst.n();
    check_cap("spanning tree", n, caps.trees)?;
    let edges = inst.edges();
    let k = inst.k();
    // suffix_min[i][c]: lightest edge among edges[i..] in criterion c.
    let mut suffix_min = vec![vec![u64::MAX; k]; edges.len() + 1];
    for i in (0..edges.len()).rev() {
        for c in 0..k {
            suffix_min[i][c] = suffix_min[i + 1][c].min(inst.w(c, edges[i].0, edges[i].1));
        }
    }
    // Edges 0..n-1 are exactly (0, 1), ..., (0, n-1).
    let masks: Vec<u32> = (1u32..(1u32 << (n - 1))).collect();
    let parts = par::map(&masks, |&mask| {
        let mut s = TreeSearch::new(inst, &edges, &suffix_min);
        for (i, e) in edges[..n - 1].iter().enumerate() {
            if mask & (1 << i) != 0 {
                s.include(*e);
            }
        }
        s.recurse(n - 1);
        s.front
    });
    let front = parts
        .into_iter()
        .fold(ParetoAccumulator::new(SolutionKind::Tree), ParetoAccumulator::merge);
    Ok(front.finish())
}

struct TreeSearch<'a> {
    inst: &'a Instance,
    edges: &'a [Edge],
    suffix_min: &'a [Vec<u64>],
    parent: Vec<usize>,
    size: Vec<usize>,
    // (absorbed root, old size of the surviving root)
    history: Vec<(usize, usize)>,
    chosen: Vec<Edge>,
    partial: Vec<u64>,
    front: ParetoAccumulator,
}

impl<'a> TreeSearch<'a> {
    fn new(inst: &'a Instance, edges: &'a [Edge], suffix_min: &'a [Vec<u64>]) -> Self {
        let n = inst.n();
        TreeSearch {
            inst,
            edges,
            suffix_min,
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
            chosen: Vec::with_capacity(n - 1),
            partial: vec![0; inst.k()],
            front: ParetoAccumulator::new(SolutionKind::Tree),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn include(&mut self, e: Edge) {
        let (mut a, mut b) = (self.find(e.0), self.find(e.1));
        if self.size[a] > self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.history.push((a, self.size[b]));
        self.parent[a] = b;
        self.size[b] += self.size[a];
        self.chosen.push(e);
        for c in 0..self.inst.k() {
            self.partial[c] += self.inst.w(c, e.0, e.1);
        }
    }

    fn undo(&mut self) {
        let (a, old) = self.history.pop().unwrap();
        let b = self.parent[a];
        self.parent[a] = a;
        self.size[b] = old;
        let e = self.chosen.pop().unwrap();
        for c in 0..self.inst.k() {
            self.partial[c] -= self.inst.w(c, e.0, e.1);
        }
    }

    /// The components stay connectable using only `edges[from..]`.
    fn connectable(&self, from: usize) -> bool {
        let n = self.inst.n();
        let mut roots: Vec<usize> = (0..n).map(|v| self.find(v)).collect();
        let mut comps = (0..n).filter(|&v| roots[v] == v).count();
        fn top(r: &mut [usize], mut x: usize) -> usize {
            while r[x] != x {
                r[x] = r[r[x]];
                x = r[x];
            }
            x
        }
        for e in &self.edges[from..] {
            let (a, b) = (top(&mut roots, e.0), top(&mut roots, e.1));
            if a != b {
                roots[a] = b;
                comps -= 1;
                if comps == 1 {
                    return true;
                }
            }
        }
        comps == 1
    }

    fn recurse(&mut self, i: usize) {
        let n = self.inst.n();
        if self.chosen.len() == n - 1 {
            let chosen = &self.chosen;
            let w = self.partial.clone().into();
            self.front.offer(&w, || chosen.clone());
            return;
        }
        if i == self.edges.len() {
            return;
        }
        let needed = (n - 1 - self.chosen.len()) as u64;
        let lb = lower_bound(&self.partial, needed, &self.suffix_min[i]);
        if self.front.strictly_dominated(&lb) {
            return;
        }
        let e = self.edges[i];
        if self.find(e.0) != self.find(e.1) {
            self.include(e);
            self.recurse(i + 1);
            self.undo();
            if self.connectable(i + 1) {
                self.recurse(i + 1);
            }
        } else {
            self.recurse(i + 1);
        }
    }
}
