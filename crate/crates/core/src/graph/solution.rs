use std::collections::BTreeSet;

use super::Edge;
use crate::error::{Error, Result};

/// Checks that `edges` form one Hamiltonian cycle on `0..n`: exactly `n`
/// edges, every vertex of degree two (in/out degree one when directed) and a
/// single connected cycle.
pub fn validate_hamiltonian(n: usize, directed: bool, edges: &[Edge]) -> Result<()> {
    if edges.len() != n {
        return Err(Error::Structural(format!(
            "tour must have {n} edges, found {}",
            edges.len()
        )));
    }
    let mut succ = vec![usize::MAX; n];
    let mut indeg = vec![0usize; n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in edges {
        if e.0 >= n || e.1 >= n || e.0 == e.1 {
            return Err(Error::Structural(format!("invalid tour edge {e}")));
        }
        if directed {
            if succ[e.0] != usize::MAX {
                return Err(Error::Structural(format!("vertex {} has out-degree > 1", e.0)));
            }
            succ[e.0] = e.1;
            indeg[e.1] += 1;
        } else {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
    }
    if directed {
        if let Some(v) = (0..n).find(|&v| succ[v] == usize::MAX || indeg[v] != 1) {
            return Err(Error::Structural(format!("vertex {v} is not on the tour exactly once")));
        }
        let mut seen = 1;
        let mut cur = succ[0];
        while cur != 0 {
            seen += 1;
            if seen > n {
                break;
            }
            cur = succ[cur];
        }
        if seen != n {
            return Err(Error::Structural("arcs form more than one cycle".into()));
        }
    } else {
        if let Some(v) = (0..n).find(|&v| adj[v].len() != 2) {
            return Err(Error::Structural(format!(
                "vertex {v} has degree {} in tour",
                adj[v].len()
            )));
        }
        if adj.iter().any(|a| a[0] == a[1]) {
            return Err(Error::Structural("tour repeats an edge".into()));
        }
        let (mut prev, mut cur, mut seen) = (0usize, adj[0][0], 1usize);
        while cur != 0 && seen <= n {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
            seen += 1;
        }
        if seen != n {
            return Err(Error::Structural("edges form more than one cycle".into()));
        }
    }
    Ok(())
}

/// A Hamiltonian cycle, stored as a vertex order in canonical rotation:
/// starting at vertex 0, and for undirected tours with `order[1] < order[n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tour {
    order: Vec<usize>,
    directed: bool,
}

impl Tour {
    pub fn from_order(order: Vec<usize>, directed: bool) -> Result<Self> {
        let n = order.len();
        if n < 3 {
            return Err(Error::Structural(format!("tour on {n} vertices")));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::Structural(format!(
                    "tour order is not a permutation of 0..{n} (vertex {v})"
                )));
            }
            seen[v] = true;
        }
        let mut order = order;
        let pos = order.iter().position(|&v| v == 0).unwrap();
        order.rotate_left(pos);
        if !directed && n > 2 && order[1] > order[n - 1] {
            order[1..].reverse();
        }
        Ok(Tour { order, directed })
    }

    pub fn from_edges(n: usize, directed: bool, edges: &[Edge]) -> Result<Self> {
        validate_hamiltonian(n, directed, edges)?;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in edges {
            adj[e.0].push(e.1);
            if !directed {
                adj[e.1].push(e.0);
            }
        }
        let mut order = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, 0usize);
        for _ in 0..n {
            order.push(cur);
            let next = if directed || adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
            prev = cur;
            cur = next;
        }
        Tour::from_order(order, directed)
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    /// Edges in traversal order.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.order.len();
        (0..n)
            .map(|i| Edge::new(self.order[i], self.order[(i + 1) % n], self.directed))
            .collect()
    }

    pub fn canonical_edges(&self) -> Vec<Edge> {
        let mut e = self.edges();
        e.sort();
        e
    }

    pub fn validate(&self) -> Result<()> {
        validate_hamiltonian(self.n(), self.directed, &self.edges())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// An undirected spanning tree on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    n: usize,
    edges: Vec<Edge>,
}

impl SpanningTree {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        if edges.len() + 1 != n {
            return Err(Error::Structural(format!(
                "spanning tree on {n} vertices needs {} edges, found {}",
                n.saturating_sub(1),
                edges.len()
            )));
        }
        let mut uf = UnionFind::new(n);
        let mut canon = Vec::with_capacity(edges.len());
        for e in edges {
            if e.0 >= n || e.1 >= n || e.0 == e.1 {
                return Err(Error::Structural(format!("invalid tree edge {e}")));
            }
            if !uf.union(e.0, e.1) {
                return Err(Error::Structural(format!("edge {e} closes a cycle")));
            }
            canon.push(Edge::undirected(e.0, e.1));
        }
        canon.sort();
        Ok(SpanningTree { n, edges: canon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.0] += 1;
            d[e.1] += 1;
        }
        d
    }

    /// Both copies of every edge.
    pub fn doubled(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&self.edges);
        Multigraph::new(self.n, false, edges)
    }
}

/// Vertices of odd degree in `t`, ascending. Always of even cardinality.
pub fn odd_vertices(t: &SpanningTree) -> Vec<usize> {
    t.degrees()
        .iter()
        .enumerate()
        .filter(|(_, d)| *d % 2 == 1)
        .map(|(v, _)| v)
        .collect()
}

/// A set of vertex-disjoint undirected edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates disjointness; with `perfect_on`, also that the matching
    /// covers exactly that vertex set.
    pub fn new(edges: Vec<Edge>, perfect_on: Option<&[usize]>) -> Result<Self> {
        let mut used = BTreeSet::new();
        let mut canon = Vec::with_capacity(edges.len());
        for e in edges {
            if e.0 == e.1 {
                return Err(Error::Structural(format!("matching edge {e} is a loop")));
            }
            for x in [e.0, e.1] {
                if !used.insert(x) {
                    return Err(Error::Structural(format!("vertex {x} matched twice")));
                }
            }
            canon.push(Edge::undirected(e.0, e.1));
        }
        if let Some(subset) = perfect_on {
            let want: BTreeSet<usize> = subset.iter().copied().collect();
            if want != used {
                return Err(Error::Structural(
                    "matching is not perfect on the designated vertex set".into(),
                ));
            }
        }
        canon.sort();
        Ok(Matching { edges: canon })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// A partition of the vertices into cycles. Each cycle is a vertex sequence
/// starting at its smallest vertex; undirected cycles are oriented so that the
/// second vertex is smaller than the last. Cycles are sorted by first vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleCover {
    n: usize,
    directed: bool,
    cycles: Vec<Vec<usize>>,
}

impl CycleCover {
    pub fn new(n: usize, directed: bool, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let min_len = if directed { 2 } else { 3 };
        let mut seen = vec![false; n];
        let mut canon = Vec::with_capacity(cycles.len());
        for mut c in cycles {
            if c.len() < min_len {
                return Err(Error::Structural(format!(
                    "cycle of length {} (minimum {min_len})",
                    c.len()
                )));
            }
            for &v in &c {
                if v >= n || seen[v] {
                    return Err(Error::Structural(format!(
                        "vertex {v} is not on exactly one cycle"
                    )));
                }
                seen[v] = true;
            }
            let pos = c.iter().enumerate().min_by_key(|(_, v)| **v).unwrap().0;
            c.rotate_left(pos);
            let m = c.len();
            if !directed && c[1] > c[m - 1] {
                c[1..].reverse();
            }
            canon.push(c);
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Structural(format!("vertex {v} is not covered")));
        }
        canon.sort_by_key(|c| c[0]);
        Ok(CycleCover {
            n,
            directed,
            cycles: canon,
        })
    }

    /// Reassembles a cover from its edge set (degree two everywhere,
    /// in/out degree one when directed).
    pub fn from_edges(n: usize, directed: bool, edges: &[Edge]) -> Result<Self> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in edges {
            if e.0 >= n || e.1 >= n || e.0 == e.1 {
                return Err(Error::Structural(format!("invalid cover edge {e}")));
            }
            adj[e.0].push(e.1);
            if !directed {
                adj[e.1].push(e.0);
            }
        }
        let want = if directed { 1 } else { 2 };
        if let Some(v) = (0..n).find(|&v| adj[v].len() != want) {
            return Err(Error::Structural(format!("vertex {v} has wrong degree in cover")));
        }
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for s in 0..n {
            if visited[s] {
                continue;
            }
            let mut cyc = vec![s];
            visited[s] = true;
            let (mut prev, mut cur) = (s, adj[s][0]);
            while cur != s {
                if visited[cur] {
                    return Err(Error::Structural("cover edges do not form cycles".into()));
                }
                visited[cur] = true;
                cyc.push(cur);
                let next = if directed || adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
                prev = cur;
                cur = next;
            }
            cycles.push(cyc);
        }
        CycleCover::new(n, directed, cycles)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Edges of cycle `i` in traversal order.
    pub fn cycle_edges(&self, i: usize) -> Vec<Edge> {
        let c = &self.cycles[i];
        let m = c.len();
        (0..m)
            .map(|j| Edge::new(c[j], c[(j + 1) % m], self.directed))
            .collect()
    }

    pub fn edges(&self) -> Vec<Edge> {
        (0..self.cycles.len()).flat_map(|i| self.cycle_edges(i)).collect()
    }

    pub fn canonical_edges(&self) -> Vec<Edge> {
        let mut e = self.edges();
        e.sort();
        e
    }
}

/// An edge multiset over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    directed: bool,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(n: usize, directed: bool, edges: Vec<Edge>) -> Self {
        Multigraph { n, directed, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn extend(&mut self, more: &[Edge]) {
        self.edges.extend_from_slice(more);
    }

    /// Undirected degree (in + out for arcs).
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.0] += 1;
            d[e.1] += 1;
        }
        d
    }

    /// Every vertex has even degree (balanced in/out when directed) and the
    /// non-isolated vertices form one connected component.
    pub fn is_eulerian(&self) -> bool {
        super::euler::check_eulerian(self).is_ok()
    }
}
