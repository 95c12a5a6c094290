use crate::error::{Error, Result};
use crate::graph::{Edge, Instance, WeightVector};
use crate::pareto::{ParetoAccumulator, ParetoSet, SolutionKind};

/// An f-factor problem on an undirected base graph: find edge subsets in which
/// every vertex `v` has degree exactly `f[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFactorSpec {
    n: usize,
    k: usize,
    edges: Vec<(Edge, WeightVector)>,
    f: Vec<usize>,
}

impl FFactorSpec {
    pub fn new(n: usize, edges: Vec<(Edge, WeightVector)>, f: Vec<usize>) -> Result<Self> {
        if f.len() != n {
            return Err(Error::Parameter(format!("f has {} entries for {n} vertices", f.len())));
        }
        let k = edges.first().map(|(_, w)| w.len()).unwrap_or(1);
        let mut deg = vec![0usize; n];
        let mut canon = Vec::with_capacity(edges.len());
        for (e, w) in edges {
            if e.0 >= n || e.1 >= n || e.0 == e.1 {
                return Err(Error::MalformedInput(format!("invalid base edge {e}")));
            }
            if w.len() != k {
                return Err(Error::MalformedInput("base edges have mixed weight lengths".into()));
            }
            deg[e.0] += 1;
            deg[e.1] += 1;
            canon.push((Edge::undirected(e.0, e.1), w));
        }
        if let Some(v) = (0..n).find(|&v| f[v] > deg[v]) {
            return Err(Error::Parameter(format!(
                "infeasible f: f({v}) = {} exceeds degree {}",
                f[v], deg[v]
            )));
        }
        if f.iter().sum::<usize>() % 2 == 1 {
            return Err(Error::Parameter("infeasible f: degree sum is odd".into()));
        }
        Ok(FFactorSpec { n, k, edges: canon, f })
    }

    /// The two-factor (undirected cycle cover) problem on the complete graph.
    pub fn two_factor(inst: &Instance) -> Result<Self> {
        if inst.directed() {
            return Err(Error::UndirectedRequired("f-factors"));
        }
        let edges = inst
            .edges()
            .into_iter()
            .map(|e| {
                let w = inst.edge_weight(&e);
                (e, w)
            })
            .collect();
        FFactorSpec::new(inst.n(), edges, vec![2; inst.n()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Edge, WeightVector)] {
        &self.edges
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    /// Copy of the owner for its incidence with base edge `edge`.
    External { edge: usize },
    /// One of the `deg - f` fill vertices of the owner.
    Internal { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetVertex {
    pub owner: usize,
    pub role: VertexRole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetEdge {
    pub a: usize,
    pub b: usize,
    pub weight: WeightVector,
    /// Index of the base edge this gadget edge stands for; `None` for the
    /// zero-weight internal edges.
    pub origin: Option<usize>,
}

/// The graph produced by [`tutte_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub vertices: Vec<GadgetVertex>,
    pub edges: Vec<GadgetEdge>,
    k: usize,
}

/// Tutte's gadget: each vertex `v` with incident base edges `e_1..e_d` becomes
/// external vertices `v.e_1..v.e_d` plus `d - f(v)` internal vertices, with a
/// zero-weight edge between every internal and every external vertex of `v`.
/// Each base edge `{u, v}` becomes the edge `(u.e, v.e)` with its original
/// weight. Perfect matchings of the gadget project (via their external-external
/// edges) onto exactly the f-factors of the base graph, weight-preservingly.
pub fn tutte_reduce(spec: &FFactorSpec) -> Result<GadgetGraph> {
    let n = spec.n;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, (e, _)) in spec.edges.iter().enumerate() {
        incident[e.0].push(i);
        incident[e.1].push(i);
    }
    let mut vertices = Vec::new();
    // external[(v, edge index)] -> gadget vertex id
    let mut external = std::collections::HashMap::new();
    let mut edges = Vec::new();
    let zero = WeightVector::zero(spec.k);
    for v in 0..n {
        let first_ext = vertices.len();
        for &ei in &incident[v] {
            external.insert((v, ei), vertices.len());
            vertices.push(GadgetVertex {
                owner: v,
                role: VertexRole::External { edge: ei },
            });
        }
        let ext_ids: Vec<usize> = (first_ext..vertices.len()).collect();
        let fill = incident[v].len() - spec.f[v];
        for index in 0..fill {
            let id = vertices.len();
            vertices.push(GadgetVertex {
                owner: v,
                role: VertexRole::Internal { index },
            });
            for &x in &ext_ids {
                edges.push(GadgetEdge {
                    a: x,
                    b: id,
                    weight: zero.clone(),
                    origin: None,
                });
            }
        }
    }
    for (i, (e, w)) in spec.edges.iter().enumerate() {
        edges.push(GadgetEdge {
            a: external[&(e.0, i)],
            b: external[&(e.1, i)],
            weight: w.clone(),
            origin: Some(i),
        });
    }
    Ok(GadgetGraph {
        vertices,
        edges,
        k: spec.k,
    })
}

impl GadgetGraph {
    /// Calls `visit` with the gadget edge ids of every perfect matching.
    pub fn for_each_perfect_matching(&self, mut visit: impl FnMut(&[usize])) {
        let m = self.vertices.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, id));
            adj[e.b].push((e.a, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut matched = vec![false; m];
        let mut chosen = Vec::with_capacity(m / 2);
        fn rec(
            adj: &[Vec<(usize, usize)>],
            matched: &mut [bool],
            chosen: &mut Vec<usize>,
            visit: &mut impl FnMut(&[usize]),
        ) {
            let Some(v) = matched.iter().position(|x| !x) else {
                visit(chosen);
                return;
            };
            matched[v] = true;
            for &(w, id) in &adj[v] {
                if matched[w] {
                    continue;
                }
                matched[w] = true;
                chosen.push(id);
                rec(adj, matched, chosen, visit);
                chosen.pop();
                matched[w] = false;
            }
            matched[v] = false;
        }
        rec(&adj, &mut matched, &mut chosen, &mut visit);
    }

    /// Base edge indices of the matched external-external edges.
    pub fn project(&self, matching: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = matching.iter().filter_map(|&id| self.edges[id].origin).collect();
        out.sort_unstable();
        out
    }

    pub fn matching_weight(&self, matching: &[usize]) -> WeightVector {
        let mut w = WeightVector::zero(self.k);
        for &id in matching {
            w += &self.edges[id].weight;
        }
        w
    }

    /// Pareto front of the projections of all perfect matchings, as a set of
    /// `kind` solutions over base edges.
    pub fn projected_front(&self, spec: &FFactorSpec, kind: SolutionKind) -> ParetoSet {
        let mut front = ParetoAccumulator::new(kind);
        self.for_each_perfect_matching(|m| {
            let w = self.matching_weight(m);
            front.offer(&w, || self.project(m).into_iter().map(|i| spec.edges[i].0).collect());
        });
        front.finish()
    }
}
