use super::Multigraph;
use crate::error::{Error, Result};

pub(super) fn check_eulerian(m: &Multigraph) -> Result<()> {
    let n = m.n();
    if m.directed() {
        let mut balance = vec![0i64; n];
        for e in m.edges() {
            balance[e.0] += 1;
            balance[e.1] -= 1;
        }
        if let Some(v) = balance.iter().position(|b| *b != 0) {
            return Err(Error::Structural(format!(
                "vertex {v} has unequal in- and out-degree"
            )));
        }
    } else if let Some(v) = m.degrees().iter().position(|d| d % 2 == 1) {
        return Err(Error::Structural(format!("vertex {v} has odd degree")));
    }
    let degrees = m.degrees();
    let Some(root) = degrees.iter().position(|d| *d > 0) else {
        return Ok(());
    };
    let reached = reachable(m, root);
    if let Some(v) = (0..n).find(|&v| degrees[v] > 0 && !reached[v]) {
        return Err(Error::Structural(format!(
            "multigraph is disconnected: vertex {v} is not reachable from vertex {root}"
        )));
    }
    Ok(())
}

fn reachable(m: &Multigraph, root: usize) -> Vec<bool> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m.n()];
    for e in m.edges() {
        adj[e.0].push(e.1);
        adj[e.1].push(e.0);
    }
    let mut seen = vec![false; m.n()];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Closed walk using every edge of `m` exactly once, starting and ending at
/// `start` (Hierholzer). Neighbours are tried in ascending id order, so the
/// walk is fully determined by the multigraph.
pub fn euler_circuit(m: &Multigraph, start: usize) -> Result<Vec<usize>> {
    let n = m.n();
    if start >= n {
        return Err(Error::MalformedInput(format!("start vertex {start} out of range")));
    }
    check_eulerian(m)?;
    if m.edges().is_empty() {
        return Ok(vec![start]);
    }
    if m.degrees()[start] == 0 {
        return Err(Error::Structural(format!(
            "start vertex {start} has no incident edges"
        )));
    }

    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, e) in m.edges().iter().enumerate() {
        if e.0 >= n || e.1 >= n {
            return Err(Error::MalformedInput(format!("edge {e} out of range")));
        }
        adj[e.0].push((e.1, id));
        if !m.directed() {
            adj[e.1].push((e.0, id));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let mut used = vec![false; m.edges().len()];
    let mut next = vec![0usize; n];
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(m.edges().len() + 1);
    while let Some(&v) = stack.last() {
        let list = &adj[v];
        while next[v] < list.len() && used[list[next[v]].1] {
            next[v] += 1;
        }
        if next[v] < list.len() {
            let (w, id) = list[next[v]];
            used[id] = true;
            stack.push(w);
        } else {
            circuit.push(v);
            stack.pop();
        }
    }
    circuit.reverse();
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn walk_edges(walk: &[usize], directed: bool) -> Vec<Edge> {
        let mut e: Vec<Edge> = walk
            .windows(2)
            .map(|w| Edge::new(w[0], w[1], directed))
            .collect();
        e.sort();
        e
    }

    #[test]
    fn doubled_path() {
        let m = Multigraph::new(3, false, vec![Edge(0, 1), Edge(1, 2), Edge(0, 1), Edge(1, 2)]);
        assert_eq!(euler_circuit(&m, 0).unwrap(), vec![0, 1, 2, 1, 0]);
    }

    #[test]
    fn doubled_star() {
        let star = [Edge(0, 1), Edge(0, 2), Edge(0, 3)];
        let mut edges = star.to_vec();
        edges.extend_from_slice(&star);
        let m = Multigraph::new(4, false, edges);
        let walk = euler_circuit(&m, 0).unwrap();
        assert_eq!(walk.len(), 7);
        assert_eq!(walk, vec![0, 1, 0, 2, 0, 3, 0]);
        for pair in walk.chunks(2).skip(0) {
            if pair.len() == 2 && pair[0] != 0 {
                assert_eq!(pair[1], 0);
            }
        }
    }

    #[test]
    fn four_cycle_is_unique_circuit() {
        // Tree 0-1, 1-2, 2-3 plus matching {0,3}: all degrees 2.
        let m = Multigraph::new(4, false, vec![Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)]);
        let walk = euler_circuit(&m, 0).unwrap();
        // The two circuits from 0 are 0,1,2,3,0 and its reverse; ascending
        // neighbour order picks the first.
        assert_eq!(walk, vec![0, 1, 2, 3, 0]);
    }

    #[test]
    fn preserves_edge_multiset() {
        let edges = vec![
            Edge(0, 1),
            Edge(0, 1),
            Edge(0, 2),
            Edge(0, 2),
            Edge(2, 3),
            Edge(3, 4),
            Edge(2, 4),
        ];
        let m = Multigraph::new(5, false, edges.clone());
        let walk = euler_circuit(&m, 3).unwrap();
        assert_eq!(walk.first(), walk.last());
        let mut want = edges;
        want.sort();
        assert_eq!(walk_edges(&walk, false), want);
    }

    #[test]
    fn directed_circuit() {
        let arcs = vec![Edge(0, 1), Edge(1, 0), Edge(1, 2), Edge(2, 1)];
        let m = Multigraph::new(3, true, arcs.clone());
        let walk = euler_circuit(&m, 0).unwrap();
        let mut want = arcs;
        want.sort();
        assert_eq!(walk_edges(&walk, true), want);
    }

    #[test]
    fn structural_errors_name_the_vertex() {
        let odd = Multigraph::new(3, false, vec![Edge(0, 1), Edge(1, 2)]);
        let msg = euler_circuit(&odd, 0).unwrap_err().to_string();
        assert!(msg.contains("vertex 0"), "{msg}");
        let split = Multigraph::new(6, false, vec![
            Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5),
        ]);
        let msg = euler_circuit(&split, 0).unwrap_err().to_string();
        assert!(msg.contains("disconnected") && msg.contains("vertex 3"), "{msg}");
    }
}
