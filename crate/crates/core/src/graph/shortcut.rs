use super::{Instance, Tour};
use crate::error::{Error, Result};

/// Turns a closed walk into a tour by keeping the first occurrence of every
/// vertex in walk order. Arc direction is preserved for directed instances.
pub fn shortcut_walk(inst: &Instance, walk: &[usize]) -> Result<Tour> {
    let n = inst.n();
    if walk.len() < 2 || walk.first() != walk.last() {
        return Err(Error::Structural("walk is not closed".into()));
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &v in walk {
        if v >= n {
            return Err(Error::MalformedInput(format!("walk vertex {v} out of range")));
        }
        if !seen[v] {
            seen[v] = true;
            order.push(v);
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::Structural(format!("walk misses vertex {v}")));
    }
    Tour::from_order(order, inst.directed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::rational::ratio;

    #[test]
    fn only_shortcut_closes_triangle() {
        let inst = Instance::from_fn(3, 1, false, None, |_, u, v| (u + v) as u64).unwrap();
        let t = shortcut_walk(&inst, &[0, 1, 2, 1, 0]).unwrap();
        assert_eq!(t.order(), &[0, 1, 2]);
    }

    #[test]
    fn identity_when_no_repeats() {
        let inst = Instance::from_fn(5, 1, false, None, |_, _, _| 3).unwrap();
        let walk = [0, 2, 4, 1, 3, 0];
        let t = shortcut_walk(&inst, &walk).unwrap();
        let mut want: Vec<Edge> = walk.windows(2).map(|w| Edge::undirected(w[0], w[1])).collect();
        want.sort();
        assert_eq!(t.canonical_edges(), want);
    }

    #[test]
    fn uniform_gamma_half_gives_n_w() {
        let inst = Instance::from_fn(4, 2, false, Some(ratio(1, 2)), |_, _, _| 7).unwrap();
        let t = shortcut_walk(&inst, &[0, 1, 0, 2, 0, 3, 0]).unwrap();
        let w = inst.total_weight(&t.edges()).unwrap();
        assert_eq!(w.values(), &[28, 28]);
    }

    #[test]
    fn rejects_open_or_partial_walks() {
        let inst = Instance::from_fn(4, 1, false, None, |_, _, _| 1).unwrap();
        assert!(shortcut_walk(&inst, &[0, 1, 2, 3]).is_err());
        assert!(shortcut_walk(&inst, &[0, 1, 2, 0]).is_err());
    }

    #[test]
    fn directed_keeps_orientation() {
        let inst = Instance::from_fn(3, 1, true, None, |_, u, v| (1 + u + 2 * v) as u64).unwrap();
        let t = shortcut_walk(&inst, &[0, 2, 0, 1, 0]).unwrap();
        assert_eq!(t.edges(), vec![Edge(0, 2), Edge(2, 1), Edge(1, 0)]);
    }
}
