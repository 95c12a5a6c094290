use super::{check_cap, lower_bound, OracleCaps};
use crate::error::{Error, Result};
use crate::graph::{Edge, Instance};
use crate::pareto::{ParetoAccumulator, ParetoSet, SolutionKind};

/// Exact Pareto front over perfect matchings of the complete graph induced by
/// `subset`. The lowest unmatched vertex is paired with each remaining vertex
/// in turn.
pub fn oracle_matchings(inst: &Instance, subset: &[usize], caps: &OracleCaps) -> Result<ParetoSet> {
    if inst.directed() {
        return Err(Error::UndirectedRequired("perfect matchings"));
    }
    let mut verts = subset.to_vec();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() != subset.len() {
        return Err(Error::Structural("matching subset repeats a vertex".into()));
    }
    if let Some(v) = verts.iter().find(|&&v| v >= inst.n()) {
        return Err(Error::MalformedInput(format!("subset vertex {v} out of range")));
    }
    if verts.len() % 2 == 1 {
        return Err(Error::Structural(format!(
            "perfect matching needs an even vertex set, got {} vertices",
            verts.len()
        )));
    }
    check_cap("matching", verts.len(), caps.matchings)?;

    let k = inst.k();
    let mut min_w = vec![u64::MAX; k];
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            for (c, m) in min_w.iter_mut().enumerate() {
                *m = (*m).min(inst.w(c, a, b));
            }
        }
    }
    let mut s = MatchSearch {
        inst,
        verts: &verts,
        matched: vec![false; verts.len()],
        chosen: Vec::with_capacity(verts.len() / 2),
        partial: vec![0; k],
        min_w,
        front: ParetoAccumulator::new(SolutionKind::Matching),
    };
    s.recurse();
    Ok(s.front.finish())
}

struct MatchSearch<'a> {
    inst: &'a Instance,
    verts: &'a [usize],
    matched: Vec<bool>,
    chosen: Vec<Edge>,
    partial: Vec<u64>,
    min_w: Vec<u64>,
    front: ParetoAccumulator,
}

impl MatchSearch<'_> {
    fn recurse(&mut self) {
        let Some(i) = self.matched.iter().position(|m| !m) else {
            let chosen = &self.chosen;
            let w = self.partial.clone().into();
            self.front.offer(&w, || chosen.clone());
            return;
        };
        let left = (self.verts.len() / 2 - self.chosen.len()) as u64;
        if self.front.strictly_dominated(&lower_bound(&self.partial, left, &self.min_w)) {
            return;
        }
        self.matched[i] = true;
        for j in i + 1..self.verts.len() {
            if self.matched[j] {
                continue;
            }
            let (a, b) = (self.verts[i], self.verts[j]);
            self.matched[j] = true;
            self.chosen.push(Edge::undirected(a, b));
            for c in 0..self.inst.k() {
                self.partial[c] += self.inst.w(c, a, b);
            }
            self.recurse();
            for c in 0..self.inst.k() {
                self.partial[c] -= self.inst.w(c, a, b);
            }
            self.chosen.pop();
            self.matched[j] = false;
        }
        self.matched[i] = false;
    }
}
