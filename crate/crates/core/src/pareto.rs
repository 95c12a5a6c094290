//! Pareto-set algebra: dominance, filtering, coverage factors, grid selection
//! and amplification of independent runs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, WeightVector};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionKind {
    Tour,
    Tree,
    Matching,
    CycleCover,
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolutionKind::Tour => "tour",
            SolutionKind::Tree => "tree",
            SolutionKind::Matching => "matching",
            SolutionKind::CycleCover => "cycle_cover",
        };
        f.write_str(s)
    }
}

/// One solution: its weight, its canonical (sorted) edge list and an optional
/// id of the structure it was derived from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParetoItem {
    pub weight: WeightVector,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<usize>,
}

impl ParetoItem {
    pub fn new(weight: WeightVector, mut edges: Vec<Edge>) -> Self {
        edges.sort();
        ParetoItem {
            weight,
            edges,
            source: None,
        }
    }

    pub fn with_source(mut self, source: usize) -> Self {
        self.source = Some(source);
        self
    }
}

/// A set of solutions of one kind, kept in canonical order (by weight, then
/// edge list, then source).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParetoSet {
    kind: SolutionKind,
    items: Vec<ParetoItem>,
}

impl ParetoSet {
    pub fn new(kind: SolutionKind, mut items: Vec<ParetoItem>) -> Self {
        items.sort();
        ParetoSet { kind, items }
    }

    pub fn empty(kind: SolutionKind) -> Self {
        ParetoSet {
            kind,
            items: Vec::new(),
        }
    }

    pub fn kind(&self) -> SolutionKind {
        self.kind
    }

    pub fn items(&self) -> &[ParetoItem] {
        &self.items
    }

    pub fn into_items(self) -> Vec<ParetoItem> {
        self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn weights(&self) -> Vec<WeightVector> {
        self.items.iter().map(|i| i.weight.clone()).collect()
    }

    /// Restores canonical order after deserialization.
    pub fn canonicalize(&mut self) {
        for it in &mut self.items {
            it.edges.sort();
        }
        self.items.sort();
    }
}

/// `a` is at most `b` everywhere and strictly smaller somewhere.
pub fn dominates(a: &WeightVector, b: &WeightVector) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Parameter(format!(
            "weight vectors of different lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(dominates_unchecked(a, b))
}

#[inline]
pub(crate) fn dominates_unchecked(a: &WeightVector, b: &WeightVector) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b.iter()) {
        if x > y {
            return false;
        }
        strict |= x < y;
    }
    strict
}

/// Maximal antichain under dominance; among items with equal weight the one
/// with the lexicographically smallest edge list survives.
pub fn filter_dominated(s: &ParetoSet) -> ParetoSet {
    let mut items = s.items.clone();
    items.sort();
    ParetoSet {
        kind: s.kind,
        items: sweep(items),
    }
}

// Input sorted canonically. Any dominator (or equal-weight twin) of an item
// sorts before it, so one forward pass suffices.
fn sweep(sorted: Vec<ParetoItem>) -> Vec<ParetoItem> {
    let mut kept: Vec<ParetoItem> = Vec::new();
    for it in sorted {
        if !kept.iter().any(|k| k.weight.le_all(&it.weight)) {
            kept.push(it);
        }
    }
    kept
}

/// Incremental Pareto front. The final set depends only on the offered items,
/// never on the order in which they arrive.
#[derive(Debug, Clone)]
pub struct ParetoAccumulator {
    kind: SolutionKind,
    items: Vec<ParetoItem>,
}

impl ParetoAccumulator {
    pub fn new(kind: SolutionKind) -> Self {
        ParetoAccumulator {
            kind,
            items: Vec::new(),
        }
    }

    /// Some current member dominates `w` strictly. Anything whose weight is
    /// componentwise at least `w` can then be skipped without changing the
    /// final set.
    pub fn strictly_dominated(&self, w: &WeightVector) -> bool {
        self.items.iter().any(|it| dominates_unchecked(&it.weight, w))
    }

    /// Offers a candidate; `edges` is only evaluated if the weight could enter
    /// the front. Returns whether the candidate was kept.
    pub fn offer(&mut self, weight: &WeightVector, edges: impl FnOnce() -> Vec<Edge>) -> bool {
        self.offer_item_with(weight, || {
            let mut e = edges();
            e.sort();
            ParetoItem {
                weight: weight.clone(),
                edges: e,
                source: None,
            }
        })
    }

    pub fn offer_item(&mut self, item: ParetoItem) -> bool {
        let w = item.weight.clone();
        self.offer_item_with(&w, move || item)
    }

    fn offer_item_with(&mut self, weight: &WeightVector, make: impl FnOnce() -> ParetoItem) -> bool {
        let mut equal_at = None;
        for (i, it) in self.items.iter().enumerate() {
            if it.weight == *weight {
                equal_at = Some(i);
                break;
            }
            if it.weight.le_all(weight) {
                return false;
            }
        }
        let item = make();
        if let Some(i) = equal_at {
            if item < self.items[i] {
                self.items[i] = item;
                return true;
            }
            return false;
        }
        self.items.retain(|it| !weight.le_all(&it.weight));
        self.items.push(item);
        true
    }

    pub fn merge(mut self, other: ParetoAccumulator) -> ParetoAccumulator {
        for it in other.items {
            self.offer_item(it);
        }
        self
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn finish(self) -> ParetoSet {
        ParetoSet::new(self.kind, self.items)
    }
}

/// Coverage factor of an approximate set against an oracle set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageFactor {
    Finite(Rational),
    /// Some oracle point has no covering item (empty approximate set).
    Infinite,
}

impl CoverageFactor {
    pub fn value(&self) -> Option<Rational> {
        match self {
            CoverageFactor::Finite(r) => Some(*r),
            CoverageFactor::Infinite => None,
        }
    }

    pub fn at_most(&self, bound: &Rational) -> bool {
        matches!(self, CoverageFactor::Finite(r) if r <= bound)
    }

    pub fn to_wire(&self) -> String {
        match self {
            CoverageFactor::Finite(r) => rational::to_string(r),
            CoverageFactor::Infinite => "inf".into(),
        }
    }
}

impl PartialOrd for CoverageFactor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CoverageFactor {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (CoverageFactor::Finite(a), CoverageFactor::Finite(b)) => a.cmp(b),
            (CoverageFactor::Finite(_), CoverageFactor::Infinite) => Less,
            (CoverageFactor::Infinite, CoverageFactor::Finite(_)) => Greater,
            (CoverageFactor::Infinite, CoverageFactor::Infinite) => Equal,
        }
    }
}

impl fmt::Display for CoverageFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

impl Serialize for CoverageFactor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_wire())
    }
}

impl<'de> Deserialize<'de> for CoverageFactor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            return Ok(CoverageFactor::Infinite);
        }
        rational::parse(&s)
            .map(CoverageFactor::Finite)
            .map_err(serde::de::Error::custom)
    }
}

/// `max_{z in oracle} min_{y in approx} max_i y_i / z_i`, clamped below at 1.
pub fn coverage_beta(approx: &ParetoSet, oracle: &ParetoSet) -> Result<CoverageFactor> {
    if approx.kind != oracle.kind {
        return Err(Error::KindMismatch {
            expected: oracle.kind.to_string(),
            found: approx.kind.to_string(),
        });
    }
    let one = rational::int(1);
    if oracle.is_empty() {
        return Ok(CoverageFactor::Finite(one));
    }
    if approx.is_empty() {
        return Ok(CoverageFactor::Infinite);
    }
    let mut worst = one;
    for z in &oracle.items {
        if z.weight.iter().any(|&x| x == 0) {
            return Err(Error::Parameter(format!(
                "oracle weight {} has a zero component",
                z.weight
            )));
        }
        let mut best: Option<Rational> = None;
        for y in &approx.items {
            if y.weight.len() != z.weight.len() {
                return Err(Error::Parameter("weight vectors of different lengths".into()));
            }
            let r = y
                .weight
                .iter()
                .zip(z.weight.iter())
                .map(|(&a, &b)| Rational::new(a as i128, b as i128))
                .max()
                .unwrap_or(one);
            if best.is_none_or(|b| r < b) {
                best = Some(r);
            }
        }
        let best = best.unwrap();
        if best > worst {
            worst = best;
        }
    }
    Ok(CoverageFactor::Finite(worst))
}

/// Geometric grid with ratio `1 + eps`: the cell of a positive integer `w`
/// is the largest `j` with `(1 + eps)^j <= w`.
pub struct Grid {
    // (p + q)^j and q^j for eps = p / q, up to the first power above max_w.
    numer: Vec<BigUint>,
    denom: Vec<BigUint>,
}

impl Grid {
    pub fn new(eps: &Rational, max_w: u64) -> Result<Self> {
        if *eps <= rational::zero() {
            return Err(Error::Parameter(format!(
                "grid epsilon must be positive, got {}",
                rational::to_string(eps)
            )));
        }
        let p = BigUint::from(*eps.numer() as u128);
        let q = BigUint::from(*eps.denom() as u128);
        let base = &p + &q;
        let w = BigUint::from(max_w.max(1));
        let mut numer = vec![BigUint::one()];
        let mut denom = vec![BigUint::one()];
        loop {
            let n = numer.last().unwrap() * &base;
            let d = denom.last().unwrap() * &q;
            let above = n > &w * &d;
            numer.push(n);
            denom.push(d);
            if above {
                break;
            }
        }
        Ok(Grid { numer, denom })
    }

    pub fn cell(&self, w: u64) -> u32 {
        if w == 0 {
            return 0;
        }
        let w = BigUint::from(w);
        let pp = self
            .numer
            .iter()
            .zip(self.denom.iter())
            .position(|(n, d)| *n > &w * d)
            .unwrap_or(self.numer.len());
        debug_assert!(pp >= 1);
        (pp - 1) as u32
    }

    /// Number of cells per coordinate up to `max_w` (`1 + floor(log_{1+eps} max_w)`).
    pub fn cells_up_to(&self, max_w: u64) -> u64 {
        self.cell(max_w) as u64 + 1
    }
}

/// Keeps one representative per grid cell (smallest canonical edge list),
/// then filters dominated items. The result covers the input within factor
/// `1 + eps`.
pub fn grid_select(s: &ParetoSet, eps: &Rational) -> Result<ParetoSet> {
    let max_w = s
        .items
        .iter()
        .map(|it| it.weight.max_component())
        .max()
        .unwrap_or(1);
    let grid = Grid::new(eps, max_w)?;
    let mut cells: BTreeMap<Vec<u32>, ParetoItem> = BTreeMap::new();
    for it in &s.items {
        if it.weight.iter().any(|&x| x == 0) {
            return Err(Error::Parameter(format!(
                "grid selection needs positive weights, found {}",
                it.weight
            )));
        }
        let key: Vec<u32> = it.weight.iter().map(|&x| grid.cell(x)).collect();
        match cells.get_mut(&key) {
            Some(rep) => {
                if (&it.edges, &it.weight, it.source) < (&rep.edges, &rep.weight, rep.source) {
                    *rep = it.clone();
                }
            }
            None => {
                cells.insert(key, it.clone());
            }
        }
    }
    let reps = ParetoSet::new(s.kind, cells.into_values().collect());
    Ok(filter_dominated(&reps))
}

/// Union of independent runs followed by dominance filtering.
pub fn amplify(runs: &[ParetoSet]) -> Result<ParetoSet> {
    let Some(first) = runs.first() else {
        return Err(Error::Parameter("amplify needs at least one run".into()));
    };
    let kind = first.kind;
    let mut all = Vec::new();
    for r in runs {
        if r.kind != kind {
            return Err(Error::KindMismatch {
                expected: kind.to_string(),
                found: r.kind.to_string(),
            });
        }
        all.extend(r.items.iter().cloned());
    }
    Ok(filter_dominated(&ParetoSet::new(kind, all)))
}

/// Convenience for tests and reports: a set holding bare weight vectors.
pub fn from_weights(kind: SolutionKind, weights: &[&[u64]]) -> ParetoSet {
    ParetoSet::new(
        kind,
        weights
            .iter()
            .map(|w| ParetoItem::new(WeightVector::from_slice(w), Vec::new()))
            .collect(),
    )
}
