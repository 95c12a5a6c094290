#![allow(dead_code)]

use std::collections::BTreeSet;

use mctsp::instances::{generate, GenSpec, Variant};
use mctsp::{Instance, ParetoSet};

/// Weight vectors not dominated by any other, by pairwise comparison.
pub fn naive_front(weights: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
    let all: BTreeSet<Vec<u64>> = weights.iter().cloned().collect();
    all.iter()
        .filter(|w| {
            !all.iter()
                .any(|v| v != *w && v.iter().zip(w.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect()
}

pub fn front_weights(s: &ParetoSet) -> BTreeSet<Vec<u64>> {
    s.items().iter().map(|it| it.weight.values().to_vec()).collect()
}

/// Heap's algorithm over all permutations of `items`.
pub fn heap_permutations(items: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    fn go(k: usize, a: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            visit(a);
            return;
        }
        go(k - 1, a, visit);
        for i in 0..k - 1 {
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            go(k - 1, a, visit);
        }
    }
    let k = items.len();
    go(k, items, visit);
}

pub fn cycle_weight(inst: &Instance, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    (0..inst.k())
        .map(|c| (0..n).map(|i| inst.w(c, order[i], order[(i + 1) % n])).sum())
        .collect()
}

pub fn seeded(variant: Variant, n: usize, k: usize, seed: u64) -> Instance {
    generate(&GenSpec::new(variant, n, k, seed).with_gamma(mctsp::rational::ratio(3, 4))).unwrap()
}
