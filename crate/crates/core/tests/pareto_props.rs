//! Algebraic laws of the Pareto machinery.

use mctsp::pareto::{
    amplify, coverage_beta, dominates, filter_dominated, grid_select, CoverageFactor, ParetoAccumulator,
};
use mctsp::rational::{int, ratio};
use mctsp::{Edge, ParetoItem, ParetoSet, SolutionKind, WeightVector};
use proptest::prelude::*;

fn weights(k: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(1u64..500, k), 1..25)
}

fn set_strategy() -> impl Strategy<Value = ParetoSet> {
    (1usize..4).prop_flat_map(weights).prop_map(|ws| {
        let items = ws
            .into_iter()
            .enumerate()
            .map(|(i, w)| ParetoItem::new(WeightVector::from(w), vec![Edge(0, i + 1)]))
            .collect();
        ParetoSet::new(SolutionKind::Tour, items)
    })
}

proptest! {
    #[test]
    fn dominance_is_a_strict_partial_order(ws in (1usize..4).prop_flat_map(weights)) {
        let ws: Vec<WeightVector> = ws.into_iter().map(WeightVector::from).collect();
        for a in &ws {
            prop_assert!(!dominates(a, a).unwrap());
            for b in &ws {
                let ab = dominates(a, b).unwrap();
                prop_assert!(!(ab && dominates(b, a).unwrap()));
                for c in &ws {
                    if ab && dominates(b, c).unwrap() {
                        prop_assert!(dominates(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn filter_is_idempotent_and_exact(s in set_strategy()) {
        let f = filter_dominated(&s);
        prop_assert_eq!(&filter_dominated(&f), &f);
        prop_assert_eq!(coverage_beta(&f, &s).unwrap(), CoverageFactor::Finite(int(1)));
        for x in f.items() {
            prop_assert!(s.items().contains(x));
            prop_assert!(!s.items().iter().any(|y| dominates(&y.weight, &x.weight).unwrap()));
        }
        let mut ws = f.weights();
        ws.dedup();
        prop_assert_eq!(ws.len(), f.len());
    }

    #[test]
    fn accumulator_ignores_offer_order(s in set_strategy(), rot in 0usize..25) {
        let mut items = s.items().to_vec();
        let r = rot % items.len();
        items.rotate_left(r);
        let mut fwd = ParetoAccumulator::new(SolutionKind::Tour);
        let mut rev = ParetoAccumulator::new(SolutionKind::Tour);
        for it in &items {
            fwd.offer_item(it.clone());
        }
        for it in items.iter().rev() {
            rev.offer_item(it.clone());
        }
        let (a, b) = (fwd.finish(), rev.finish());
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, filter_dominated(&s));
    }

    #[test]
    fn split_merge_equals_whole(s in set_strategy(), cut in 0usize..25) {
        let items = s.items();
        let cut = cut % (items.len() + 1);
        let mut left = ParetoAccumulator::new(SolutionKind::Tour);
        let mut right = ParetoAccumulator::new(SolutionKind::Tour);
        for it in &items[..cut] {
            left.offer_item(it.clone());
        }
        for it in &items[cut..] {
            right.offer_item(it.clone());
        }
        prop_assert_eq!(left.merge(right).finish(), filter_dominated(&s));
    }

    #[test]
    fn grid_selection_covers_within_one_plus_eps(s in set_strategy(), p in 1i128..20, q in 1i128..20) {
        let eps = ratio(p, q);
        let f = filter_dominated(&s);
        let g = grid_select(&f, &eps).unwrap();
        prop_assert!(g.len() <= f.len());
        prop_assert!(coverage_beta(&g, &f).unwrap().at_most(&(int(1) + eps)));
    }

    #[test]
    fn coverage_is_at_least_one(a in set_strategy(), b in set_strategy()) {
        if a.items()[0].weight.len() == b.items()[0].weight.len() {
            let beta = coverage_beta(&a, &b).unwrap();
            prop_assert!(beta >= CoverageFactor::Finite(int(1)));
        }
    }

    #[test]
    fn amplification_never_hurts(s in set_strategy(), mask in any::<u64>()) {
        let o = filter_dominated(&s);
        let pick = |bit: u64| {
            let items: Vec<ParetoItem> = s
                .items()
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> ((*i as u64 * 2 + bit) % 64)) & 1 == 1)
                .map(|(_, it)| it.clone())
                .collect();
            ParetoSet::new(SolutionKind::Tour, items)
        };
        let (a, b) = (pick(0), pick(1));
        let u = amplify(&[a.clone(), b.clone()]).unwrap();
        let cu = coverage_beta(&u, &o).unwrap();
        prop_assert!(cu <= coverage_beta(&a, &o).unwrap());
        prop_assert!(cu <= coverage_beta(&b, &o).unwrap());
    }
}
