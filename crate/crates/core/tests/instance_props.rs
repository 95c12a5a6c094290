//! Generator, gamma checks, instance file format and walk primitives.

use mctsp::graph::{euler_circuit, shortcut_walk, SpanningTree};
use mctsp::instances::{
    check_weight_spread, from_json_str, generate, infer_gamma, read_instance, to_json_string, validate_gamma,
    write_instance, GenSpec, Variant,
};
use mctsp::rational::{self, ratio};
use mctsp::Edge;
use proptest::prelude::*;

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![
        Just(Variant::GammaMetricUndirected),
        Just(Variant::GammaMetricDirected),
        Just(Variant::OneTwoUndirected),
        Just(Variant::OneTwoDirected),
        Just(Variant::MetricClosure),
    ]
}

fn spec() -> impl Strategy<Value = GenSpec> {
    (variant(), 3usize..=9, 1usize..=4, 50i128..=100, 2u64..300, any::<u64>()).prop_map(|(v, n, k, g, scale, seed)| {
        GenSpec::new(v, n, k, seed).with_gamma(ratio(g, 100)).with_scale(scale)
    })
}

proptest! {
    #[test]
    fn generated_instances_honour_their_gamma(s in spec()) {
        let inst = generate(&s).unwrap();
        let gamma = inst.gamma().unwrap();
        prop_assert!(validate_gamma(&inst, &gamma).unwrap());
        prop_assert!(infer_gamma(&inst).unwrap() <= gamma);
        if gamma < rational::int(1) && (!inst.directed() || rational::below_inv_sqrt3(&gamma)) {
            prop_assert!(check_weight_spread(&inst, &gamma).unwrap().passes());
        }
    }

    #[test]
    fn generation_is_a_function_of_the_spec(s in spec()) {
        prop_assert_eq!(generate(&s).unwrap(), generate(&s).unwrap());
    }

    #[test]
    fn json_round_trips(s in spec()) {
        let inst = generate(&s).unwrap();
        let text = to_json_string(&inst);
        prop_assert_eq!(&from_json_str(&text).unwrap(), &inst);
        prop_assert_eq!(to_json_string(&from_json_str(&text).unwrap()), text);
    }

    #[test]
    fn doubled_tree_walks_shortcut_to_tours(n in 3usize..12, parents in prop::collection::vec(any::<prop::sample::Index>(), 11)) {
        // Random tree: vertex v attaches to some earlier vertex.
        let edges: Vec<Edge> = (1..n).map(|v| Edge::undirected(parents[v - 1].index(v), v)).collect();
        let tree = SpanningTree::new(n, edges).unwrap();
        let walk = euler_circuit(&tree.doubled(), 0).unwrap();
        prop_assert_eq!(walk.len(), 2 * (n - 1) + 1);
        let inst = mctsp::Instance::from_fn(n, 1, false, None, |_, u, v| (u + v + 1) as u64).unwrap();
        let tour = shortcut_walk(&inst, &walk).unwrap();
        tour.validate().unwrap();
    }
}

#[test]
fn files_round_trip_through_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inst.json");
    let inst = generate(&GenSpec::new(Variant::GammaMetricDirected, 6, 2, 4).with_gamma(ratio(11, 20))).unwrap();
    write_instance(&inst, &path).unwrap();
    assert_eq!(read_instance(&path).unwrap(), inst);
}
