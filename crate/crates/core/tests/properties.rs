use proptest::prelude::*;

use intgraph::gadgets::{random_interval_graph, true_stages};
use intgraph::json::{BuriedJson, ObstructionJson, RepresentationJson, VerdictJson};
use intgraph::{decide_unique, recognize, ClosedRepresentation, Graph, Recognition, StrictPartialOrder};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn order_strategy(max_n: usize) -> impl Strategy<Value = StrictPartialOrder> {
    (1..=max_n).prop_flat_map(|n| {
        (Just(n), proptest::collection::vec((0..n, 0..n), 0..2 * n)).prop_map(|(n, pairs)| {
            // every pair runs low to high
            let pairs: Vec<_> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            StrictPartialOrder::closure_of(n, &pairs).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(9)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        for (u, v) in g.edges() {
            prop_assert!(!g.complement().has_edge(u, v));
        }
    }

    #[test]
    fn components_partition_vertices(g in graph_strategy(9)) {
        let mut seen: Vec<usize> = g.components().concat();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn order_and_dual_share_a_graph(o in order_strategy(8)) {
        prop_assert_eq!(o.incomparability_graph(), o.dual().incomparability_graph());
        prop_assert!(o.incomparability_graph().is_associated(&o).unwrap());
        prop_assert_eq!(o.dual().dual(), o.clone());
    }

    #[test]
    fn stages_shrink_monotonically(f in proptest::collection::btree_set(0u64..50, 1..12)) {
        // distinct values, not sorted
        let mut f: Vec<u64> = f.into_iter().collect();
        let mid = f.len() / 2;
        f[..mid].reverse();
        for s in 1..=f.len() {
            let now = true_stages(&f, s).unwrap();
            prop_assert!(now.contains(&(s - 1)));
            let next = if s < f.len() { true_stages(&f, s + 1).unwrap() } else { continue };
            // an index false at stage s stays false later
            for i in 0..s {
                if !now.contains(&i) {
                    prop_assert!(!next.contains(&i));
                }
            }
        }
    }

    #[test]
    fn recognition_certificates_survive_json(g in graph_strategy(8)) {
        match recognize(&g).unwrap() {
            Recognition::Interval(r) => {
                let text = serde_json::to_string(&RepresentationJson::from_representation(&r)).unwrap();
                let back: RepresentationJson = serde_json::from_str(&text).unwrap();
                let r2: ClosedRepresentation = back.to_representation().unwrap();
                prop_assert!(r2.verify(&g).unwrap());
            }
            Recognition::NotInterval(o) => {
                let text = serde_json::to_string(&ObstructionJson::from_obstruction(&g, &o)).unwrap();
                let back: ObstructionJson = serde_json::from_str(&text).unwrap();
                prop_assert!(back.to_obstruction(&g).unwrap().validate(&g));
            }
        }
    }

    #[test]
    fn verdicts_survive_json(n in 1usize..=9, seed in any::<u64>()) {
        let (g, _) = random_interval_graph(n, seed).unwrap();
        let v = decide_unique(&g).unwrap();
        let text = serde_json::to_string(&VerdictJson::from_verdict(&g, &v)).unwrap();
        let back: VerdictJson = serde_json::from_str(&text).unwrap();
        let v2 = back.to_verdict(&g).unwrap();
        prop_assert!(v2.validate(&g));
        prop_assert_eq!(v2.unique, v.unique);
        if let Some(c) = &v.buried {
            let bj = BuriedJson::from_certificate(&g, c);
            prop_assert_eq!(bj.to_certificate(&g).unwrap().b, c.b.clone());
        }
    }

    #[test]
    fn normalization_keeps_the_graph(n in 1usize..=10, seed in any::<u64>()) {
        let (g, r) = random_interval_graph(n, seed).unwrap();
        prop_assert!(r.is_distinguishing());
        prop_assert_eq!(r.normalize_distinguishing(), r.clone());
        prop_assert!(r.verify(&g).unwrap());
    }
}

#[test]
fn seeded_generator_is_pinned() {
    let (g, r) = random_interval_graph(5, 42).unwrap();
    assert_eq!(
        g.edges(),
        vec![(0, 1), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4), (3, 4)]
    );
    let expected = [(5, 9), (4, 6), (0, 2), (3, 8), (1, 7)];
    assert_eq!(r, ClosedRepresentation::from_ints(&expected).unwrap());
}
