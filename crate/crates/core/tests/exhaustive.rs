//! Exhaustive checks over every labelled graph on at most six vertices.

use intgraph::gadgets::{aca_gadget, GadgetSpec};
use intgraph::oracle::enumerate_associated_orders;
use intgraph::representation::is_interval_order;
use intgraph::selftest::all_graphs;
use intgraph::{construct_b, decide_unique, is_buried, recognize, Graph, Recognition};

fn subsets(of: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..1u32 << of.len()).map(move |m| {
        of.iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

/// A graph is an interval graph iff some associated order is an interval order.
fn interval_by_orders(g: &Graph) -> bool {
    let set = enumerate_associated_orders(g, 6).unwrap();
    set.orders.iter().any(is_interval_order)
}

#[test]
fn recognition_matches_order_oracle() {
    let mut interval = 0;
    let mut total = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            total += 1;
            let expected = interval_by_orders(&g);
            match recognize(&g).unwrap() {
                Recognition::Interval(r) => {
                    assert!(expected, "{:?} accepted", g.edges());
                    assert!(r.verify(&g).unwrap());
                    interval += 1;
                }
                Recognition::NotInterval(o) => {
                    assert!(!expected, "{:?} rejected with {o}", g.edges());
                    assert!(o.validate(&g), "{:?}: bad certificate {o}", g.edges());
                }
            }
        }
    }
    assert_eq!(total, 1 + 2 + 8 + 64 + 1024 + 32768);
    assert!(interval > 0 && interval < total);
}

#[test]
fn verdicts_hold_on_disconnected_graphs() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            if g.is_connected() || !recognize(&g).unwrap().is_interval() {
                continue;
            }
            let v = decide_unique(&g).unwrap();
            let set = enumerate_associated_orders(&g, 6).unwrap();
            assert_eq!(v.unique, set.dual_classes == 1, "{:?}", g.edges());
            assert!(v.validate(&g), "{:?}: {v:?}", g.edges());
        }
    }
}

#[test]
fn buried_b_is_minimal() {
    let mut buried = 0;
    for n in 3..=6 {
        for g in all_graphs(n) {
            if !g.is_connected() || g.is_complete() || !recognize(&g).unwrap().is_interval() {
                continue;
            }
            for v in 0..n {
                for u in 0..n {
                    if v == u || g.adjacent(v, u) {
                        continue;
                    }
                    let b = construct_b(&g, v, u).unwrap().members();
                    if !is_buried(&g, &b).is_buried() {
                        continue;
                    }
                    buried += 1;
                    for a in subsets(&b) {
                        if a.len() < b.len() && a.contains(&v) && a.contains(&u) {
                            assert!(
                                !is_buried(&g, &a).is_buried(),
                                "{:?}: {a:?} is buried inside B({v},{u}) = {b:?}",
                                g.edges()
                            );
                        }
                    }
                }
            }
        }
    }
    println!("{buried} buried B(v,u) checked, all minimal");
    assert!(buried > 0);
}

fn permutations(k: usize) -> Vec<Vec<u64>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k as u64 - 1);
            out.push(q);
        }
    }
    out
}

fn buried_subsets(g: &Graph) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..g.n()).collect();
    subsets(&all).filter(|a| is_buried(g, a).is_buried()).collect()
}

#[test]
fn gadget_buried_subgraph_is_unique_for_small_stages() {
    for s in 1..=3 {
        for f in permutations(s) {
            let out = aca_gadget(&GadgetSpec::new(f.clone(), s).unwrap()).unwrap();
            assert_eq!(
                buried_subsets(&out.graph),
                vec![out.predicted_b.clone()],
                "f = {f:?}"
            );
        }
    }
}

#[test]
fn stage_zero_gadget_has_three_buried_subgraphs() {
    let out = aca_gadget(&GadgetSpec::new(vec![], 0).unwrap()).unwrap();
    let found = buried_subsets(&out.graph);
    assert_eq!(found, vec![vec![0, 1], vec![0, 3], vec![1, 3]]);
    assert!(found.contains(&out.predicted_b));
}
