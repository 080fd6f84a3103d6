//! Brute-force ground truth: every strict partial order whose
//! incomparability graph is the given graph, found by enumerating transitive
//! orientations of the complement.
//!
//! Shares nothing with the orderability module beyond the graph and order
//! types.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, StrictPartialOrder};
use crate::recognition::recognize;

pub const DEFAULT_MAX_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationSet {
    /// Sorted by their pair encoding.
    pub orders: Vec<StrictPartialOrder>,
    pub dual_classes: usize,
}

impl OrientationSet {
    /// The duality class of `o` is among the enumerated ones.
    pub fn contains_class_of(&self, o: &StrictPartialOrder) -> bool {
        let d = o.dual();
        self.orders.iter().any(|x| x == o || *x == d)
    }
}

/// Enumerates all associated orders of `g`. Refuses `g.n() > max_n`.
pub fn enumerate_associated_orders(g: &Graph, max_n: usize) -> Result<OrientationSet> {
    check_bound(g, max_n)?;
    let orders = enumerate(g, usize::MAX);
    let dual_classes = count_dual_classes(&orders);
    Ok(OrientationSet { orders, dual_classes })
}

/// `true` iff `g` has exactly one associated order up to duality.
/// Stops enumerating after the third order.
pub fn oracle_unique(g: &Graph, max_n: usize) -> Result<bool> {
    check_bound(g, max_n)?;
    let orders = enumerate(g, 3);
    if orders.is_empty() {
        if recognize(g)?.is_interval() {
            return Err(Error::internal(
                "interval graph with no associated order found by enumeration",
            ));
        }
        return Ok(false);
    }
    Ok(count_dual_classes(&orders) == 1 && orders.len() <= 2)
}

fn check_bound(g: &Graph, max_n: usize) -> Result<()> {
    if g.n() > max_n {
        return Err(Error::OracleBound {
            n: g.n(),
            bound: max_n,
        });
    }
    Ok(())
}

fn count_dual_classes(orders: &[StrictPartialOrder]) -> usize {
    let classes: BTreeSet<Vec<(usize, usize)>> =
        orders.iter().map(|o| o.pairs().min(o.dual().pairs())).collect();
    classes.len()
}

/// Partial orientation state: `lt[u][v]` set once `u < v` is decided.
#[derive(Clone)]
struct State {
    n: usize,
    lt: Vec<bool>,
}

impl State {
    fn less(&self, u: usize, v: usize) -> bool {
        self.lt[u * self.n + v]
    }

    /// Adds `u < v` and everything it forces. Returns `false` on conflict:
    /// a cycle, or a forced relation between adjacent (incomparable) vertices.
    fn assert_less(&mut self, g: &Graph, u: usize, v: usize) -> bool {
        let n = self.n;
        let mut stack = vec![(u, v)];
        while let Some((a, b)) = stack.pop() {
            if self.less(a, b) {
                continue;
            }
            if a == b || g.adjacent(a, b) || self.less(b, a) {
                return false;
            }
            self.lt[a * n + b] = true;
            for z in 0..n {
                // transitivity
                if self.less(z, a) {
                    stack.push((z, b));
                }
                if self.less(b, z) {
                    stack.push((a, z));
                }
                // a < b with z ~ a and z ≁ b: b < z would give a < z, so z < b
                if z != a && z != b && g.adjacent(z, a) && !g.adjacent(z, b) {
                    stack.push((z, b));
                }
                // a < b with z ~ b and z ≁ a: z < a would give z < b, so a < z
                if z != a && z != b && g.adjacent(z, b) && !g.adjacent(z, a) {
                    stack.push((a, z));
                }
            }
        }
        true
    }
}

fn enumerate(g: &Graph, limit: usize) -> Vec<StrictPartialOrder> {
    let n = g.n();
    let pairs: Vec<(usize, usize)> = g.complement().edges();
    let mut found = BTreeSet::new();
    let start = State {
        n,
        lt: vec![false; n * n],
    };
    search(g, &pairs, start, limit, &mut found);
    found
        .into_iter()
        .map(|p: Vec<(usize, usize)>| {
            StrictPartialOrder::from_pairs(n, &p).expect("search only emits closed orders")
        })
        .collect()
}

fn search(
    g: &Graph,
    pairs: &[(usize, usize)],
    state: State,
    limit: usize,
    found: &mut BTreeSet<Vec<(usize, usize)>>,
) {
    if found.len() >= limit {
        return;
    }
    let Some(&(u, v)) = pairs
        .iter()
        .find(|&&(u, v)| !state.less(u, v) && !state.less(v, u))
    else {
        let o = StrictPartialOrder::from_fn(state.n, |a, b| state.less(a, b));
        debug_assert!(o.validate().is_ok());
        found.insert(o.pairs());
        return;
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut next = state.clone();
        if next.assert_less(g, a, b) {
            search(g, pairs, next, limit, found);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: &Graph) -> (usize, usize) {
        let s = enumerate_associated_orders(g, DEFAULT_MAX_N).unwrap();
        for o in &s.orders {
            assert!(g.is_associated(o).unwrap());
        }
        (s.orders.len(), s.dual_classes)
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(count(&Graph::complete(3)), (1, 1));
        assert_eq!(count(&Graph::empty(3)), (6, 3));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(count(&p4), (2, 1));
        assert_eq!(count(&Graph::empty(4)), (24, 12));
    }

    #[test]
    fn oracle_unique_examples() {
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(oracle_unique(&diamond, DEFAULT_MAX_N).unwrap());
        let star3 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!oracle_unique(&star3, DEFAULT_MAX_N).unwrap());
        assert_eq!(count(&star3), (6, 3));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(oracle_unique(&two_k2, DEFAULT_MAX_N).unwrap());
        assert_eq!(count(&two_k2), (2, 1));
    }

    #[test]
    fn non_cocomparability_graph_has_no_orders() {
        // complement of C5 is C5, which is not a comparability graph
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(count(&c5), (0, 0));
        assert!(!oracle_unique(&c5, DEFAULT_MAX_N).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate_associated_orders(&Graph::empty(5), 4),
            Err(Error::OracleBound { n: 5, bound: 4 })
        ));
    }
}
