//! Closed interval representations with exact rational endpoints, and the
//! bridges between representations, interval orders and graphs.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, StrictPartialOrder};

pub type Rational = Ratio<i64>;

/// Vertex `v` is represented by the closed interval `[left[v], right[v]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedRepresentation {
    left: Vec<Rational>,
    right: Vec<Rational>,
}

impl ClosedRepresentation {
    pub fn new(left: Vec<Rational>, right: Vec<Rational>) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::input(format!(
                "{} left endpoints but {} right endpoints",
                left.len(),
                right.len()
            )));
        }
        if let Some(v) = (0..left.len()).find(|&v| left[v] > right[v]) {
            return Err(Error::input(format!(
                "interval of vertex {v} has left endpoint {} above right endpoint {}",
                left[v], right[v]
            )));
        }
        Ok(ClosedRepresentation { left, right })
    }

    /// Convenience constructor from integer endpoint pairs.
    pub fn from_ints(intervals: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            intervals
                .iter()
                .map(|&(l, _)| Rational::from_integer(l))
                .collect(),
            intervals
                .iter()
                .map(|&(_, r)| Rational::from_integer(r))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.left.len()
    }

    pub fn left(&self, v: usize) -> Rational {
        self.left[v]
    }

    pub fn right(&self, v: usize) -> Rational {
        self.right[v]
    }

    /// Closed intervals meet (a shared endpoint counts).
    pub fn intersects(&self, u: usize, v: usize) -> bool {
        self.left[u] <= self.right[v] && self.left[v] <= self.right[u]
    }

    /// `F(u) < F(v)`: the interval of `u` lies wholly before that of `v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.right[u] < self.left[v]
    }

    pub fn induced_graph(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.intersects(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("indices are in range")
    }

    /// `true` iff every pair of distinct vertices is adjacent in `g` exactly
    /// when their intervals meet.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        if g.n() != self.n() {
            return Err(Error::input(format!(
                "representation has {} intervals but graph has {} vertices",
                self.n(),
                g.n()
            )));
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                // order the pair by left endpoint, then one comparison decides
                let (a, b) = if self.left[u] <= self.left[v] {
                    (u, v)
                } else {
                    (v, u)
                };
                let meet = self.left[b] <= self.right[a];
                if meet != g.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `u < v` iff `right(u) < left(v)`.
    pub fn to_order(&self) -> StrictPartialOrder {
        let o = StrictPartialOrder::from_fn(self.n(), |u, v| self.precedes(u, v));
        debug_assert!(o.validate().is_ok());
        o
    }

    /// Re-ranks the 2n endpoints to the distinct integers `0..2n`, keeping
    /// every intersection and every strict precedence. At equal values left
    /// endpoints sort before right endpoints so touching intervals keep
    /// meeting and point intervals become proper.
    pub fn normalize_distinguishing(&self) -> ClosedRepresentation {
        let n = self.n();
        // (value, side, vertex) with side 0 = left, 1 = right
        let mut events: Vec<(Rational, u8, usize)> = Vec::with_capacity(2 * n);
        for v in 0..n {
            events.push((self.left[v], 0, v));
            events.push((self.right[v], 1, v));
        }
        events.sort();
        let mut left = vec![Rational::from_integer(0); n];
        let mut right = vec![Rational::from_integer(0); n];
        for (rank, &(_, side, v)) in events.iter().enumerate() {
            let r = Rational::from_integer(rank as i64);
            if side == 0 {
                left[v] = r;
            } else {
                right[v] = r;
            }
        }
        ClosedRepresentation { left, right }
    }

    /// All 2n endpoints pairwise distinct and every interval proper.
    pub fn is_distinguishing(&self) -> bool {
        let mut all: Vec<Rational> = self.left.iter().chain(&self.right).copied().collect();
        all.sort();
        all.windows(2).all(|w| w[0] != w[1]) && (0..self.n()).all(|v| self.left[v] < self.right[v])
    }
}

/// Finds four elements `a < b`, `c < d` forming a 2+2: the two chains are
/// pairwise incomparable across. Lexicographically least witness.
pub fn find_two_plus_two(o: &StrictPartialOrder) -> Option<[usize; 4]> {
    let pairs = o.pairs();
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !o.comparable(a, d) && !o.comparable(c, b) && !o.comparable(a, c) && !o.comparable(b, d) {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

/// An order is an interval order iff it contains no 2+2.
pub fn is_interval_order(o: &StrictPartialOrder) -> bool {
    find_two_plus_two(o).is_none()
}

/// Builds a representation of an interval order. Down-sets of a 2+2-free
/// order are nested; the left endpoint of `v` is the rank of its down-set,
/// the right endpoint is the rank of the largest down-set not containing `v`.
pub fn order_to_representation(o: &StrictPartialOrder) -> Result<ClosedRepresentation> {
    if let Some([a, b, c, d]) = find_two_plus_two(o) {
        return Err(Error::input(format!(
            "order contains 2+2 on {a} < {b} and {c} < {d}; not an interval order"
        )));
    }
    let n = o.n();
    let down: Vec<Vec<bool>> = (0..n).map(|v| (0..n).map(|u| o.less(u, v)).collect()).collect();
    let mut distinct: Vec<Vec<bool>> = down.clone();
    distinct.sort_by_key(|s| s.iter().filter(|&&b| b).count());
    distinct.dedup();
    let rank_of = |s: &Vec<bool>| distinct.iter().position(|d| d == s).expect("listed");
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for v in 0..n {
        left.push(Rational::from_integer(rank_of(&down[v]) as i64));
        let outside = distinct.iter().filter(|d| !d[v]).count();
        right.push(Rational::from_integer(outside as i64 - 1));
    }
    let r = ClosedRepresentation::new(left, right)
        .map_err(|e| Error::internal(format!("down-set construction: {e}")))?;
    if r.to_order() != *o {
        return Err(Error::internal(
            "down-set construction does not reproduce the order",
        ));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn diamond_rep() -> ClosedRepresentation {
        ClosedRepresentation::from_ints(&[(4, 8), (6, 10), (9, 13), (5, 12)]).unwrap()
    }

    #[test]
    fn verify_examples() {
        assert!(diamond_rep().verify(&diamond()).unwrap());
        let k3 = Graph::complete(3);
        assert!(ClosedRepresentation::from_ints(&[(0, 1); 3])
            .unwrap()
            .verify(&k3)
            .unwrap());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let touching = ClosedRepresentation::from_ints(&[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(touching.verify(&p4).unwrap());
        let overlapping = ClosedRepresentation::from_ints(&[(0, 2), (1, 3), (2, 4), (3, 5)]).unwrap();
        assert!(!overlapping.verify(&p4).unwrap());
        assert!(touching.verify(&Graph::empty(3)).is_err());
    }

    #[test]
    fn rejects_reversed_interval() {
        assert!(ClosedRepresentation::from_ints(&[(2, 1)]).is_err());
        assert!(ClosedRepresentation::from_ints(&[(3, 3)]).is_ok());
    }

    #[test]
    fn order_examples() {
        assert_eq!(diamond_rep().to_order().pairs(), vec![(0, 2)]);
        let same = ClosedRepresentation::from_ints(&[(0, 1); 3]).unwrap();
        assert!(same.to_order().is_empty());
        let disjoint = ClosedRepresentation::from_ints(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(
            disjoint.to_order(),
            StrictPartialOrder::chain(&[0, 1, 2]).unwrap()
        );
    }

    #[test]
    fn interval_order_examples() {
        let two_two = StrictPartialOrder::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_interval_order(&two_two));
        assert_eq!(find_two_plus_two(&two_two), Some([0, 1, 2, 3]));
        assert!(is_interval_order(&StrictPartialOrder::chain(&[0, 1, 2]).unwrap()));
        assert!(is_interval_order(&diamond_rep().to_order()));
    }

    #[test]
    fn order_to_representation_examples() {
        let anti = order_to_representation(&StrictPartialOrder::antichain(3)).unwrap();
        assert_eq!(anti.induced_graph(), Graph::complete(3));
        let chain = StrictPartialOrder::chain(&[0, 1, 2]).unwrap();
        let r = order_to_representation(&chain).unwrap();
        assert!(r.precedes(0, 1) && r.precedes(1, 2));
        let base = StrictPartialOrder::from_pairs(4, &[(0, 2)]).unwrap();
        assert!(order_to_representation(&base)
            .unwrap()
            .verify(&diamond())
            .unwrap());
        let two_two = StrictPartialOrder::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(order_to_representation(&two_two), Err(Error::Input(_))));
    }

    #[test]
    fn normalize_examples() {
        let touching = ClosedRepresentation::from_ints(&[(0, 2), (2, 4)]).unwrap();
        let norm = touching.normalize_distinguishing();
        assert!(norm.is_distinguishing());
        assert_eq!(norm.induced_graph(), touching.induced_graph());
        assert!(norm.intersects(0, 1));

        let base = diamond_rep();
        let norm = base.normalize_distinguishing();
        assert_eq!(norm.to_order(), base.to_order());
        assert!(norm.verify(&diamond()).unwrap());

        let point = ClosedRepresentation::from_ints(&[(3, 3)]).unwrap();
        let norm = point.normalize_distinguishing();
        assert_eq!(
            (norm.left(0), norm.right(0)),
            (Rational::from(0), Rational::from(1))
        );
    }

    #[test]
    fn rationals_are_compared_exactly() {
        let r = ClosedRepresentation::new(
            vec![Rational::new(1, 3), Rational::new(2, 6)],
            vec![Rational::new(1, 3), Rational::new(1, 2)],
        )
        .unwrap();
        assert!(r.intersects(0, 1));
    }
}
