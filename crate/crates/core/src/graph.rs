//! Finite reflexive graphs, strict partial orders and the bridge between
//! them (incomparability graphs).
//!
//! Vertices are dense indices `0..n`. Self-loops are never stored: every
//! vertex is considered adjacent to itself, so [`Graph::adjacent`] returns
//! `true` for `(v, v)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::dsu::Dsu;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    labels: BTreeMap<usize, String>,
}

impl PartialEq for Graph {
    // labels are cosmetic
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            labels: BTreeMap::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.adj[u * n + v] = true;
                }
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse;
    /// explicit self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!(
                    "explicit self-loop ({u}, {u}); reflexivity is implicit"
                )));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        if let Some((&v, _)) = labels.iter().find(|(&v, _)| v >= self.n) {
            return Err(Error::input(format!(
                "label for vertex {v} outside 0..{}",
                self.n
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Display name of `v`: its label if one was given, else the index.
    pub fn label(&self, v: usize) -> String {
        self.labels.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    /// Reflexive adjacency.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u == v || self.adj[u * self.n + v]
    }

    /// Adjacency between distinct vertices only.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components, each sorted, listed by least element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.n);
        for (u, v) in self.edges() {
            dsu.union(u, v);
        }
        let (labels, count) = dsu.labels();
        let mut comps = vec![Vec::new(); count];
        for (v, &c) in labels.iter().enumerate() {
            comps[c].push(v);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.has_edge(u, v) {
                    g.adj[u * self.n + v] = true;
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Induced subgraph on `keep` (in the given order), carrying labels along.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let m = keep.len();
        let mut g = Graph::empty(m);
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if i != j && self.has_edge(u, v) {
                    g.adj[i * m + j] = true;
                }
            }
            if let Some(l) = self.labels.get(&u) {
                g.labels.insert(i, l.clone());
            }
        }
        g
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) + 1 == self.n).collect()
    }

    /// Checks that `p` is a path: consecutive vertices distinct and adjacent.
    pub fn check_path(&self, p: &[usize]) -> Result<()> {
        if p.is_empty() {
            return Err(Error::input("a path needs at least one vertex"));
        }
        if let Some(&v) = p.iter().find(|&&v| v >= self.n) {
            return Err(Error::input(format!("path vertex {v} outside 0..{}", self.n)));
        }
        for w in p.windows(2) {
            if !self.has_edge(w[0], w[1]) {
                return Err(Error::input(format!(
                    "{} and {} are consecutive on the path but not adjacent",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    /// No two vertices more than one step apart along `p` are adjacent
    /// (equal counts as adjacent).
    pub fn is_minimal_path(&self, p: &[usize]) -> Result<bool> {
        self.check_path(p)?;
        Ok(first_shortcut(self, p).is_none())
    }

    /// Shortcuts `p` until it is minimal. Each step takes the smallest `i`
    /// admitting a shortcut and jumps to the largest `j > i + 1` with
    /// `p[i] E p[j]`.
    pub fn refine_to_minimal(&self, p: &[usize]) -> Result<Path> {
        self.check_path(p)?;
        let mut cur = p.to_vec();
        while let Some((i, j)) = first_shortcut(self, &cur) {
            if cur[i] == cur[j] {
                cur.drain(i + 1..=j);
            } else {
                cur.drain(i + 1..j);
            }
        }
        Ok(Path(cur))
    }

    /// Shortest path from `from` to `to` using only vertices allowed by
    /// `allowed`, lexicographically least among shortest ones.
    pub fn shortest_path_within(
        &self,
        from: usize,
        to: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Path> {
        if !allowed(from) || !allowed(to) {
            return None;
        }
        // distances measured from the target so the walk from `from` can be
        // greedy on the least admissible neighbour
        let mut dist = vec![usize::MAX; self.n];
        dist[to] = 0;
        let mut queue = VecDeque::from([to]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if dist[y] == usize::MAX && allowed(y) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[from] == usize::MAX {
            return None;
        }
        let mut path = vec![from];
        let mut cur = from;
        while cur != to {
            cur = self
                .neighbors(cur)
                .find(|&y| dist[y] != usize::MAX && dist[y] + 1 == dist[cur])
                .expect("bfs layers are consistent");
            path.push(cur);
        }
        Some(Path(path))
    }

    /// `true` iff `o` is a partial order associated to this graph, that is,
    /// distinct vertices are adjacent exactly when `o`-incomparable.
    pub fn is_associated(&self, o: &StrictPartialOrder) -> Result<bool> {
        if o.n() != self.n {
            return Err(Error::input(format!(
                "order has {} elements but graph has {} vertices",
                o.n(),
                self.n
            )));
        }
        Ok(o.incomparability_graph() == *self)
    }
}

fn first_shortcut(g: &Graph, p: &[usize]) -> Option<(usize, usize)> {
    for i in 0..p.len() {
        if let Some(j) = (i + 2..p.len()).rev().find(|&j| g.adjacent(p[i], p[j])) {
            return Some((i, j));
        }
    }
    None
}

/// A vertex sequence whose consecutive entries are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }
}

/// Irreflexive, antisymmetric, transitive relation on `0..n`, stored as an
/// explicit (already closed) relation matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartialOrder {
    n: usize,
    lt: Vec<bool>,
}

impl fmt::Debug for StrictPartialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StrictPartialOrder")
            .field("n", &self.n)
            .field("pairs", &self.pairs())
            .finish()
    }
}

impl StrictPartialOrder {
    pub fn antichain(n: usize) -> Self {
        StrictPartialOrder {
            n,
            lt: vec![false; n * n],
        }
    }

    /// Linear order listing `seq[0] < seq[1] < ...`; `seq` must be a
    /// permutation of `0..seq.len()`.
    pub fn chain(seq: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = seq.windows(2).map(|w| (w[0], w[1])).collect();
        Self::closure_of(seq.len(), &pairs)
    }

    /// Accepts `pairs` only if they already form a transitively closed strict
    /// partial order.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let o = Self::raw(n, pairs)?;
        o.validate()?;
        Ok(o)
    }

    /// Transitive closure of `pairs`, rejected if the closure is not
    /// irreflexive.
    pub fn closure_of(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut o = Self::raw(n, pairs)?;
        for k in 0..n {
            for i in 0..n {
                if o.lt[i * n + k] {
                    for j in 0..n {
                        if o.lt[k * n + j] {
                            o.lt[i * n + j] = true;
                        }
                    }
                }
            }
        }
        o.validate()?;
        Ok(o)
    }

    fn raw(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut o = StrictPartialOrder::antichain(n);
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::input(format!("relation pair ({u}, {v}) outside 0..{n}")));
            }
            o.lt[u * n + v] = true;
        }
        Ok(o)
    }

    /// Builds from a full relation matrix; callers must validate.
    pub(crate) fn from_fn(n: usize, less: impl Fn(usize, usize) -> bool) -> Self {
        let mut lt = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                lt[u * n + v] = less(u, v);
            }
        }
        StrictPartialOrder { n, lt }
    }

    /// Irreflexivity, antisymmetry and transitivity, checked in O(n³).
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for u in 0..n {
            if self.less(u, u) {
                return Err(Error::input(format!("relation is not irreflexive at {u}")));
            }
            for v in 0..n {
                if self.less(u, v) && self.less(v, u) {
                    return Err(Error::input(format!("relation is not antisymmetric on {u}, {v}")));
                }
                if self.less(u, v) {
                    for w in 0..n {
                        if self.less(v, w) && !self.less(u, w) {
                            return Err(Error::input(format!(
                                "relation is not transitive: {u} < {v} < {w} but not {u} < {w}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn less(&self, u: usize, v: usize) -> bool {
        self.lt[u * self.n + v]
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.less(u, v) || self.less(v, u)
    }

    /// All pairs `(u, v)` with `u < v` in the order, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n * n)
            .filter(|&i| self.lt[i])
            .map(|i| (i / n, i % n))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.lt.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dual(&self) -> Self {
        Self::from_fn(self.n, |u, v| self.less(v, u))
    }

    /// Distinct vertices adjacent iff incomparable.
    pub fn incomparability_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.comparable(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Same order with the relation reversed between members of `set`;
    /// pairs with at least one endpoint outside `set` are kept.
    pub fn dualized_within(&self, set: &[usize]) -> Self {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        Self::from_fn(self.n, |u, v| {
            if inside[u] && inside[v] {
                self.less(v, u)
            } else {
                self.less(u, v)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::complete(3)
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn from_edges_symmetrizes_and_collapses() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.adjacent(2, 2));
        assert!(!g.has_edge(2, 2));
        assert_eq!(Graph::from_edges(3, &[]).unwrap().edge_count(), 0);
        let f = diamond();
        let non_edges: Vec<_> = f.complement().edges();
        assert_eq!(non_edges, vec![(0, 2)]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(Error::Input(_))));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Input(_))));
    }

    #[test]
    fn components_examples() {
        assert_eq!(k3().components(), vec![vec![0, 1, 2]]);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::empty(3).components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(k3().complement(), Graph::empty(3));
        assert_eq!(p4().complement().edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(p4().complement().complement(), p4());
    }

    #[test]
    fn minimal_path_examples() {
        assert!(p4().is_minimal_path(&[0, 1, 2, 3]).unwrap());
        assert!(!k3().is_minimal_path(&[0, 1, 2]).unwrap());
        assert!(diamond().is_minimal_path(&[0, 1, 2]).unwrap());
        assert!(p4().is_minimal_path(&[0, 2]).is_err());
        assert!(p4().is_minimal_path(&[]).is_err());
    }

    #[test]
    fn refine_examples() {
        assert_eq!(k3().refine_to_minimal(&[0, 1, 2]).unwrap().0, vec![0, 2]);
        assert_eq!(p4().refine_to_minimal(&[0, 1, 2, 3]).unwrap().0, vec![0, 1, 2, 3]);
        let r = diamond().refine_to_minimal(&[0, 3, 1, 2]).unwrap();
        assert_eq!(r.0, vec![0, 1, 2]);
        assert!(diamond().is_minimal_path(&r.0).unwrap());
        // a walk revisiting its start collapses onto the repeated vertex
        assert_eq!(p4().refine_to_minimal(&[1, 2, 1, 0]).unwrap().0, vec![1, 0]);
        assert!(p4().refine_to_minimal(&[0, 2]).is_err());
    }

    #[test]
    fn incomparability_examples() {
        let chain = StrictPartialOrder::chain(&[0, 1, 2]).unwrap();
        assert_eq!(chain.incomparability_graph(), Graph::empty(3));
        assert_eq!(StrictPartialOrder::antichain(3).incomparability_graph(), k3());
        let two_plus_two = StrictPartialOrder::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two_plus_two.incomparability_graph().edges(),
            vec![(0, 2), (0, 3), (1, 2), (1, 3)]
        );
    }

    #[test]
    fn associated_examples() {
        assert!(k3().is_associated(&StrictPartialOrder::antichain(3)).unwrap());
        let o = StrictPartialOrder::from_pairs(4, &[(0, 2), (0, 3), (1, 3)]).unwrap();
        assert!(p4().is_associated(&o).unwrap());
        let closed = StrictPartialOrder::closure_of(4, &[(2, 0), (0, 3)]).unwrap();
        assert!(closed.less(2, 3));
        assert!(!p4().is_associated(&closed).unwrap());
        assert!(p4().is_associated(&StrictPartialOrder::antichain(3)).is_err());
    }

    #[test]
    fn order_validation() {
        assert!(StrictPartialOrder::from_pairs(3, &[(0, 1), (1, 2)]).is_err());
        assert!(StrictPartialOrder::closure_of(3, &[(0, 1), (1, 2)]).is_ok());
        assert!(StrictPartialOrder::closure_of(2, &[(0, 1), (1, 0)]).is_err());
        assert!(StrictPartialOrder::from_pairs(2, &[(1, 1)]).is_err());
        assert!(StrictPartialOrder::from_pairs(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn universal_examples() {
        assert_eq!(k3().universal_vertices(), vec![0, 1, 2]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.universal_vertices(), vec![0]);
        assert!(p4().universal_vertices().is_empty());
    }

    #[test]
    fn dualized_within_flips_only_inside() {
        let o = StrictPartialOrder::chain(&[0, 1, 2]).unwrap();
        let d = o.dualized_within(&[0, 1]);
        assert_eq!(d.pairs(), vec![(0, 2), (1, 0), (1, 2)]);
    }

    #[test]
    fn shortest_path_is_lexicographic() {
        // square 0-1-3, 0-2-3
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.shortest_path_within(0, 3, |_| true).unwrap().0, vec![0, 1, 3]);
        assert_eq!(g.shortest_path_within(0, 3, |v| v != 1).unwrap().0, vec![0, 2, 3]);
        assert!(g.shortest_path_within(0, 3, |v| v != 1 && v != 2).is_none());
    }
}
