//! Interval graph recognition with certificates either way: a closed
//! representation, or a chordless cycle / asteroidal triple.
//!
//! The positive route orders the maximal cliques so that each vertex's
//! cliques are consecutive. When no such ordering exists the obstruction is
//! extracted independently, by looking for a chordless cycle and then for an
//! asteroidal triple; one of the two must exist for a non-interval graph.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};
use crate::representation::{ClosedRepresentation, Rational};

/// Three pairwise non-adjacent vertices with, for every two of them, a path
/// avoiding the closed neighbourhood of the third.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsteroidalTriple {
    pub triple: [usize; 3],
    /// `[t0–t1 avoiding N[t2], t0–t2 avoiding N[t1], t1–t2 avoiding N[t0]]`
    pub witness_paths: [Path; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// Simple cycle of length at least 4 with no chord, listed without
    /// repeating its first vertex.
    ChordlessCycle(Vec<usize>),
    AsteroidalTriple(AsteroidalTriple),
}

impl Obstruction {
    /// Re-checks the certificate straight from the definitions.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            Obstruction::ChordlessCycle(c) => is_chordless_cycle(g, c),
            Obstruction::AsteroidalTriple(at) => is_asteroidal_triple(g, at),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Obstruction::ChordlessCycle(_) => "chordless_cycle",
            Obstruction::AsteroidalTriple(_) => "asteroidal_triple",
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::ChordlessCycle(c) => write!(f, "chordless cycle {c:?}"),
            Obstruction::AsteroidalTriple(at) => write!(f, "asteroidal triple {:?}", at.triple),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Interval(ClosedRepresentation),
    NotInterval(Obstruction),
}

impl Recognition {
    pub fn is_interval(&self) -> bool {
        matches!(self, Recognition::Interval(_))
    }

    pub fn representation(&self) -> Option<&ClosedRepresentation> {
        match self {
            Recognition::Interval(r) => Some(r),
            Recognition::NotInterval(_) => None,
        }
    }
}

pub fn is_chordless_cycle(g: &Graph, c: &[usize]) -> bool {
    let len = c.len();
    if len < 4 || c.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = HashSet::new();
    if !c.iter().all(|v| seen.insert(*v)) {
        return false;
    }
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if g.has_edge(c[i], c[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

pub fn is_asteroidal_triple(g: &Graph, at: &AsteroidalTriple) -> bool {
    let [a, b, c] = at.triple;
    if [a, b, c].iter().any(|&v| v >= g.n()) || a == b || b == c || a == c {
        return false;
    }
    if g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c) {
        return false;
    }
    let legs = [(a, b, c), (a, c, b), (b, c, a)];
    legs.iter().zip(&at.witness_paths).all(|(&(x, y, avoid), p)| {
        g.check_path(p.vertices()).is_ok()
            && p.first() == x
            && p.last() == y
            && p.vertices().iter().all(|&w| !g.adjacent(avoid, w))
    })
}

/// All maximal cliques, each sorted, in lexicographic order
/// (Bron–Kerbosch with Tomita pivoting).
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn expand(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| {
                (
                    p.iter().filter(|&&w| g.has_edge(u, w)).count(),
                    std::cmp::Reverse(u),
                )
            })
            .expect("p is non-empty");
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    expand(g, &mut Vec::new(), (0..g.n()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

/// Orders `cliques` so that every vertex occurs in a consecutive run.
/// Backtracks in index order, so the first ordering found is the
/// lexicographically least one.
pub fn consecutive_clique_order(n: usize, cliques: &[Vec<usize>]) -> Option<Vec<usize>> {
    let m = cliques.len();
    let mut member = vec![vec![false; n]; m];
    for (c, clique) in cliques.iter().enumerate() {
        for &v in clique {
            member[c][v] = true;
        }
    }
    let mut remaining = vec![0usize; n];
    for clique in cliques {
        for &v in clique {
            remaining[v] += 1;
        }
    }

    struct Search<'a> {
        cliques: &'a [Vec<usize>],
        member: Vec<Vec<bool>>,
        remaining: Vec<usize>,
        closed: Vec<bool>,
        placed: Vec<bool>,
        order: Vec<usize>,
        failed: HashSet<(Vec<u64>, usize)>,
    }

    impl Search<'_> {
        fn key(&self) -> Vec<u64> {
            let mut words = vec![0u64; self.placed.len().div_ceil(64)];
            for (i, &p) in self.placed.iter().enumerate() {
                if p {
                    words[i / 64] |= 1 << (i % 64);
                }
            }
            words
        }

        fn run(&mut self) -> bool {
            let m = self.cliques.len();
            if self.order.len() == m {
                return true;
            }
            let last = self.order.last().copied();
            for c in 0..m {
                if self.placed[c] {
                    continue;
                }
                if self.cliques[c].iter().any(|&v| self.closed[v]) {
                    continue;
                }
                // vertices of the previous clique missing from `c` close now,
                // so they must have no cliques left besides those placed
                let mut closing = Vec::new();
                if let Some(l) = last {
                    closing = self.cliques[l]
                        .iter()
                        .copied()
                        .filter(|&v| !self.member[c][v])
                        .collect();
                    if closing.iter().any(|&v| self.remaining[v] > 0) {
                        continue;
                    }
                }
                self.placed[c] = true;
                let key = (self.key(), c);
                if self.failed.contains(&key) {
                    self.placed[c] = false;
                    continue;
                }
                for &v in &closing {
                    self.closed[v] = true;
                }
                for &v in &self.cliques[c] {
                    self.remaining[v] -= 1;
                }
                self.order.push(c);
                if self.run() {
                    return true;
                }
                self.order.pop();
                for &v in &self.cliques[c] {
                    self.remaining[v] += 1;
                }
                for &v in &closing {
                    self.closed[v] = false;
                }
                self.placed[c] = false;
                self.failed.insert(key);
            }
            false
        }
    }

    let mut s = Search {
        cliques,
        member,
        remaining,
        closed: vec![false; n],
        placed: vec![false; m],
        order: Vec::with_capacity(m),
        failed: HashSet::new(),
    };
    s.run().then_some(s.order)
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut pos = vec![usize::MAX; n];
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        pos[v] = step;
        for u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    (0..n).all(|v| {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] < pos[v]).collect();
        earlier
            .iter()
            .enumerate()
            .all(|(i, &a)| earlier[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// `None` when every cycle of length ≥ 4 has a chord; otherwise the shortest
/// chordless cycle, lexicographically least in its canonical rotation
/// (starting at its least vertex, second vertex smaller than the last).
pub fn check_triangulated(g: &Graph) -> Option<Vec<usize>> {
    if is_chordal(g) {
        return None;
    }
    let n = g.n();
    // Length of the shortest chordless cycle: close every induced a-b-c with
    // a shortest c..a path that stays outside N[b].
    let mut best = usize::MAX;
    for b in 0..n {
        let nb: Vec<usize> = g.neighbors(b).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if g.has_edge(a, c) {
                    continue;
                }
                let allowed = |w: usize| w == a || w == c || !g.adjacent(b, w);
                if let Some(p) = g.shortest_path_within(c, a, allowed) {
                    best = best.min(p.len() + 2);
                }
            }
        }
    }
    if best == usize::MAX {
        return None;
    }
    for s in 0..n {
        let mut cycle = vec![s];
        if extend_cycle(g, best, &mut cycle) {
            return Some(cycle);
        }
    }
    None
}

fn extend_cycle(g: &Graph, target: usize, cycle: &mut Vec<usize>) -> bool {
    let s = cycle[0];
    let k = cycle.len();
    let tail = cycle[k - 1];
    for w in g.neighbors(tail) {
        if w <= s || cycle.contains(&w) {
            continue;
        }
        // w may only touch its predecessor, plus s when it closes the cycle
        let closes = k == target - 1;
        if k >= 2 && (cycle[1..k - 1].iter().any(|&x| g.has_edge(x, w)) || g.has_edge(s, w) != closes) {
            continue;
        }
        if closes {
            if w > cycle[1] {
                cycle.push(w);
                return true;
            }
            continue;
        }
        cycle.push(w);
        if extend_cycle(g, target, cycle) {
            return true;
        }
        cycle.pop();
    }
    false
}

/// Lexicographically least asteroidal triple, with lexicographically least
/// shortest witness paths.
pub fn find_asteroidal_triple(g: &Graph) -> Option<AsteroidalTriple> {
    let n = g.n();
    let leg = |x: usize, y: usize, avoid: usize| g.shortest_path_within(x, y, |w| !g.adjacent(avoid, w));
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.adjacent(a, c) || g.adjacent(b, c) {
                    continue;
                }
                let (Some(p0), Some(p1), Some(p2)) = (leg(a, b, c), leg(a, c, b), leg(b, c, a)) else {
                    continue;
                };
                return Some(AsteroidalTriple {
                    triple: [a, b, c],
                    witness_paths: [p0, p1, p2],
                });
            }
        }
    }
    None
}

/// Reads the intervals off a consecutive clique ordering.
fn representation_from_clique_order(
    n: usize,
    cliques: &[Vec<usize>],
    order: &[usize],
) -> Result<ClosedRepresentation> {
    let mut left = vec![None; n];
    let mut right = vec![None; n];
    for (pos, &c) in order.iter().enumerate() {
        for &v in &cliques[c] {
            left[v].get_or_insert(pos as i64);
            right[v] = Some(pos as i64);
        }
    }
    let unwrap = |xs: Vec<Option<i64>>| -> Result<Vec<Rational>> {
        xs.into_iter()
            .map(|x| {
                x.map(Rational::from_integer)
                    .ok_or_else(|| Error::internal("vertex missing from every maximal clique"))
            })
            .collect()
    };
    ClosedRepresentation::new(unwrap(left)?, unwrap(right)?)
}

/// Decides interval-graph-hood. A representation is re-verified before it
/// is returned; an obstruction is re-validated from the definitions.
pub fn recognize(g: &Graph) -> Result<Recognition> {
    let n = g.n();
    let cliques = maximal_cliques(g);
    if let Some(order) = consecutive_clique_order(n, &cliques) {
        let r = representation_from_clique_order(n, &cliques, &order)?;
        if !r.verify(g)? {
            return Err(Error::internal("clique-order representation fails verification"));
        }
        return Ok(Recognition::Interval(r));
    }
    let obstruction = if let Some(c) = check_triangulated(g) {
        Obstruction::ChordlessCycle(c)
    } else if let Some(at) = find_asteroidal_triple(g) {
        Obstruction::AsteroidalTriple(at)
    } else {
        return Err(Error::internal(
            "no consecutive clique ordering, yet the graph is triangulated without asteroidal triples",
        ));
    };
    if !obstruction.validate(g) {
        return Err(Error::internal(format!(
            "extracted {obstruction} does not validate"
        )));
    }
    Ok(Recognition::NotInterval(obstruction))
}

/// Representation of an interval graph, or [`Error::NotInterval`].
pub fn require_interval(g: &Graph) -> Result<ClosedRepresentation> {
    match recognize(g)? {
        Recognition::Interval(r) => Ok(r),
        Recognition::NotInterval(o) => Err(Error::NotInterval(Box::new(o))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    /// triangle a,b,c with pendants x-a, y-b, z-c; order a,b,c,x,y,z
    fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]).unwrap()
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn triangulated_examples() {
        assert_eq!(check_triangulated(&c4()), Some(vec![0, 1, 2, 3]));
        assert_eq!(check_triangulated(&net()), None);
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(check_triangulated(&tree), None);
    }

    #[test]
    fn shortest_chordless_cycle_is_preferred() {
        // C6 on 0..6 plus a separate C4 on 6..10
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 7), (7, 8), (8, 9), (9, 6)]);
        let g = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(check_triangulated(&g), Some(vec![6, 7, 8, 9]));
        let c5 = Graph::from_edges(5, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)]).unwrap();
        assert_eq!(check_triangulated(&c5), Some(vec![0, 2, 4, 1, 3]));
    }

    #[test]
    fn asteroidal_examples() {
        let at = find_asteroidal_triple(&net()).unwrap();
        assert_eq!(at.triple, [3, 4, 5]);
        assert_eq!(at.witness_paths[0].vertices(), &[3, 0, 1, 4]);
        assert!(is_asteroidal_triple(&net(), &at));
        assert!(find_asteroidal_triple(&Graph::complete(3)).is_none());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(find_asteroidal_triple(&p4).is_none());
    }

    #[test]
    fn recognize_examples() {
        let r = recognize(&diamond()).unwrap();
        let rep = r.representation().unwrap();
        assert!(rep.verify(&diamond()).unwrap());
        assert_eq!(rep.to_order().pairs().len(), 1);

        match recognize(&net()).unwrap() {
            Recognition::NotInterval(Obstruction::AsteroidalTriple(at)) => {
                assert_eq!(at.triple, [3, 4, 5])
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            recognize(&c4()).unwrap(),
            Recognition::NotInterval(Obstruction::ChordlessCycle(vec![0, 1, 2, 3]))
        );
    }

    #[test]
    fn degenerate_graphs() {
        assert!(recognize(&Graph::empty(0)).unwrap().is_interval());
        assert!(recognize(&Graph::empty(1)).unwrap().is_interval());
        assert!(recognize(&Graph::empty(4)).unwrap().is_interval());
    }

    #[test]
    fn cliques_of_diamond() {
        assert_eq!(maximal_cliques(&diamond()), vec![vec![0, 1, 3], vec![1, 2, 3]]);
        assert_eq!(maximal_cliques(&Graph::empty(2)), vec![vec![0], vec![1]]);
    }

    #[test]
    fn validators_reject_tampering() {
        assert!(!is_chordless_cycle(&c4(), &[0, 1, 2]));
        assert!(!is_chordless_cycle(&Graph::complete(4), &[0, 1, 2, 3]));
        let mut at = find_asteroidal_triple(&net()).unwrap();
        at.witness_paths[0] = Path(vec![3, 0, 2, 1, 4]);
        assert!(!is_asteroidal_triple(&net(), &at));
    }
}
