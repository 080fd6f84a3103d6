//! Unique orderability of interval graphs.
//!
//! Three routes are computed independently and cross-checked:
//!
//! * the pair graph `(W, Q)` on ordered non-adjacent pairs, where
//!   `ab Q cd` iff `a E c` and `b E d`; a connected non-complete interval
//!   graph is uniquely orderable iff it has exactly two Q-components;
//! * the leveled fixpoint `B(v, u)` grown from a non-adjacent pair, which
//!   is a buried subgraph iff its remainder `R` is non-empty;
//! * the brute-force enumeration in [`crate::oracle`] (used by tests and the
//!   self-test, not by the decision itself).

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::{Graph, StrictPartialOrder};
use crate::recognition::require_interval;

pub type Pair = (usize, usize);

/// The pair graph `(W, Q)` with its components.
#[derive(Clone, Debug)]
pub struct WqGraph {
    base: Graph,
    pairs: Vec<Pair>,
    index: HashMap<Pair, usize>,
    component_of: Vec<usize>,
    components: usize,
}

impl WqGraph {
    pub fn build(g: &Graph) -> Self {
        let n = g.n();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if !g.adjacent(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        let index: HashMap<Pair, usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut dsu = Dsu::new(pairs.len());
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if q_adjacent(g, pairs[i], pairs[j]) {
                    dsu.union(i, j);
                }
            }
        }
        // pairs are sorted, so numbering by least member is numbering by least pair
        let (component_of, components) = dsu.labels();
        WqGraph {
            base: g.clone(),
            pairs,
            index,
            component_of,
            components,
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// `W`, lexicographically sorted.
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn contains(&self, p: Pair) -> bool {
        self.index.contains_key(&p)
    }

    pub fn component_of(&self, p: Pair) -> Option<usize> {
        self.index.get(&p).map(|&i| self.component_of[i])
    }

    /// Members of component `id`, sorted.
    pub fn component(&self, id: usize) -> Vec<Pair> {
        self.pairs
            .iter()
            .zip(&self.component_of)
            .filter(|&(_, &c)| c == id)
            .map(|(&p, _)| p)
            .collect()
    }

    /// `ab Q̄ cd`: same Q-component.
    pub fn connected(&self, ab: Pair, cd: Pair) -> bool {
        matches!((self.component_of(ab), self.component_of(cd)), (Some(x), Some(y)) if x == y)
    }

    /// Shortest Q-path, lexicographically least among shortest ones.
    pub fn q_path(&self, from: Pair, to: Pair) -> Result<Option<Vec<Pair>>> {
        let (Some(&s), Some(&t)) = (self.index.get(&from), self.index.get(&to)) else {
            return Err(Error::input(format!(
                "pair {from:?} or {to:?} is not a non-adjacent pair of the graph"
            )));
        };
        if self.component_of[s] != self.component_of[t] {
            return Ok(None);
        }
        let g = &self.base;
        let m = self.pairs.len();
        let mut dist = vec![usize::MAX; m];
        dist[t] = 0;
        let mut queue = VecDeque::from([t]);
        while let Some(x) = queue.pop_front() {
            for y in 0..m {
                if dist[y] == usize::MAX && q_adjacent(g, self.pairs[x], self.pairs[y]) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![self.pairs[s]];
        let mut cur = s;
        while cur != t {
            cur = (0..m)
                .find(|&y| {
                    dist[y] != usize::MAX
                        && dist[y] + 1 == dist[cur]
                        && q_adjacent(g, self.pairs[cur], self.pairs[y])
                })
                .ok_or_else(|| Error::internal("Q-path layers inconsistent"))?;
            path.push(self.pairs[cur]);
        }
        Ok(Some(path))
    }
}

/// `ab Q cd` iff `a E c` and `b E d` (reflexive `E`).
pub fn q_adjacent(g: &Graph, ab: Pair, cd: Pair) -> bool {
    g.adjacent(ab.0, cd.0) && g.adjacent(ab.1, cd.1)
}

/// `B(v, u)` with the stage at which each member enters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeveledSet {
    pub v: usize,
    pub u: usize,
    level: Vec<Option<usize>>,
}

impl LeveledSet {
    pub fn members(&self) -> Vec<usize> {
        (0..self.level.len())
            .filter(|&w| self.level[w].is_some())
            .collect()
    }

    pub fn contains(&self, w: usize) -> bool {
        self.level[w].is_some()
    }

    pub fn level(&self, w: usize) -> Option<usize> {
        self.level[w]
    }

    /// Members of `B_n(v, u)`.
    pub fn stage(&self, n: usize) -> Vec<usize> {
        (0..self.level.len())
            .filter(|&w| matches!(self.level[w], Some(l) if l <= n))
            .collect()
    }

    pub fn max_level(&self) -> usize {
        self.level.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Least fixpoint of `B_{n+1} = { w | ∃ z, z' ∈ B_n : z E w ∧ ¬ z' E w }`
/// starting from `B_0 = {v, u}`.
pub fn construct_b(g: &Graph, v: usize, u: usize) -> Result<LeveledSet> {
    let n = g.n();
    if v >= n || u >= n {
        return Err(Error::input(format!("vertex pair ({v}, {u}) outside 0..{n}")));
    }
    if g.adjacent(v, u) {
        return Err(Error::input(format!(
            "B(v, u) needs non-adjacent vertices, got ({v}, {u})"
        )));
    }
    let mut level = vec![None; n];
    level[v] = Some(0);
    level[u] = Some(0);
    let mut current: Vec<usize> = vec![v.min(u), v.max(u)];
    for stage in 1.. {
        let next: Vec<usize> = (0..n)
            .filter(|&w| {
                current.iter().any(|&z| g.adjacent(z, w)) && current.iter().any(|&z| !g.adjacent(z, w))
            })
            .collect();
        for &w in &next {
            level[w].get_or_insert(stage);
        }
        if next == current {
            break;
        }
        debug_assert!(current.iter().all(|w| next.contains(w)), "stages are nested");
        current = next;
    }
    Ok(LeveledSet { v, u, level })
}

/// `K(B)`: vertices adjacent (reflexively) to every member of `B`.
pub fn k_of(g: &Graph, b: &[usize]) -> Vec<usize> {
    (0..g.n())
        .filter(|&w| b.iter().all(|&x| g.adjacent(w, x)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuriedCertificate {
    pub b: Vec<usize>,
    pub k: Vec<usize>,
    pub r: Vec<usize>,
    pub witness_nonedge: Pair,
    pub witness_outside: usize,
}

impl BuriedCertificate {
    /// Recomputes `K` and `R` and re-checks every condition.
    pub fn validate(&self, g: &Graph) -> bool {
        let check = is_buried(g, &self.b);
        let Some(cert) = check.certificate else {
            return false;
        };
        cert.k == self.k
            && cert.r == self.r
            && self.b.contains(&self.witness_nonedge.0)
            && self.b.contains(&self.witness_nonedge.1)
            && !g.adjacent(self.witness_nonedge.0, self.witness_nonedge.1)
            && self.r.contains(&self.witness_outside)
    }
}

/// Outcome of checking a vertex set against the buried-subgraph conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuriedCheck {
    pub k: Vec<usize>,
    pub r: Vec<usize>,
    pub has_nonedge: bool,
    pub disjoint_k: bool,
    pub nonempty_r: bool,
    pub no_b_r_edges: bool,
    pub certificate: Option<BuriedCertificate>,
}

impl BuriedCheck {
    pub fn is_buried(&self) -> bool {
        self.certificate.is_some()
    }
}

pub fn is_buried(g: &Graph, b: &[usize]) -> BuriedCheck {
    let n = g.n();
    let set: BTreeSet<usize> = b.iter().copied().filter(|&x| x < n).collect();
    let b: Vec<usize> = set.iter().copied().collect();
    let k = k_of(g, &b);
    let r: Vec<usize> = (0..n).filter(|w| !set.contains(w) && !k.contains(w)).collect();
    let nonedge = b
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| !g.adjacent(x, y));
    let disjoint_k = k.iter().all(|w| !set.contains(w));
    let nonempty_r = !r.is_empty();
    let no_b_r_edges = b.iter().all(|&x| r.iter().all(|&y| !g.adjacent(x, y)));
    let certificate = match nonedge {
        Some(pair) if disjoint_k && nonempty_r && no_b_r_edges => Some(BuriedCertificate {
            b: b.clone(),
            k: k.clone(),
            r: r.clone(),
            witness_nonedge: pair,
            witness_outside: r[0],
        }),
        _ => None,
    };
    BuriedCheck {
        k,
        r,
        has_nonedge: nonedge.is_some(),
        disjoint_k,
        nonempty_r,
        no_b_r_edges,
        certificate,
    }
}

/// Scans non-adjacent pairs `(v, u)` in lexicographic order and returns the
/// first `B(v, u)` with a non-empty remainder.
pub(crate) fn find_buried_unchecked(g: &Graph) -> Result<Option<BuriedCertificate>> {
    let n = g.n();
    for v in 0..n {
        for u in v + 1..n {
            if g.adjacent(v, u) {
                continue;
            }
            let b = construct_b(g, v, u)?.members();
            let check = is_buried(g, &b);
            if !check.r.is_empty() {
                return check
                    .certificate
                    .map(Some)
                    .ok_or_else(|| Error::internal(format!("B({v}, {u}) has R ≠ ∅ but is not buried")));
            }
        }
    }
    Ok(None)
}

/// Buried subgraph of a connected interval graph, if one exists.
pub fn find_buried(g: &Graph) -> Result<Option<BuriedCertificate>> {
    require_interval(g)?;
    if !g.is_connected() {
        return Err(Error::input("find_buried needs a connected graph"));
    }
    find_buried_unchecked(g)
}

/// Two associated orders that disagree beyond duality, with `[x, y, v]`
/// such that `x < y` in the first, `y < x` in the second, and `v` sits on the
/// same side of both in either order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonUniqueWitness {
    pub order1: StrictPartialOrder,
    pub order2: StrictPartialOrder,
    pub triple: [usize; 3],
}

impl NonUniqueWitness {
    pub fn validate(&self, g: &Graph) -> bool {
        let [x, y, v] = self.triple;
        let (o1, o2) = (&self.order1, &self.order2);
        let in_range = [x, y, v].iter().all(|&w| w < g.n());
        in_range
            && o1.validate().is_ok()
            && o2.validate().is_ok()
            && g.is_associated(o1).unwrap_or(false)
            && g.is_associated(o2).unwrap_or(false)
            && o1.less(x, y)
            && o2.less(y, x)
            && o1.comparable(x, v)
            && o1.less(x, v) == o2.less(x, v)
            && *o2 != *o1
            && *o2 != o1.dual()
    }
}

/// Makes `B` convex around its least member, then dualizes inside `B`.
pub fn two_orders_from_buried(
    g: &Graph,
    cert: &BuriedCertificate,
    base: &StrictPartialOrder,
) -> Result<NonUniqueWitness> {
    if !g.is_associated(base)? {
        return Err(Error::input("base order is not associated to the graph"));
    }
    if !cert.validate(g) {
        return Err(Error::input("buried certificate does not validate"));
    }
    let n = g.n();
    let mut in_b = vec![false; n];
    for &x in &cert.b {
        in_b[x] = true;
    }
    let b0 = cert.b[0];
    let convex = StrictPartialOrder::from_fn(n, |x, y| match (in_b[x], in_b[y]) {
        (true, false) => base.less(b0, y),
        (false, true) => base.less(x, b0),
        _ => base.less(x, y),
    });
    let flipped = convex.dualized_within(&cert.b);
    for (name, o) in [("convexified", &convex), ("flipped", &flipped)] {
        o.validate()
            .map_err(|e| Error::internal(format!("{name} order is not a strict partial order: {e}")))?;
        if !g.is_associated(o)? {
            return Err(Error::internal(format!(
                "{name} order is not associated to the graph"
            )));
        }
    }
    let (x, y) = cert
        .b
        .iter()
        .flat_map(|&x| cert.b.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| convex.less(x, y))
        .ok_or_else(|| Error::internal("no comparable pair inside B"))?;
    let witness = NonUniqueWitness {
        order1: convex,
        order2: flipped,
        triple: [x, y, cert.witness_outside],
    };
    if !witness.validate(g) {
        return Err(Error::internal("buried-subgraph witness does not validate"));
    }
    Ok(witness)
}

/// Orients every pair of the component holding the least pair of `W`.
pub fn unique_order_from_wq(g: &Graph, wq: &WqGraph) -> Result<StrictPartialOrder> {
    if wq.component_count() != 2 {
        return Err(Error::input(format!(
            "(W, Q) has {} components; a unique order needs exactly 2",
            wq.component_count()
        )));
    }
    let pairs = wq.component(0);
    let o = StrictPartialOrder::from_pairs(g.n(), &pairs)
        .map_err(|e| Error::internal(format!("Q-component is not a strict partial order: {e}")))?;
    if !g.is_associated(&o)? {
        return Err(Error::internal(
            "Q-component order is not associated to the graph",
        ));
    }
    Ok(o)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessVerdict {
    pub unique: bool,
    pub order: Option<StrictPartialOrder>,
    pub witness: Option<NonUniqueWitness>,
    pub buried: Option<BuriedCertificate>,
    pub wq_components: usize,
}

impl UniquenessVerdict {
    /// Re-checks whichever certificates are present.
    pub fn validate(&self, g: &Graph) -> bool {
        let order_ok = match (&self.order, self.unique) {
            (Some(o), true) => o.validate().is_ok() && g.is_associated(o).unwrap_or(false),
            (None, false) => true,
            _ => false,
        };
        let witness_ok = match (&self.witness, self.unique) {
            (Some(w), false) => w.validate(g),
            (None, true) => true,
            _ => false,
        };
        let buried_ok = self.buried.as_ref().is_none_or(|c| c.validate(g));
        order_ok && witness_ok && buried_ok
    }
}

/// Decides whether an interval graph has exactly one associated order up
/// to duality, with a certificate either way.
pub fn decide_unique(g: &Graph) -> Result<UniquenessVerdict> {
    let rep = require_interval(g)?;
    let wq = WqGraph::build(g);
    let comps = g.components();

    let verdict = if comps.len() > 1 {
        decide_disconnected(g, &comps, &rep.to_order(), wq.component_count())?
    } else if g.is_complete() {
        UniquenessVerdict {
            unique: true,
            order: Some(StrictPartialOrder::antichain(g.n())),
            witness: None,
            buried: None,
            wq_components: wq.component_count(),
        }
    } else {
        let buried = find_buried_unchecked(g)?;
        let many = wq.component_count() > 2;
        if buried.is_some() != many {
            return Err(Error::internal(format!(
                "buried subgraph {} but (W, Q) has {} components",
                if buried.is_some() { "found" } else { "absent" },
                wq.component_count()
            )));
        }
        match buried {
            None => UniquenessVerdict {
                unique: true,
                order: Some(unique_order_from_wq(g, &wq)?),
                witness: None,
                buried: None,
                wq_components: wq.component_count(),
            },
            Some(cert) => UniquenessVerdict {
                unique: false,
                order: None,
                witness: Some(two_orders_from_buried(g, &cert, &rep.to_order())?),
                buried: Some(cert),
                wq_components: wq.component_count(),
            },
        }
    };
    if !verdict.validate(g) {
        return Err(Error::internal("uniqueness verdict does not re-validate"));
    }
    Ok(verdict)
}

/// Unique iff at most two components, each complete. `base` stacks the
/// components as disjoint blocks (as any interval representation does).
fn decide_disconnected(
    g: &Graph,
    comps: &[Vec<usize>],
    base: &StrictPartialOrder,
    wq_components: usize,
) -> Result<UniquenessVerdict> {
    // components by position in the stacking
    let mut stacked: Vec<&Vec<usize>> = comps.iter().collect();
    stacked.sort_by(|a, b| {
        if base.less(a[0], b[0]) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let complete = |c: &Vec<usize>| c.iter().all(|&x| c.iter().all(|&y| g.adjacent(x, y)));

    if comps.len() == 2 && comps.iter().all(complete) {
        let (lo, hi) = (stacked[0], stacked[1]);
        let order = StrictPartialOrder::from_fn(g.n(), |x, y| lo.contains(&x) && hi.contains(&y));
        return Ok(UniquenessVerdict {
            unique: true,
            order: Some(order),
            witness: None,
            buried: None,
            wq_components,
        });
    }

    let witness = if comps.len() >= 3 {
        // swap the two lowest blocks, keep the third above both
        let mut flip: Vec<usize> = stacked[0].iter().chain(stacked[1]).copied().collect();
        flip.sort_unstable();
        let order2 = base.dualized_within(&flip);
        NonUniqueWitness {
            order1: base.clone(),
            order2,
            triple: [stacked[0][0], stacked[1][0], stacked[2][0]],
        }
    } else {
        // two components, one of them not complete: reverse it internally
        let inner = comps
            .iter()
            .find(|c| !complete(c))
            .ok_or_else(|| Error::internal("expected a non-complete component"))?;
        let other = comps
            .iter()
            .find(|c| *c != inner)
            .ok_or_else(|| Error::internal("expected a second component"))?;
        let (x, y) = inner
            .iter()
            .flat_map(|&x| inner.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| base.less(x, y))
            .ok_or_else(|| Error::internal("non-complete component without comparable pair"))?;
        NonUniqueWitness {
            order1: base.clone(),
            order2: base.dualized_within(inner),
            triple: [x, y, other[0]],
        }
    };
    if !witness.validate(g) {
        return Err(Error::internal("disconnected-graph witness does not validate"));
    }
    Ok(UniquenessVerdict {
        unique: false,
        order: None,
        witness: Some(witness),
        buried: None,
        wq_components,
    })
}
