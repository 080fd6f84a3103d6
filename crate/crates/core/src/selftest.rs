//! Self-test corpus: each check cross-validates independent routes over
//! exhaustive small graphs, seeded random families and the fixed fixtures.
//! Used by the `selftest` subcommand and by the acceptance test target.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::gadgets::{self, aca_gadget, random_connected_interval_graph, GadgetSpec};
use crate::graph::{Graph, StrictPartialOrder};
use crate::oracle::{enumerate_associated_orders, oracle_unique, DEFAULT_MAX_N};
use crate::orderability::{construct_b, decide_unique, find_buried, is_buried, WqGraph};
use crate::recognition::{recognize, Obstruction, Recognition};
use crate::representation::{is_interval_order, order_to_representation, ClosedRepresentation, Rational};

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Exhaustive enumeration covers every labelled graph up to this size.
    pub exhaustive_max_n: usize,
    /// Random connected interval graphs with 7 ≤ n ≤ 12.
    pub random_graphs: usize,
    /// Random gadget specifications, besides the three fixed ones.
    pub random_gadgets: usize,
    /// Trials per property suite.
    pub property_trials: usize,
    pub order_round_trips: usize,
    pub representation_round_trips: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 0x5eed,
            exhaustive_max_n: 6,
            random_graphs: 1000,
            random_gadgets: 50,
            property_trials: 10_000,
            order_round_trips: 1000,
            representation_round_trips: 10_000,
        }
    }
}

/// Outcome of one check: how many cases ran and what went wrong.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} cases, {} failures)",
            self.name,
            self.cases,
            self.failures.len()
        )?;
        for msg in self.failures.iter().filter(|m| !m.is_empty()).take(5) {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

/// All labelled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(n, &edges).expect("pairs are in range")
    })
}

/// Connected non-complete interval graphs: every one up to
/// `exhaustive_max_n` vertices, then `random_graphs` random ones with
/// 7 ≤ n ≤ 12.
pub fn equivalence_corpus(cfg: &SelftestConfig) -> Result<Vec<Graph>> {
    let mut corpus = Vec::new();
    for n in 3..=cfg.exhaustive_max_n {
        for g in all_graphs(n) {
            if g.is_connected() && !g.is_complete() && recognize(&g)?.is_interval() {
                corpus.push(g);
            }
        }
    }
    for i in 0..cfg.random_graphs {
        let n = 7 + i % 6;
        let (g, _) = random_connected_interval_graph(n, cfg.seed.wrapping_add(i as u64))?;
        corpus.push(g);
    }
    Ok(corpus)
}

/// Oracle uniqueness, absence of a buried subgraph and exactly two
/// Q-components agree on every corpus graph.
pub fn check_three_way(corpus: &[Graph]) -> Result<CheckReport> {
    let mut rep = CheckReport::new("three-way equivalence: oracle ⇔ no buried subgraph ⇔ two Q-components");
    for g in corpus {
        let oracle = oracle_unique(g, DEFAULT_MAX_N)?;
        let no_buried = find_buried(g)?.is_none();
        let two = WqGraph::build(g).component_count() == 2;
        rep.check(oracle == no_buried && no_buried == two, || {
            format!(
                "{:?}: oracle {oracle}, no buried {no_buried}, two components {two}",
                g.edges()
            )
        });
    }
    Ok(rep)
}

/// Every verdict re-validates and agrees with the oracle's classes.
pub fn check_certificates(corpus: &[Graph]) -> Result<CheckReport> {
    let mut rep = CheckReport::new("certificate validity of every uniqueness verdict");
    for g in corpus {
        let v = decide_unique(g)?;
        let mut ok = v.validate(g);
        if let Some(o) = &v.order {
            let set = enumerate_associated_orders(g, DEFAULT_MAX_N)?;
            ok &= set.dual_classes == 1 && set.contains_class_of(o) && g.is_associated(o)?;
        }
        if let Some(w) = &v.witness {
            ok &= g.is_associated(&w.order1)? && g.is_associated(&w.order2)?;
            ok &= w.order2 != w.order1 && w.order2 != w.order1.dual();
        }
        if let Some(c) = &v.buried {
            ok &= is_buried(g, &c.b).is_buried();
        }
        ok &= v.unique == v.order.is_some() && v.unique != v.witness.is_some();
        rep.check(ok, || format!("{:?}: verdict {v:?}", g.edges()));
    }
    Ok(rep)
}

fn random_injective(rng: &mut impl Rng, len: usize) -> Vec<u64> {
    let mut pool: Vec<u64> = (0..(4 * len as u64).max(8)).collect();
    pool.shuffle(rng);
    pool.truncate(len);
    pool
}

/// The coded gadget's predicted buried subgraph is exactly `B(a, b)`.
pub fn check_gadgets(cfg: &SelftestConfig) -> Result<CheckReport> {
    let mut rep = CheckReport::new("gadget reproduction: B(a,b), K, R, non-uniqueness, recognition");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9ad9e7);
    let mut specs = vec![
        GadgetSpec::new(vec![0, 1, 2], 3)?,
        GadgetSpec::new(vec![2, 0, 1], 3)?,
        GadgetSpec::new(vec![5], 1)?,
    ];
    for _ in 0..cfg.random_gadgets {
        let len = rng.random_range(1..=12);
        specs.push(GadgetSpec::new(random_injective(&mut rng, len), len)?);
    }
    for spec in &specs {
        let out = aca_gadget(spec)?;
        let g = &out.graph;
        let b = construct_b(g, gadgets::A, gadgets::B)?.members();
        let check = is_buried(g, &out.predicted_b);
        let verdict = decide_unique(g)?;
        let recognized = recognize(g)?.is_interval();
        let ok = b == out.predicted_b
            && check.is_buried()
            && check.k == out.predicted_k
            && check.r == out.predicted_r
            && out.predicted_r == vec![gadgets::R]
            && !verdict.unique
            && verdict.wq_components >= 4
            && recognized
            && g.is_connected()
            && out.representation.verify(g)?;
        rep.check(ok, || {
            format!(
                "f = {:?}, s = {}: B(a,b) = {b:?}, predicted {:?}, K {:?}/{:?}, R {:?}, unique {}, recognized {recognized}",
                spec.f, spec.stages, out.predicted_b, check.k, out.predicted_k, check.r, verdict.unique
            )
        });
    }
    Ok(rep)
}

pub fn diamond() -> Graph {
    let labels = ["a", "b", "c", "d"]
        .iter()
        .enumerate()
        .map(|(i, l)| (i, l.to_string()))
        .collect();
    Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)])
        .and_then(|g| g.with_labels(labels))
        .expect("fixture is well formed")
}

/// Triangle `a, b, c` with pendants `x–a`, `y–b`, `z–c`.
pub fn net() -> Graph {
    let labels = ["a", "b", "c", "x", "y", "z"]
        .iter()
        .enumerate()
        .map(|(i, l)| (i, l.to_string()))
        .collect();
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)])
        .and_then(|g| g.with_labels(labels))
        .expect("fixture is well formed")
}

pub fn check_fixtures() -> Result<CheckReport> {
    let mut rep = CheckReport::new("named fixtures");
    let diamond = diamond();
    let v = decide_unique(&diamond)?;
    let order_ok = v.order.as_ref().map(|o| o.pairs()) == Some(vec![(0, 2)]);
    rep.check(
        recognize(&diamond)?.is_interval() && v.unique && order_ok && v.wq_components == 2,
        || format!("diamond: {v:?}"),
    );

    let net = net();
    let r = recognize(&net)?;
    let at_ok =
        matches!(&r, Recognition::NotInterval(Obstruction::AsteroidalTriple(at)) if at.triple == [3, 4, 5]);
    rep.check(at_ok, || format!("net: {r:?}"));

    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let r = recognize(&c4)?;
    rep.check(
        r == Recognition::NotInterval(Obstruction::ChordlessCycle(vec![0, 1, 2, 3])),
        || format!("C4: {r:?}"),
    );

    let star3 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?;
    let v = decide_unique(&star3)?;
    let b_ok = v.buried.as_ref().map(|c| c.b.clone()) == Some(vec![1, 2]);
    rep.check(!v.unique && b_ok, || format!("STAR3: {v:?}"));

    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)])?;
    let v = decide_unique(&two_k2)?;
    rep.check(v.unique, || format!("2K2: {v:?}"));

    let empty3 = Graph::empty(3);
    let v = decide_unique(&empty3)?;
    rep.check(!v.unique, || format!("empty graph on 3: {v:?}"));
    Ok(rep)
}

/// Random walk of `steps` steps from a random vertex with a neighbour.
fn random_walk(rng: &mut impl Rng, g: &Graph, steps: usize) -> Vec<usize> {
    let mut cur = rng.random_range(0..g.n());
    let mut walk = vec![cur];
    for _ in 0..steps {
        let nbrs: Vec<usize> = g.neighbors(cur).collect();
        if nbrs.is_empty() {
            break;
        }
        cur = nbrs[rng.random_range(0..nbrs.len())];
        walk.push(cur);
    }
    walk
}

fn random_graph_with_rep(rng: &mut impl Rng, lo: usize, hi: usize) -> (Graph, ClosedRepresentation) {
    let n = rng.random_range(lo..=hi);
    gadgets::random_interval_graph(n, rng.random()).expect("n ≥ 1")
}

/// Some vertex of a path meets every interval that lies neither wholly
/// before its start nor wholly after its end.
pub fn check_path_meets_between(cfg: &SelftestConfig) -> CheckReport {
    let mut rep = CheckReport::new("path meets every interval between its ends");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5b9a7);
    while rep.cases < cfg.property_trials {
        let (g, r) = random_graph_with_rep(&mut rng, 2, 12);
        let steps = rng.random_range(0..8);
        let path = random_walk(&mut rng, &g, steps);
        let (v0, vn) = (path[0], path[path.len() - 1]);
        let w = rng.random_range(0..g.n());
        if r.precedes(w, v0) || r.precedes(vn, w) {
            continue;
        }
        rep.check(path.iter().any(|&v| g.adjacent(v, w)), || {
            format!("{:?}: path {path:?}, w = {w}", g.edges())
        });
    }
    rep
}

/// Along a minimal path running left to right, right endpoints increase
/// (except at the last step) and left endpoints increase (except at the first).
/// Intervals wholly before the start touch only the second vertex; wholly
/// after the end, only the penultimate one.
pub fn check_minimal_path_shape(cfg: &SelftestConfig) -> CheckReport {
    let mut rep = CheckReport::new("minimal paths: monotone endpoints and outside contacts");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x3a1d);
    while rep.cases < cfg.property_trials {
        let (g, r) = random_graph_with_rep(&mut rng, 3, 12);
        let steps = rng.random_range(2..12);
        let walk = random_walk(&mut rng, &g, steps);
        let mut p = g.refine_to_minimal(&walk).expect("walk is a path").0;
        let (first, last) = (p[0], p[p.len() - 1]);
        if g.adjacent(first, last) {
            continue;
        }
        if r.precedes(last, first) {
            p.reverse();
        }
        let n = p.len() - 1;
        let mut ok = (0..n.saturating_sub(1)).all(|i| r.right(p[i]) < r.right(p[i + 1]));
        ok &= (1..n).all(|j| r.left(p[j]) < r.left(p[j + 1]));
        for v in 0..g.n() {
            if r.precedes(v, p[0]) {
                ok &= (0..=n).filter(|&i| i != 1).all(|i| !g.adjacent(p[i], v));
            }
            if r.precedes(p[n], v) {
                ok &= (0..=n).filter(|&i| i + 1 != n).all(|i| !g.adjacent(p[i], v));
            }
        }
        rep.check(ok, || format!("{:?}: minimal path {p:?}", g.edges()));
    }
    rep
}

fn is_subsequence(sub: &[usize], full: &[usize]) -> bool {
    let mut it = full.iter();
    sub.iter().all(|x| it.any(|y| y == x))
}

/// Refinement yields a minimal path with the same ends that is a
/// subsequence of the input. Runs on arbitrary graphs.
pub fn check_refine(cfg: &SelftestConfig) -> CheckReport {
    let mut rep = CheckReport::new("path refinement: minimal, same ends, subsequence");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7ef1);
    while rep.cases < cfg.property_trials {
        let n = rng.random_range(2..=10);
        let density = rng.random_range(0.1..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("edges in range");
        let steps = rng.random_range(0..15);
        let walk = random_walk(&mut rng, &g, steps);
        let p = g.refine_to_minimal(&walk).expect("walk is a path").0;
        let ok = g.is_minimal_path(&p).unwrap_or(false)
            && p[0] == walk[0]
            && p[p.len() - 1] == walk[walk.len() - 1]
            && is_subsequence(&p, &walk);
        rep.check(ok, || format!("{:?}: walk {walk:?} refined to {p:?}", g.edges()));
    }
    rep
}

/// Every associated order orients each Q-component uniformly, and no
/// component holds both `ab` and `ba`.
pub fn check_q_transport(cfg: &SelftestConfig) -> Result<CheckReport> {
    let mut rep = CheckReport::new("Q-components transport orientation in every associated order");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x0c0c);
    while rep.cases < cfg.property_trials {
        let (g, _) = random_graph_with_rep(&mut rng, 2, 7);
        let wq = WqGraph::build(&g);
        let set = enumerate_associated_orders(&g, DEFAULT_MAX_N)?;
        let mut ok = !set.orders.is_empty();
        for c in 0..wq.component_count() {
            let members = wq.component(c);
            ok &= members.iter().all(|&(a, b)| !members.contains(&(b, a)));
            for o in &set.orders {
                let forward = members.iter().filter(|&&(a, b)| o.less(a, b)).count();
                ok &= forward == 0 || forward == members.len();
            }
        }
        rep.check(ok, || format!("{:?}", g.edges()));
    }
    Ok(rep)
}

/// Shared setup for the two `B(v, u)` properties: a connected interval graph
/// with distinguishing representation and each pair `F(v) < F(u)`.
fn for_each_leveled_pair(
    rng: &mut impl Rng,
    mut f: impl FnMut(
        &Graph,
        &ClosedRepresentation,
        &WqGraph,
        usize,
        usize,
        &crate::orderability::LeveledSet,
    ) -> bool,
) -> Result<bool> {
    let n = rng.random_range(3..=10);
    let (g, r) = random_connected_interval_graph(n, rng.random())?;
    let wq = WqGraph::build(&g);
    let mut ok = true;
    for v in 0..n {
        for u in 0..n {
            if r.precedes(v, u) {
                let b = construct_b(&g, v, u)?;
                ok &= f(&g, &r, &wq, v, u, &b);
            }
        }
    }
    Ok(ok)
}

/// Levels in `B(v, u)` grow with the left endpoint beyond `u` and with
/// decreasing right endpoint before `v`.
pub fn check_levels(cfg: &SelftestConfig) -> Result<CheckReport> {
    let mut rep = CheckReport::new("B(v,u) levels are monotone in the endpoints");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x1e7e1);
    while rep.cases < cfg.property_trials {
        let ok = for_each_leveled_pair(&mut rng, |_, r, _, v, u, b| {
            let members = b.members();
            let mut ok = true;
            for &x in &members {
                for &y in &members {
                    let (ex, ey) = (b.level(x), b.level(y));
                    if r.precedes(u, x) && r.left(x) <= r.left(y) {
                        ok &= ex <= ey;
                    }
                    if r.precedes(x, v) && r.right(y) <= r.right(x) {
                        ok &= ex <= ey;
                    }
                }
            }
            // stages are nested
            ok &= (0..b.max_level()).all(|s| {
                let (a, c) = (b.stage(s), b.stage(s + 1));
                a.iter().all(|w| c.contains(w))
            });
            ok
        })?;
        rep.check(ok, || "level monotonicity violated".to_string());
    }
    Ok(rep)
}

/// `vu` reaches `xy` in `(W, Q)` whenever `x, y ∈ B(v, u)` with
/// `right(x) ≤ right(v)` and `left(u) ≤ left(y)`.
pub fn check_q_paths_in_b(cfg: &SelftestConfig) -> Result<CheckReport> {
    let mut rep = CheckReport::new("B(v,u) members on the outer sides are Q-reachable from vu");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xca33);
    let mut sampled = 0usize;
    while rep.cases < cfg.property_trials {
        let ok = for_each_leveled_pair(&mut rng, |_, r, wq, v, u, b| {
            let members = b.members();
            let mut ok = true;
            for &x in &members {
                for &y in &members {
                    if r.right(x) <= r.right(v) && r.left(u) <= r.left(y) {
                        ok &= wq.connected((v, u), (x, y));
                        // occasionally materialize the path itself
                        if sampled.is_multiple_of(97) {
                            ok &=
                                matches!(wq.q_path((v, u), (x, y)), Ok(Some(p)) if p.last() == Some(&(x, y)));
                        }
                        sampled += 1;
                    }
                }
            }
            ok
        })?;
        rep.check(ok, || "Q-path missing".to_string());
    }
    Ok(rep)
}

/// Removing all universal vertices leaves the uniqueness verdict unchanged.
pub fn check_universal_removal(cfg: &SelftestConfig) -> Result<CheckReport> {
    let mut rep = CheckReport::new("removing universal vertices keeps the verdict");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x0417);
    while rep.cases < cfg.property_trials {
        let (_, base) = random_graph_with_rep(&mut rng, 1, 9);
        // add up to two intervals spanning everything
        let extra = rng.random_range(0..=2);
        let mut left: Vec<Rational> = (0..base.n()).map(|v| base.left(v)).collect();
        let mut right: Vec<Rational> = (0..base.n()).map(|v| base.right(v)).collect();
        for _ in 0..extra {
            left.push(Rational::from_integer(-1));
            right.push(Rational::from_integer(4 * base.n() as i64));
        }
        let r = ClosedRepresentation::new(left, right).expect("ordered");
        let g = r.induced_graph();
        let universal = g.universal_vertices();
        let rest: Vec<usize> = (0..g.n()).filter(|v| !universal.contains(v)).collect();
        let full = decide_unique(&g)?.unique;
        let reduced = rest.is_empty() || decide_unique(&g.induced(&rest))?.unique;
        rep.check(full == reduced, || {
            format!("{:?}: {full} vs {reduced}", g.edges())
        });
    }
    Ok(rep)
}

fn random_rational_rep(rng: &mut impl Rng, n: usize) -> ClosedRepresentation {
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for _ in 0..n {
        let den = rng.random_range(1..=4);
        let a = Rational::new(rng.random_range(-8..8), den);
        let b = Rational::new(rng.random_range(-8..8), rng.random_range(1..=4));
        left.push(a.min(b));
        right.push(a.max(b));
    }
    ClosedRepresentation::new(left, right).expect("ordered")
}

/// Brute-force scan over all 4-tuples.
pub fn has_two_plus_two_brute(o: &StrictPartialOrder) -> bool {
    let n = o.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if o.less(a, b)
                        && o.less(c, d)
                        && !o.comparable(a, c)
                        && !o.comparable(a, d)
                        && !o.comparable(b, c)
                        && !o.comparable(b, d)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn random_order(rng: &mut impl Rng, n: usize) -> StrictPartialOrder {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = rng.random_range(0.1..0.6);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    StrictPartialOrder::closure_of(n, &pairs).expect("acyclic by construction")
}

pub fn check_round_trips(cfg: &SelftestConfig) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7277);

    let mut orders = CheckReport::new("interval order -> representation -> order is the identity");
    while orders.cases < cfg.order_round_trips {
        let n = rng.random_range(1..=10);
        let o = random_rational_rep(&mut rng, n).to_order();
        let back = order_to_representation(&o)?.to_order();
        orders.check(back == o, || {
            format!("{:?} came back as {:?}", o.pairs(), back.pairs())
        });
    }

    let mut reps =
        CheckReport::new("incomparability graph of a representation's order is its intersection graph");
    while reps.cases < cfg.representation_round_trips {
        let n = rng.random_range(1..=10);
        let r = random_rational_rep(&mut rng, n);
        let ok = r.to_order().incomparability_graph() == r.induced_graph() && r.verify(&r.induced_graph())?;
        let norm = r.normalize_distinguishing();
        let norm_ok = norm.is_distinguishing() && norm.induced_graph() == r.induced_graph();
        reps.check(ok && norm_ok, || format!("{r:?}"));
    }

    let mut two_two = CheckReport::new("interval-order test matches the brute-force 2+2 scan");
    while two_two.cases < cfg.property_trials {
        let n = rng.random_range(1..=8);
        let o = random_order(&mut rng, n);
        let fast = is_interval_order(&o);
        let brute = !has_two_plus_two_brute(&o);
        two_two.check(fast == brute, || {
            format!("{:?}: fast {fast}, brute {brute}", o.pairs())
        });
    }
    Ok(vec![orders, reps, two_two])
}

/// Every acceptance-level check, in order.
pub fn run_all(cfg: &SelftestConfig) -> Result<Vec<CheckReport>> {
    let corpus = equivalence_corpus(cfg)?;
    let mut out = vec![
        check_three_way(&corpus)?,
        check_certificates(&corpus)?,
        check_gadgets(cfg)?,
        check_fixtures()?,
        check_path_meets_between(cfg),
        check_minimal_path_shape(cfg),
        check_refine(cfg),
        check_q_transport(cfg)?,
        check_levels(cfg)?,
        check_q_paths_in_b(cfg)?,
        check_universal_removal(cfg)?,
    ];
    out.extend(check_round_trips(cfg)?);
    Ok(out)
}
