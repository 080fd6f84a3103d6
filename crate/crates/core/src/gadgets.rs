//! Graph families for testing.
//!
//! The coded gadget turns a finite injective sequence `f` into a connected
//! interval graph on `a, b, k, r, x_0, y_0, x_1, y_1, …` whose buried
//! subgraph `B(a, b)` records which indices are "true" for `f`: index `i` is
//! true at stage `s` when `f(k) > f(i)` for every `i < k < s`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::representation::{ClosedRepresentation, Rational};

pub const A: usize = 0;
pub const B: usize = 1;
pub const K: usize = 2;
pub const R: usize = 3;

pub fn x(i: usize) -> usize {
    4 + 2 * i
}

pub fn y(i: usize) -> usize {
    5 + 2 * i
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSpec {
    pub f: Vec<u64>,
    pub stages: usize,
}

impl GadgetSpec {
    pub fn new(f: Vec<u64>, stages: usize) -> Result<Self> {
        let spec = GadgetSpec { f, stages };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        check_injective(&self.f)?;
        if self.f.len() < self.stages {
            return Err(Error::input(format!(
                "{} stages need at least that many values of f, got {}",
                self.stages,
                self.f.len()
            )));
        }
        Ok(())
    }
}

fn check_injective(f: &[u64]) -> Result<()> {
    let mut seen = BTreeSet::new();
    match f.iter().find(|v| !seen.insert(**v)) {
        Some(v) => Err(Error::input(format!("f is not injective: {v} repeats"))),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetOutput {
    pub graph: Graph,
    pub representation: ClosedRepresentation,
    pub predicted_b: Vec<usize>,
    pub predicted_k: Vec<usize>,
    pub predicted_r: Vec<usize>,
}

/// Indices `i < s` with `f(k) > f(i)` for all `i < k < s`.
pub fn true_stages(f: &[u64], s: usize) -> Result<Vec<usize>> {
    check_injective(f)?;
    if s > f.len() {
        return Err(Error::input(format!(
            "stage {s} exceeds the {} known values of f",
            f.len()
        )));
    }
    Ok((0..s).filter(|&i| (i + 1..s).all(|k| f[k] > f[i])).collect())
}

fn big(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn aca_gadget(spec: &GadgetSpec) -> Result<GadgetOutput> {
    spec.validate()?;
    let s = spec.stages;
    let n = 4 + 2 * s;
    let mut edges = vec![(K, A), (K, B), (K, R)];

    // stage 0: r < k.left < r.right < a < b.left < b.right < k.right
    let mut left: Vec<BigRational> = vec![big(0); n];
    let mut right: Vec<BigRational> = vec![big(0); n];
    (left[R], left[K], right[R]) = (big(0), big(1), big(2));
    (left[A], right[A]) = (big(3), big(4));
    (left[B], right[B]) = (big(5), big(6));
    right[K] = big(7);

    for t in 0..s {
        let truth: BTreeSet<usize> = true_stages(&spec.f, t + 1)?.into_iter().collect();
        let (xt, yt) = (x(t), y(t));
        edges.extend([(A, xt), (xt, B), (B, yt), (xt, K), (yt, K)]);
        for i in 0..t {
            edges.extend([(xt, x(i)), (yt, y(i))]);
        }
        for i in 0..=t {
            edges.push((xt, y(i)));
            if truth.contains(&i) && i != t {
                edges.push((yt, x(i)));
            }
        }

        // y_t.left and x_t.right go strictly between every earlier y-left,
        // every false x-right and b.left below, and every true x-right and
        // b.right above
        let mut lo = left[B].clone();
        let mut hi = right[B].clone();
        for i in 0..t {
            lo = lo.max(left[y(i)].clone());
            if truth.contains(&i) {
                hi = hi.min(right[x(i)].clone());
            } else {
                lo = lo.max(right[x(i)].clone());
            }
        }
        if lo >= hi {
            return Err(Error::internal(format!("no room for stage {t} endpoints")));
        }
        let third = (hi.clone() - lo.clone()) / big(3);
        left[xt] = left[A].clone();
        right[yt] = right[B].clone();
        left[yt] = lo.clone() + third.clone();
        right[xt] = lo + third.clone() + third;
    }

    let labels: BTreeMap<usize, String> = (0..n).map(|v| (v, role_label(v))).collect();
    let graph = Graph::from_edges(n, &edges)?.with_labels(labels)?;
    let representation = compress(&left, &right)?;
    if !representation.verify(&graph)? {
        return Err(Error::internal(
            "staged gadget representation does not match the graph",
        ));
    }

    let truth: BTreeSet<usize> = true_stages(&spec.f, s)?.into_iter().collect();
    let mut predicted_b = vec![A, B];
    let mut predicted_k = vec![K];
    for i in 0..s {
        predicted_b.push(y(i));
        if truth.contains(&i) {
            predicted_k.push(x(i));
        } else {
            predicted_b.push(x(i));
        }
    }
    predicted_b.sort_unstable();
    predicted_k.sort_unstable();
    Ok(GadgetOutput {
        graph,
        representation,
        predicted_b,
        predicted_k,
        predicted_r: vec![R],
    })
}

fn role_label(v: usize) -> String {
    match v {
        A => "a".into(),
        B => "b".into(),
        K => "k".into(),
        R => "r".into(),
        _ if v.is_multiple_of(2) => format!("x{}", (v - 4) / 2),
        _ => format!("y{}", (v - 5) / 2),
    }
}

/// Maps endpoint values to their rank among the distinct values, so the
/// output carries small integers and exactly the same comparisons.
fn compress(left: &[BigRational], right: &[BigRational]) -> Result<ClosedRepresentation> {
    let mut values: Vec<&BigRational> = left.iter().chain(right).collect();
    values.sort();
    values.dedup();
    let rank = |v: &BigRational| {
        let i = values.binary_search(&v).expect("value was collected");
        Rational::from_integer(i as i64)
    };
    ClosedRepresentation::new(left.iter().map(rank).collect(), right.iter().map(rank).collect())
}

/// `n` random intervals with endpoints on the grid `0..2n`, normalized to
/// distinguishing form. Deterministic in `seed`.
pub fn random_interval_graph(n: usize, seed: u64) -> Result<(Graph, ClosedRepresentation)> {
    if n == 0 {
        return Err(Error::input("random_interval_graph needs n ≥ 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rep = random_representation(&mut rng, n).normalize_distinguishing();
    Ok((rep.induced_graph(), rep))
}

/// Redraws until the graph is connected and not complete. Needs `n ≥ 3`.
pub fn random_connected_interval_graph(n: usize, seed: u64) -> Result<(Graph, ClosedRepresentation)> {
    if n < 3 {
        return Err(Error::input(
            "a connected non-complete interval graph needs n ≥ 3",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rep = random_representation(&mut rng, n).normalize_distinguishing();
        let g = rep.induced_graph();
        if g.is_connected() && !g.is_complete() {
            return Ok((g, rep));
        }
    }
}

pub(crate) fn random_representation(rng: &mut impl Rng, n: usize) -> ClosedRepresentation {
    let grid = 2 * n as i64;
    let intervals: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let p = rng.random_range(0..grid);
            let q = rng.random_range(0..grid);
            (p.min(q), p.max(q))
        })
        .collect();
    ClosedRepresentation::from_ints(&intervals).expect("endpoints are ordered")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn true_stages_examples() {
        assert_eq!(true_stages(&[0, 1, 2], 3).unwrap(), vec![0, 1, 2]);
        assert_eq!(true_stages(&[2, 0, 1], 3).unwrap(), vec![1, 2]);
        assert_eq!(true_stages(&[9, 3, 5], 1).unwrap(), vec![0]);
        assert!(true_stages(&[1, 1], 2).is_err());
        assert!(true_stages(&[1, 2], 3).is_err());
    }

    #[test]
    fn gadget_examples() {
        let g = aca_gadget(&GadgetSpec::new(vec![0, 1, 2], 3).unwrap()).unwrap();
        assert_eq!(g.predicted_b, vec![A, B, y(0), y(1), y(2)]);
        assert_eq!(g.predicted_k, vec![K, x(0), x(1), x(2)]);
        assert_eq!(g.predicted_r, vec![R]);

        let g = aca_gadget(&GadgetSpec::new(vec![2, 0, 1], 3).unwrap()).unwrap();
        assert!(g.predicted_b.contains(&x(0)));
        assert_eq!(g.predicted_k, vec![K, x(1), x(2)]);

        let g = aca_gadget(&GadgetSpec::new(vec![5], 1).unwrap()).unwrap();
        assert_eq!(g.graph.n(), 6);
        assert_eq!(g.predicted_b, vec![A, B, y(0)]);
        assert_eq!(g.graph.label(x(0)), "x0");
        assert!(g.graph.is_connected());
    }

    #[test]
    fn gadget_adjacency_clause_d() {
        // f = [2, 0, 1]: index 0 turns false once f(1) = 0 is seen
        let g = aca_gadget(&GadgetSpec::new(vec![2, 0, 1], 3).unwrap())
            .unwrap()
            .graph;
        assert!(g.has_edge(y(0), x(0)));
        assert!(!g.has_edge(y(1), x(0)));
        assert!(!g.has_edge(y(2), x(0)));
        assert!(g.has_edge(y(2), x(1)));
    }

    #[test]
    fn gadget_rejects_bad_specs() {
        assert!(GadgetSpec::new(vec![1, 1], 2).is_err());
        assert!(GadgetSpec::new(vec![1], 2).is_err());
        assert!(aca_gadget(&GadgetSpec {
            f: vec![3, 3],
            stages: 1
        })
        .is_err());
    }

    #[test]
    fn random_graph_is_deterministic_and_valid() {
        let (g1, r1) = random_interval_graph(5, 42).unwrap();
        let (g2, r2) = random_interval_graph(5, 42).unwrap();
        assert_eq!((g1.clone(), r1.clone()), (g2, r2));
        assert!(r1.verify(&g1).unwrap());
        assert!(r1.is_distinguishing());
        let (g, r) = random_interval_graph(1, 7).unwrap();
        assert_eq!(g.n(), 1);
        assert!(r.verify(&g).unwrap());
        assert!(random_interval_graph(0, 1).is_err());
    }
}
