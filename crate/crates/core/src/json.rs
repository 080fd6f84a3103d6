//! Wire formats: graph JSON and edge-list text on the way in; representation,
//! obstruction, verdict, buried-subgraph and gadget JSON on the way out.
//!
//! Certificates name vertices by label when the graph carries one and by
//! index otherwise. Every emitted certificate can be decoded back against
//! its graph and re-validated.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadgets::GadgetOutput;
use crate::graph::{Graph, Path, StrictPartialOrder};
use crate::oracle::OrientationSet;
use crate::orderability::{is_buried, BuriedCertificate, NonUniqueWitness, UniquenessVerdict, WqGraph};
use crate::recognition::{AsteroidalTriple, Obstruction};
use crate::representation::{ClosedRepresentation, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, String>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g
                .labels()
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut labels = BTreeMap::new();
        for (k, v) in &self.labels {
            let idx: usize = k
                .parse()
                .map_err(|_| Error::input(format!("label key {k:?} is not a vertex index")))?;
            labels.insert(idx, v.clone());
        }
        Graph::from_edges(self.n, &edges)?.with_labels(labels)
    }
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let gj: GraphJson = serde_json::from_str(text).map_err(|e| Error::input(format!("graph JSON: {e}")))?;
    gj.to_graph()
}

/// First non-comment line is `n`, then one `u v` pair per line. `#` starts a
/// comment that runs to the end of the line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, first) = lines
        .next()
        .ok_or_else(|| Error::input("edge list is empty; expected the vertex count"))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::input(format!("line {lineno}: expected vertex count, got {first:?}")))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => edges.push((u, v)),
            _ => {
                return Err(Error::input(format!(
                    "line {lineno}: expected `u v`, got {line:?}"
                )))
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// A vertex named by index or by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Label(String),
}

pub fn vertex_ref(g: &Graph, v: usize) -> VertexRef {
    match g.labels().get(&v) {
        Some(l) => VertexRef::Label(l.clone()),
        None => VertexRef::Index(v),
    }
}

fn refs(g: &Graph, vs: &[usize]) -> Vec<VertexRef> {
    vs.iter().map(|&v| vertex_ref(g, v)).collect()
}

fn pair_refs(g: &Graph, ps: &[(usize, usize)]) -> Vec<[VertexRef; 2]> {
    ps.iter()
        .map(|&(u, v)| [vertex_ref(g, u), vertex_ref(g, v)])
        .collect()
}

pub fn resolve(g: &Graph, r: &VertexRef) -> Result<usize> {
    let v = match r {
        VertexRef::Index(i) => Some(*i),
        VertexRef::Label(l) => g
            .labels()
            .iter()
            .find(|(_, name)| *name == l)
            .map(|(&v, _)| v)
            .or_else(|| l.parse().ok()),
    };
    match v {
        Some(v) if v < g.n() => Ok(v),
        _ => Err(Error::input(format!("unknown vertex {r:?}"))),
    }
}

fn resolve_all(g: &Graph, rs: &[VertexRef]) -> Result<Vec<usize>> {
    rs.iter().map(|r| resolve(g, r)).collect()
}

fn resolve_order(g: &Graph, ps: &[[VertexRef; 2]]) -> Result<StrictPartialOrder> {
    let pairs = ps
        .iter()
        .map(|[u, v]| Ok((resolve(g, u)?, resolve(g, v)?)))
        .collect::<Result<Vec<_>>>()?;
    StrictPartialOrder::from_pairs(g.n(), &pairs)
}

/// `[num, den]`, or a bare integer on input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalJson {
    Integer(i64),
    Fraction([i64; 2]),
}

impl RationalJson {
    fn from_rational(r: Rational) -> Self {
        RationalJson::Fraction([*r.numer(), *r.denom()])
    }

    fn to_rational(self) -> Result<Rational> {
        match self {
            RationalJson::Integer(i) => Ok(Rational::from_integer(i)),
            RationalJson::Fraction([_, 0]) => Err(Error::input("rational with zero denominator")),
            RationalJson::Fraction([n, d]) => Ok(Rational::new(n, d)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub n: usize,
    pub intervals: Vec<[RationalJson; 2]>,
}

impl RepresentationJson {
    pub fn from_representation(r: &ClosedRepresentation) -> Self {
        RepresentationJson {
            n: r.n(),
            intervals: (0..r.n())
                .map(|v| {
                    [
                        RationalJson::from_rational(r.left(v)),
                        RationalJson::from_rational(r.right(v)),
                    ]
                })
                .collect(),
        }
    }

    pub fn to_representation(&self) -> Result<ClosedRepresentation> {
        if self.intervals.len() != self.n {
            return Err(Error::input(format!(
                "n = {} but {} intervals given",
                self.n,
                self.intervals.len()
            )));
        }
        let mut left = Vec::with_capacity(self.n);
        let mut right = Vec::with_capacity(self.n);
        for [l, r] in &self.intervals {
            left.push(l.to_rational()?);
            right.push(r.to_rational()?);
        }
        ClosedRepresentation::new(left, right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObstructionJson {
    ChordlessCycle {
        cycle: Vec<VertexRef>,
    },
    AsteroidalTriple {
        triple: Vec<VertexRef>,
        witness_paths: Vec<Vec<VertexRef>>,
    },
}

impl ObstructionJson {
    pub fn from_obstruction(g: &Graph, o: &Obstruction) -> Self {
        match o {
            Obstruction::ChordlessCycle(c) => ObstructionJson::ChordlessCycle { cycle: refs(g, c) },
            Obstruction::AsteroidalTriple(at) => ObstructionJson::AsteroidalTriple {
                triple: refs(g, &at.triple),
                witness_paths: at.witness_paths.iter().map(|p| refs(g, p.vertices())).collect(),
            },
        }
    }

    pub fn to_obstruction(&self, g: &Graph) -> Result<Obstruction> {
        match self {
            ObstructionJson::ChordlessCycle { cycle } => {
                Ok(Obstruction::ChordlessCycle(resolve_all(g, cycle)?))
            }
            ObstructionJson::AsteroidalTriple {
                triple,
                witness_paths,
            } => {
                let triple: [usize; 3] = resolve_all(g, triple)?
                    .try_into()
                    .map_err(|_| Error::input("asteroidal triple needs exactly 3 vertices"))?;
                let paths: Vec<Path> = witness_paths
                    .iter()
                    .map(|p| resolve_all(g, p).map(Path))
                    .collect::<Result<_>>()?;
                let witness_paths: [Path; 3] = paths
                    .try_into()
                    .map_err(|_| Error::input("asteroidal triple needs exactly 3 witness paths"))?;
                if witness_paths.iter().any(|p| p.vertices().is_empty()) {
                    return Err(Error::input("empty witness path"));
                }
                Ok(Obstruction::AsteroidalTriple(AsteroidalTriple {
                    triple,
                    witness_paths,
                }))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuriedJson {
    #[serde(rename = "B")]
    pub b: Vec<VertexRef>,
    #[serde(rename = "K")]
    pub k: Vec<VertexRef>,
    #[serde(rename = "R")]
    pub r: Vec<VertexRef>,
}

impl BuriedJson {
    pub fn from_certificate(g: &Graph, c: &BuriedCertificate) -> Self {
        BuriedJson {
            b: refs(g, &c.b),
            k: refs(g, &c.k),
            r: refs(g, &c.r),
        }
    }

    /// Rebuilds the certificate by re-running the buried check on `B` and
    /// insisting that the recomputed `K` and `R` match the claimed ones.
    pub fn to_certificate(&self, g: &Graph) -> Result<BuriedCertificate> {
        let mut b = resolve_all(g, &self.b)?;
        let mut k = resolve_all(g, &self.k)?;
        let mut r = resolve_all(g, &self.r)?;
        b.sort_unstable();
        k.sort_unstable();
        r.sort_unstable();
        let check = is_buried(g, &b);
        match check.certificate {
            Some(c) if c.k == k && c.r == r && c.b == b => Ok(c),
            _ => Err(Error::input("claimed buried subgraph does not check out")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub order1: Vec<[VertexRef; 2]>,
    pub order2: Vec<[VertexRef; 2]>,
    pub triple: Vec<VertexRef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub unique: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[VertexRef; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub buried: Option<BuriedJson>,
    pub wq_components: usize,
}

impl VerdictJson {
    pub fn from_verdict(g: &Graph, v: &UniquenessVerdict) -> Self {
        VerdictJson {
            unique: v.unique,
            order: v.order.as_ref().map(|o| pair_refs(g, &o.pairs())),
            witness: v.witness.as_ref().map(|w| WitnessJson {
                order1: pair_refs(g, &w.order1.pairs()),
                order2: pair_refs(g, &w.order2.pairs()),
                triple: refs(g, &w.triple),
            }),
            buried: v.buried.as_ref().map(|c| BuriedJson::from_certificate(g, c)),
            wq_components: v.wq_components,
        }
    }

    pub fn to_verdict(&self, g: &Graph) -> Result<UniquenessVerdict> {
        let order = self.order.as_ref().map(|o| resolve_order(g, o)).transpose()?;
        let witness = match &self.witness {
            Some(w) => Some(NonUniqueWitness {
                order1: resolve_order(g, &w.order1)?,
                order2: resolve_order(g, &w.order2)?,
                triple: resolve_all(g, &w.triple)?
                    .try_into()
                    .map_err(|_| Error::input("witness triple needs exactly 3 vertices"))?,
            }),
            None => None,
        };
        let buried = self.buried.as_ref().map(|b| b.to_certificate(g)).transpose()?;
        Ok(UniquenessVerdict {
            unique: self.unique,
            order,
            witness,
            buried,
            wq_components: self.wq_components,
        })
    }
}

/// Output of `buried`: a certificate, or none together with the Q-component
/// count that rules one out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuriedReportJson {
    pub buried: Option<BuriedJson>,
    pub wq_components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WqJson {
    pub pairs: usize,
    pub components: Vec<Vec<[VertexRef; 2]>>,
    pub wq_components: usize,
}

impl WqJson {
    pub fn from_wq(wq: &WqGraph) -> Self {
        let g = wq.base();
        WqJson {
            pairs: wq.pairs().len(),
            components: (0..wq.component_count())
                .map(|c| pair_refs(g, &wq.component(c)))
                .collect(),
            wq_components: wq.component_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrdersJson {
    pub count: usize,
    pub dual_classes: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<Vec<Vec<[VertexRef; 2]>>>,
}

impl OrdersJson {
    pub fn from_set(g: &Graph, s: &OrientationSet, list: bool) -> Self {
        OrdersJson {
            count: s.orders.len(),
            dual_classes: s.dual_classes,
            orders: list.then(|| s.orders.iter().map(|o| pair_refs(g, &o.pairs())).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetJson {
    pub graph: GraphJson,
    pub representation: RepresentationJson,
    #[serde(rename = "predicted_B")]
    pub predicted_b: Vec<VertexRef>,
    #[serde(rename = "predicted_K")]
    pub predicted_k: Vec<VertexRef>,
    #[serde(rename = "predicted_R")]
    pub predicted_r: Vec<VertexRef>,
}

impl GadgetJson {
    pub fn from_output(out: &GadgetOutput) -> Self {
        let g = &out.graph;
        GadgetJson {
            graph: GraphJson::from_graph(g),
            representation: RepresentationJson::from_representation(&out.representation),
            predicted_b: refs(g, &out.predicted_b),
            predicted_k: refs(g, &out.predicted_k),
            predicted_r: refs(g, &out.predicted_r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orderability::decide_unique;
    use crate::recognition::{recognize, Recognition};

    #[test]
    fn graph_json_round_trip_with_labels() {
        let text = r#"{"n": 4, "edges": [[0,1],[0,3],[1,2],[1,3],[2,3]],
                       "labels": {"0":"a","1":"b","2":"c","3":"d"}}"#;
        let g = parse_graph_json(text).unwrap();
        assert_eq!(g.label(2), "c");
        let back = GraphJson::from_graph(&g).to_graph().unwrap();
        assert_eq!(back, g);
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn graph_json_errors() {
        assert!(parse_graph_json("{").is_err());
        assert!(parse_graph_json(r#"{"n": 2, "edges": [[0,2]]}"#).is_err());
        assert!(parse_graph_json(r#"{"n": 2, "edges": [], "labels": {"x": "a"}}"#).is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# P3\n3\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n0 1 2\n").is_err());
        assert!(parse_edge_list("x\n").is_err());
        assert!(parse_edge_list("2\n0 0\n").is_err());
    }

    #[test]
    fn representation_json_accepts_shorthand() {
        let text = r#"{"n": 2, "intervals": [[0, [1, 2]], [[1, 3], 5]]}"#;
        let rj: RepresentationJson = serde_json::from_str(text).unwrap();
        let r = rj.to_representation().unwrap();
        assert_eq!(r.right(0), Rational::new(1, 2));
        let out = serde_json::to_string(&RepresentationJson::from_representation(&r)).unwrap();
        assert_eq!(out, r#"{"n":2,"intervals":[[[0,1],[1,2]],[[1,3],[5,1]]]}"#);
        let bad: RepresentationJson = serde_json::from_str(r#"{"n":1,"intervals":[[[1,0],2]]}"#).unwrap();
        assert!(bad.to_representation().is_err());
    }

    #[test]
    fn verdict_json_shape() {
        let g = parse_graph_json(
            r#"{"n": 4, "edges": [[0,1],[0,3],[1,2],[1,3],[2,3]],
                "labels": {"0":"a","1":"b","2":"c","3":"d"}}"#,
        )
        .unwrap();
        let v = decide_unique(&g).unwrap();
        let text = serde_json::to_string(&VerdictJson::from_verdict(&g, &v)).unwrap();
        assert_eq!(text, r#"{"unique":true,"order":[["a","c"]],"wq_components":2}"#);
        let back: VerdictJson = serde_json::from_str(&text).unwrap();
        assert!(back.to_verdict(&g).unwrap().validate(&g));
    }

    #[test]
    fn obstruction_json_round_trip() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]).unwrap();
        let Recognition::NotInterval(o) = recognize(&g).unwrap() else {
            panic!("expected an obstruction");
        };
        let j = ObstructionJson::from_obstruction(&g, &o);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with(r#"{"kind":"asteroidal_triple","triple":[3,4,5]"#));
        let back: ObstructionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_obstruction(&g).unwrap(), o);
    }
}
