//! Command-line front end. `run` is pure: it takes the parsed configuration
//! and the input bytes and returns the exit code with both output streams.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict with certificate,
//! 2 input error, 3 internal inconsistency.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::gadgets::{aca_gadget, GadgetSpec};
use crate::graph::Graph;
use crate::json::{
    parse_edge_list, parse_graph_json, BuriedJson, BuriedReportJson, GadgetJson, ObstructionJson, OrdersJson,
    RepresentationJson, VerdictJson, WqJson,
};
use crate::oracle::{enumerate_associated_orders, DEFAULT_MAX_N};
use crate::orderability::{decide_unique, find_buried, WqGraph};
use crate::recognition::{recognize, Obstruction, Recognition};
use crate::representation::ClosedRepresentation;
use crate::selftest::{run_all, SelftestConfig};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const MAX_ORACLE_N: usize = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    #[default]
    Json,
    Edgelist,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Decide whether the graph is an interval graph.
    Recognize,
    /// Decide whether the graph has a unique associated order up to duality.
    Decide,
    /// Search for a buried subgraph.
    Buried,
    /// Report the components of the pair graph.
    Wq,
    /// Count (or list) the associated orders by exhaustive search.
    Orders {
        #[arg(long)]
        enumerate: bool,
    },
    /// Build the coded gadget graph for a finite injective sequence.
    Gadget {
        #[arg(long, value_delimiter = ',', required = true)]
        f: Vec<u64>,
        /// Number of stages; defaults to the length of `f`.
        #[arg(long)]
        stages: Option<usize>,
    },
    /// Run the full cross-checking corpus.
    Selftest,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "intgraph",
    version,
    about = "Interval graph recognition and unique orderability"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Input file; stdin when absent.
    #[arg(global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Json, global = true)]
    pub format: InputFormat,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(
        long,
        default_value_t = DEFAULT_MAX_N,
        value_parser = parse_max_n,
        global = true
    )]
    pub max_n: usize,
}

fn parse_max_n(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if (1..=MAX_ORACLE_N).contains(&v) => Ok(v),
        Ok(_) => Err(format!("must be between 1 and {MAX_ORACLE_N}")),
        Err(e) => Err(e.to_string()),
    }
}

impl CliConfig {
    pub fn new(command: Command) -> Self {
        CliConfig {
            command,
            input: None,
            format: InputFormat::Json,
            json: false,
            seed: None,
            max_n: DEFAULT_MAX_N,
        }
    }

    pub fn needs_input(&self) -> bool {
        !matches!(self.command, Command::Gadget { .. } | Command::Selftest)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::Input(_) | Error::OracleBound { .. } => EXIT_INPUT,
            Error::Internal(_) => EXIT_INTERNAL,
            Error::NotInterval(_) => EXIT_NEGATIVE,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn parse_input(format: InputFormat, input: &[u8]) -> crate::Result<Graph> {
    let text = std::str::from_utf8(input).map_err(|e| Error::Input(format!("input is not UTF-8: {e}")))?;
    match format {
        InputFormat::Json => parse_graph_json(text),
        InputFormat::Edgelist => parse_edge_list(text),
    }
}

pub fn run(config: &CliConfig, input: &[u8]) -> Outcome {
    if config.max_n > MAX_ORACLE_N {
        return Outcome::from_error(&Error::Input(format!("--max-n must be at most {MAX_ORACLE_N}")));
    }
    match dispatch(config, input) {
        Ok(o) => o,
        Err(e) => Outcome::from_error(&e),
    }
}

fn json_line<T: Serialize>(v: &T) -> crate::Result<String> {
    let mut s = serde_json::to_string(v).map_err(|e| Error::Internal(format!("serialization: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn dispatch(config: &CliConfig, input: &[u8]) -> crate::Result<Outcome> {
    match &config.command {
        Command::Gadget { f, stages } => return gadget(config, f, *stages),
        Command::Selftest => return selftest(config),
        _ => {}
    }
    let g = parse_input(config.format, input)?;
    match &config.command {
        Command::Recognize => recognize_cmd(config, &g),
        Command::Decide => decide(config, &g),
        Command::Buried => buried(config, &g),
        Command::Wq => wq(config, &g),
        Command::Orders { enumerate } => orders(config, &g, *enumerate),
        Command::Gadget { .. } | Command::Selftest => unreachable!("handled above"),
    }
}

fn names(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
}

fn pairs_text(g: &Graph, ps: &[(usize, usize)]) -> String {
    ps.iter()
        .map(|&(u, v)| format!("{}<{}", g.label(u), g.label(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn obstruction_outcome(config: &CliConfig, g: &Graph, o: &Obstruction) -> crate::Result<Outcome> {
    let stdout = if config.json {
        json_line(&ObstructionJson::from_obstruction(g, o))?
    } else {
        let mut s = String::from("not an interval graph\n");
        match o {
            Obstruction::ChordlessCycle(c) => {
                let _ = writeln!(s, "chordless cycle: {}", names(g, c));
            }
            Obstruction::AsteroidalTriple(at) => {
                let _ = writeln!(s, "asteroidal triple: {}", names(g, &at.triple));
                for p in &at.witness_paths {
                    let _ = writeln!(s, "  path: {}", names(g, p.vertices()));
                }
            }
        }
        s
    };
    Ok(Outcome::out(EXIT_NEGATIVE, stdout))
}

fn representation_text(g: &Graph, r: &ClosedRepresentation) -> String {
    let mut s = String::new();
    for v in 0..r.n() {
        let _ = writeln!(s, "{}: [{}, {}]", g.label(v), r.left(v), r.right(v));
    }
    s
}

fn recognize_cmd(config: &CliConfig, g: &Graph) -> crate::Result<Outcome> {
    match recognize(g)? {
        Recognition::Interval(r) => {
            let stdout = if config.json {
                json_line(&RepresentationJson::from_representation(&r))?
            } else {
                format!("interval graph\n{}", representation_text(g, &r))
            };
            Ok(Outcome::out(EXIT_POSITIVE, stdout))
        }
        Recognition::NotInterval(o) => obstruction_outcome(config, g, &o),
    }
}

fn decide(config: &CliConfig, g: &Graph) -> crate::Result<Outcome> {
    let v = match decide_unique(g) {
        Ok(v) => v,
        Err(Error::NotInterval(o)) => return obstruction_outcome(config, g, &o),
        Err(e) => return Err(e),
    };
    let code = if v.unique { EXIT_POSITIVE } else { EXIT_NEGATIVE };
    let stdout = if config.json {
        json_line(&VerdictJson::from_verdict(g, &v))?
    } else {
        let mut s = String::new();
        if let Some(o) = &v.order {
            let _ = writeln!(s, "uniquely orderable\norder: {}", pairs_text(g, &o.pairs()));
        }
        if let Some(w) = &v.witness {
            let _ = writeln!(s, "not uniquely orderable");
            let _ = writeln!(s, "order 1: {}", pairs_text(g, &w.order1.pairs()));
            let _ = writeln!(s, "order 2: {}", pairs_text(g, &w.order2.pairs()));
            let _ = writeln!(s, "triple: {}", names(g, &w.triple));
        }
        if let Some(c) = &v.buried {
            let _ = writeln!(
                s,
                "buried: B = {}; K = {}; R = {}",
                names(g, &c.b),
                names(g, &c.k),
                names(g, &c.r)
            );
        }
        let _ = writeln!(s, "wq components: {}", v.wq_components);
        s
    };
    Ok(Outcome::out(code, stdout))
}

fn buried(config: &CliConfig, g: &Graph) -> crate::Result<Outcome> {
    let found = match find_buried(g) {
        Ok(f) => f,
        Err(Error::NotInterval(o)) => return obstruction_outcome(config, g, &o),
        Err(e) => return Err(e),
    };
    let wq_components = WqGraph::build(g).component_count();
    let code = if found.is_some() {
        EXIT_POSITIVE
    } else {
        EXIT_NEGATIVE
    };
    let stdout = if config.json {
        json_line(&BuriedReportJson {
            buried: found.as_ref().map(|c| BuriedJson::from_certificate(g, c)),
            wq_components,
        })?
    } else {
        match &found {
            Some(c) => format!(
                "buried subgraph\nB = {}\nK = {}\nR = {}\n",
                names(g, &c.b),
                names(g, &c.k),
                names(g, &c.r)
            ),
            None => format!("no buried subgraph\nwq components: {wq_components}\n"),
        }
    };
    Ok(Outcome::out(code, stdout))
}

fn wq(config: &CliConfig, g: &Graph) -> crate::Result<Outcome> {
    let wq = WqGraph::build(g);
    let stdout = if config.json {
        json_line(&WqJson::from_wq(&wq))?
    } else {
        let mut s = format!(
            "{} pairs, {} components\n",
            wq.pairs().len(),
            wq.component_count()
        );
        for c in 0..wq.component_count() {
            let members: Vec<String> = wq
                .component(c)
                .iter()
                .map(|&(a, b)| format!("{}{}", g.label(a), g.label(b)))
                .collect();
            let _ = writeln!(s, "{c}: {}", members.join(" "));
        }
        s
    };
    Ok(Outcome::out(EXIT_POSITIVE, stdout))
}

fn orders(config: &CliConfig, g: &Graph, list: bool) -> crate::Result<Outcome> {
    let set = enumerate_associated_orders(g, config.max_n)?;
    let code = if set.orders.is_empty() {
        EXIT_NEGATIVE
    } else {
        EXIT_POSITIVE
    };
    let stdout = if config.json {
        json_line(&OrdersJson::from_set(g, &set, list))?
    } else {
        let mut s = format!(
            "{} orders in {} dual classes\n",
            set.orders.len(),
            set.dual_classes
        );
        if list {
            for o in &set.orders {
                let _ = writeln!(s, "{}", pairs_text(g, &o.pairs()));
            }
        }
        s
    };
    Ok(Outcome::out(code, stdout))
}

fn gadget(config: &CliConfig, f: &[u64], stages: Option<usize>) -> crate::Result<Outcome> {
    let spec = GadgetSpec::new(f.to_vec(), stages.unwrap_or(f.len()))?;
    let out = aca_gadget(&spec)?;
    let stdout = if config.json {
        json_line(&GadgetJson::from_output(&out))?
    } else {
        let g = &out.graph;
        format!(
            "gadget on {} vertices, {} edges\n{}predicted B = {}\npredicted K = {}\npredicted R = {}\n",
            g.n(),
            g.edge_count(),
            representation_text(g, &out.representation),
            names(g, &out.predicted_b),
            names(g, &out.predicted_k),
            names(g, &out.predicted_r)
        )
    };
    Ok(Outcome::out(EXIT_POSITIVE, stdout))
}

#[derive(Serialize)]
struct SelftestLine<'a> {
    check: &'a str,
    passed: bool,
    cases: usize,
    failures: &'a [String],
}

fn selftest(config: &CliConfig) -> crate::Result<Outcome> {
    let mut cfg = SelftestConfig::default();
    if let Some(seed) = config.seed {
        cfg.seed = seed;
    }
    let reports = run_all(&cfg)?;
    let all = reports.iter().all(|r| r.passed());
    let mut stdout = String::new();
    for r in &reports {
        if config.json {
            stdout.push_str(&json_line(&SelftestLine {
                check: &r.name,
                passed: r.passed(),
                cases: r.cases,
                failures: &r.failures,
            })?);
        } else {
            let _ = writeln!(stdout, "{r}");
        }
    }
    Ok(Outcome::out(
        if all { EXIT_POSITIVE } else { EXIT_INTERNAL },
        stdout,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIAMOND: &str =
        r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[1,3],[2,3]],"labels":{"0":"a","1":"b","2":"c","3":"d"}}"#;

    fn json(command: Command) -> CliConfig {
        CliConfig {
            json: true,
            ..CliConfig::new(command)
        }
    }

    #[test]
    fn decide_diamond() {
        let out = run(&json(Command::Decide), DIAMOND.as_bytes());
        assert_eq!(out.code, 0);
        assert_eq!(
            out.stdout,
            "{\"unique\":true,\"order\":[[\"a\",\"c\"]],\"wq_components\":2}\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&json(Command::Decide), b"{").code, EXIT_INPUT);
        let c4 = b"4\n0 1\n1 2\n2 3\n3 0\n";
        let cfg = CliConfig {
            format: InputFormat::Edgelist,
            ..json(Command::Recognize)
        };
        let out = run(&cfg, c4);
        assert_eq!(out.code, EXIT_NEGATIVE);
        assert!(out.stdout.contains("chordless_cycle"));
        let big = CliConfig {
            max_n: 17,
            ..json(Command::Orders { enumerate: false })
        };
        assert_eq!(run(&big, DIAMOND.as_bytes()).code, EXIT_INPUT);
    }

    #[test]
    fn clap_parses_flags() {
        let cfg =
            CliConfig::try_parse_from(["intgraph", "gadget", "--f", "2,0,1", "--stages", "3", "--json"])
                .unwrap();
        assert_eq!(
            cfg.command,
            Command::Gadget {
                f: vec![2, 0, 1],
                stages: Some(3)
            }
        );
        assert!(cfg.json);
        assert!(CliConfig::try_parse_from(["intgraph", "orders", "--max-n", "17"]).is_err());
        let cfg =
            CliConfig::try_parse_from(["intgraph", "decide", "g.json", "--format", "edgelist"]).unwrap();
        assert_eq!(cfg.input, Some(PathBuf::from("g.json")));
        assert_eq!(cfg.format, InputFormat::Edgelist);
    }
}
