//! Interval graph recognition and unique orderability.
//!
//! Every decision comes with a certificate that can be re-checked against
//! the input graph: interval representations or chordless cycles and
//! asteroidal triples for recognition; a unique associated order, or two
//! genuinely different associated orders plus a buried subgraph, for
//! orderability.

pub mod cli;
mod dsu;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod json;
pub mod oracle;
pub mod orderability;
pub mod recognition;
pub mod representation;
pub mod selftest;

pub use error::{Error, Result};
pub use graph::{Graph, Path, StrictPartialOrder};
pub use orderability::{
    construct_b, decide_unique, find_buried, is_buried, two_orders_from_buried, unique_order_from_wq,
    BuriedCertificate, LeveledSet, NonUniqueWitness, UniquenessVerdict, WqGraph,
};
pub use recognition::{recognize, Obstruction, Recognition};
pub use representation::{ClosedRepresentation, Rational};
