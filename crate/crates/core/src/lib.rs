//! Error-tolerating Bell inequalities built from graph states.
//!
//! For a graph `G` and an error weight `t`, the Bell operator `B_t(G)` sums
//! the graph-state projector conjugated by every phase flip `Z_C` with `C`
//! in the t-coverable set. Its quantum value on `|G⟩` stays 1 under any
//! channel acting on at most `t` qubits, and the inequality is violated
//! whenever the local-hidden-variable bound `D_t(G)` is below 1.
//!
//! * [`graph`], [`vertex_set`], [`graph6`], [`canon`]: graphs on up to 16
//!   vertices, census ingestion, canonical labeling and LC orbits.
//! * [`pauli`]: phase-tracked Pauli strings and stabilizer elements `G_S`.
//! * [`coverable`]: the t-coverable set `C_t(G)`.
//! * [`bell`]: stabilizer-basis coefficients and exact LHV bounds.
//! * [`sim`]: dense state-vector and channel oracle.
//! * [`search`], [`family`], [`table`]: census search and table reproduction.

pub mod bell;
pub mod canon;
pub mod coverable;
pub mod dyadic;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod pauli;
pub mod search;
pub mod sim;
pub mod table;
pub mod transform;
pub mod vertex_set;

pub use bell::{
    bell_coefficients, family_oracle_complete, family_oracle_star_copies, lhv_bound,
    lhv_bound_full, lhv_bound_with, lhv_value, lhv_values, BellCoefficients, BellOperator,
    Engine, LhvAssignment, LhvResult,
};
pub use canon::{canonicalize, lc_orbit, lc_orbit_with_cap, CanonicalForm, LcOrbit};
pub use coverable::{coverable_set, CoverableSet};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use family::{named_graph, parse_graph_arg, NamedFamily};
pub use graph::Graph;
pub use graph6::{emit_graph6, parse_graph6, Graph6Reader};
pub use pauli::{stabilizer_element, vertex_stabilizer, LocalLetter, PauliString};
pub use search::{enumerate_labeled, search, Dedup, SearchOptions, SearchReport};
pub use vertex_set::{VertexSet, MAX_VERTICES};
