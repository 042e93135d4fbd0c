//! Edge clique covers of graphs that exclude an induced complete bipartite
//! subgraph.
//!
//! * [`graph`], [`cover`], [`edgelist`]: bitset graphs, clique covers,
//!   validation and the text format.
//! * [`oracle`]: exact clique/stable numbers, induced `K_{s,t}` detection,
//!   minimum clique covers and certified Ramsey-type witnesses.
//! * [`algo`]: the constructive covers (pair deletion, two-phase threshold,
//!   min-degree peeling, clique-partition product) and their bounds.
//! * [`generators`]: `K_{a,b}`, `G(n,p)`, projective-plane incidence graphs
//!   and the join lower-bound construction.
//! * [`harness`]: experiment sweeps, the `α ≤ 2` sweep and lower-bound tables.

pub mod algo;
pub mod bitset;
pub mod cli;
pub mod cover;
pub mod edgelist;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod oracle;

pub use algo::{Algorithm, CoverParams, Mode};
pub use cover::{validate_cover, Clique, CliqueCover, CoverReport, Provenance};
pub use graph::{build_graph, is_clique, Graph, GraphError};
