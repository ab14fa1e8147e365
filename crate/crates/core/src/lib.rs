//! Berge cycles in uniform hypergraphs.
//!
//! The crate is organised in four layers:
//!
//! * [`hypergraph`], [`graph`], [`vertex_set`] and [`format`]: the data model
//!   (bitset edges over at most 64 vertices), degree machinery and the text
//!   file format.
//! * [`oracle`]: exact search for Berge cycles, hamiltonian frames, cycle
//!   spectra and graph cycles of prescribed length.
//! * [`constructive`]: extraction of explicit Berge cycles of every length
//!   from a hamiltonian frame with enough extra edges, following the
//!   shifting / self-shift-complementary / compatible-graph arguments.
//! * [`constructions`] and [`sweep`]: extremal generators and the random
//!   sweep harness.

pub mod constructions;
pub mod constructive;
pub mod error;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod matching;
pub mod oracle;
pub mod sample;
pub mod sweep;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use hypergraph::{degree_threshold, BipartiteIncidence, Hypergraph, MAX_VERTICES};
pub use oracle::{BergeCycle, HamiltonianFrame};
pub use vertex_set::VertexSet;
