//! Exact decision procedures used as ground truth.

mod cycle;
mod frame;
mod search;
mod spectrum;

pub use cycle::{validate_berge_cycle, BergeCycle, Violation};
pub use frame::{find_hamiltonian_frame, search_hamiltonian_frame, HamiltonianFrame};
pub use search::{
    find_berge_cycle, graph_cycle_of_length, search_berge_cycle, search_graph_cycle, Outcome,
    Search, SearchOptions,
};
pub use spectrum::{spectrum, LengthStatus, SpectrumReport};
