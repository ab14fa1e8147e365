//! Explicit Berge cycles of every length from a hamiltonian frame.
//!
//! Positions are the frame's: the hamiltonian cycle is `0 e_0 1 e_1 ...`.
//! Every builder validates what it returns; the driver in [`extract`] maps
//! witnesses back to source labels.

mod cases;
mod chord;
mod compat;
mod extract;
mod pairs;
mod shift;
mod ssc;

pub use cases::{case2_extract, case3_extract, case4_endgame, case4_reduce, Case4Reduction};
pub use chord::{chord_to_cycle, find_k_chord};
pub use compat::{build_compat_graph, lift_graph_cycle, triangle_augmentations, CompatGraph};
pub use extract::{
    check_hypotheses, extract_length, extract_lengths, Branch, ExtractOptions, ExtractionTrace, Extractor,
    Hypotheses, Regime, TraceRecord, SMALL_REGIME_MIN_N,
};
pub use pairs::match_pairs_to_edges;
pub use shift::{find_shift_trigger, shift_image, shift_lemma_extract, shift_map, shift_set};
pub use ssc::{gcd, is_k_ssc, ssc_decompose, ssc_decompose_anchored, SscDecomposition};
