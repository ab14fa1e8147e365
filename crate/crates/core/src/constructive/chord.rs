//! Chords of extra edges and the short cycles they close.

use crate::error::{Error, Result};
use crate::oracle::{BergeCycle, HamiltonianFrame};

/// First `(i, f)` with `f` in `scope` (scanned in the given order, then `i`
/// ascending) such that `{i, i+k mod n} ⊆ f`.
pub fn find_k_chord(frame: &HamiltonianFrame, k: usize, scope: &[usize]) -> Option<(usize, usize)> {
    let n = frame.n();
    if k == 0 || k >= n {
        return None;
    }
    scope.iter().find_map(|&f| {
        let e = frame.edge(f);
        e.iter().find(|&i| e.contains((i + k) % n)).map(|i| (i, f))
    })
}

/// `i e_i (i+1) ... (i+k) f i`, a cycle of length `k + 1`.
pub fn chord_to_cycle(frame: &HamiltonianFrame, i: usize, k: usize, f: usize) -> Result<BergeCycle> {
    let n = frame.n();
    if k == 0 || k >= n || i >= n {
        return Err(Error::NotAChord(format!("i={i}, k={k} out of range for n={n}")));
    }
    if !frame.is_extra(f) {
        return Err(Error::NotAChord(format!("edge {f} is not an extra edge")));
    }
    let e = frame.edge(f);
    if !(e.contains(i) && e.contains((i + k) % n)) {
        return Err(Error::NotAChord(format!("edge {f} does not contain {{{i}, {}}}", (i + k) % n)));
    }
    let vertices: Vec<usize> = (0..=k).map(|t| (i + t) % n).collect();
    let mut edge_ids: Vec<usize> = (0..k).map(|t| frame.cycle_edge(i + t)).collect();
    edge_ids.push(f);
    Ok(BergeCycle::new(vertices, edge_ids))
}
