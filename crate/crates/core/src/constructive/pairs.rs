//! Distinct covering edges for a family of vertex pairs inside a tight union.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matching::saturating_matching;
use crate::vertex_set::VertexSet;

/// Assigns pairwise distinct edges from `edges` to `pairs`, the `i`-th
/// containing the `i`-th pair.
///
/// Preconditions (checked): the edges cover exactly `r + 1` vertices `U`;
/// pairs are distinct 2-subsets of `U`; there are at most `|edges|` pairs and
/// no vertex lies in more than `|edges| - 1` of them. With at least three
/// edges a matching then always exists. With two edges `U - x` and `U - y`
/// the pair `{x, y}` has no cover; that and any other failure is reported as
/// [`Error::MatchingFailed`].
pub fn match_pairs_to_edges(h: &Hypergraph, edges: &[usize], pairs: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut ids = edges.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != edges.len() {
        return Err(Error::PreconditionViolated("edge list has repeats".into()));
    }
    if let Some(&bad) = ids.iter().find(|&&e| e >= h.num_edges()) {
        return Err(Error::EdgeOutOfRange { id: bad, m: h.num_edges() });
    }
    let union = ids.iter().fold(VertexSet::EMPTY, |acc, &e| acc | h.edge(e));
    if union.len() != h.r() + 1 {
        return Err(Error::PreconditionViolated(format!(
            "edges cover {} vertices, expected r + 1 = {}",
            union.len(),
            h.r() + 1
        )));
    }
    if pairs.len() > ids.len() {
        return Err(Error::PreconditionViolated(format!(
            "{} pairs but only {} edges",
            pairs.len(),
            ids.len()
        )));
    }
    let mut seen = Vec::with_capacity(pairs.len());
    let mut load = [0usize; crate::MAX_VERTICES];
    for &(a, b) in pairs {
        let p = VertexSet::pair(a, b);
        if a == b || !p.is_subset(union) {
            return Err(Error::PreconditionViolated(format!("pair {{{a}, {b}}} is not a 2-subset of the union")));
        }
        if seen.contains(&p) {
            return Err(Error::PreconditionViolated(format!("pair {{{a}, {b}}} repeated")));
        }
        seen.push(p);
        load[a] += 1;
        load[b] += 1;
    }
    if let Some(v) = (0..h.n()).find(|&v| load[v] + 1 > ids.len()) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} lies in {} pairs, at most {} allowed",
            load[v],
            ids.len() - 1
        )));
    }
    let candidates: Vec<Vec<usize>> = seen
        .iter()
        .map(|&p| (0..ids.len()).filter(|&x| p.is_subset(h.edge(ids[x]))).collect())
        .collect();
    saturating_matching(pairs.len(), ids.len(), |x| candidates[x].as_slice())
        .map(|m| m.into_iter().map(|x| ids[x]).collect())
        .ok_or_else(|| Error::MatchingFailed(format!("no system of distinct edges for {pairs:?}")))
}
