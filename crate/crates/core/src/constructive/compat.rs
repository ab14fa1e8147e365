//! Auxiliary graphs whose cycles lift to Berge cycles of the same length.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::matching::saturating_matching;
use crate::oracle::{BergeCycle, HamiltonianFrame};
use crate::vertex_set::VertexSet;
use std::collections::{BTreeMap, BTreeSet};

fn key(x: usize, y: usize) -> (usize, usize) {
    (x.min(y), x.max(y))
}

/// A graph on the vertices of a hypergraph with its edges split into
/// *fixed* edges, each pinned to its own hyperedge by `φ*`, and *free* edges,
/// each covered by at least `r` hyperedges outside the image of `φ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatGraph {
    graph: SimpleGraph,
    fixed: BTreeMap<(usize, usize), usize>,
    free: BTreeSet<(usize, usize)>,
}

impl CompatGraph {
    /// Validates every invariant against `h`.
    pub fn new(h: &Hypergraph, fixed: Vec<((usize, usize), usize)>, free: Vec<(usize, usize)>) -> Result<Self> {
        let n = h.n();
        let mut graph = SimpleGraph::new(n);
        let mut fixed_map = BTreeMap::new();
        let mut image = BTreeSet::new();
        for ((x, y), id) in fixed {
            graph.add_edge(x, y)?;
            if id >= h.num_edges() {
                return Err(Error::EdgeOutOfRange { id, m: h.num_edges() });
            }
            if !VertexSet::pair(x, y).is_subset(h.edge(id)) {
                return Err(Error::InvalidCompatGraph(format!("edge {id} does not contain fixed pair {{{x}, {y}}}")));
            }
            if fixed_map.insert(key(x, y), id).is_some() {
                return Err(Error::InvalidCompatGraph(format!("fixed pair {{{x}, {y}}} listed twice")));
            }
            if !image.insert(id) {
                return Err(Error::InvalidCompatGraph(format!("φ* is not injective at edge {id}")));
            }
        }
        let mut free_set = BTreeSet::new();
        for (x, y) in free {
            graph.add_edge(x, y)?;
            let k = key(x, y);
            if fixed_map.contains_key(&k) || !free_set.insert(k) {
                return Err(Error::InvalidCompatGraph(format!("free pair {{{x}, {y}}} repeated or fixed")));
            }
            let p = VertexSet::pair(x, y);
            let cover = (0..h.num_edges()).filter(|e| !image.contains(e) && p.is_subset(h.edge(*e))).count();
            if cover < h.r() {
                return Err(Error::InvalidCompatGraph(format!(
                    "free pair {{{x}, {y}}} has co-degree {cover} < r = {} outside φ*",
                    h.r()
                )));
            }
        }
        Ok(CompatGraph { graph, fixed: fixed_map, free: free_set })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `φ*({x, y})` for a fixed edge.
    pub fn phi(&self, x: usize, y: usize) -> Option<usize> {
        self.fixed.get(&key(x, y)).copied()
    }

    pub fn is_free(&self, x: usize, y: usize) -> bool {
        self.free.contains(&key(x, y))
    }

    pub fn fixed_edges(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.fixed.iter().map(|(&k, &v)| (k, v))
    }

    pub fn free_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.free.iter().copied()
    }

    /// Moves fixed edge `old` to the free side and pins `new` to `φ*(old)`.
    pub fn refixed(&self, h: &Hypergraph, old: (usize, usize), new: (usize, usize)) -> Result<CompatGraph> {
        let old = key(old.0, old.1);
        let new = key(new.0, new.1);
        let id = self
            .phi(old.0, old.1)
            .ok_or_else(|| Error::InvalidCompatGraph(format!("{old:?} is not fixed")))?;
        let mut fixed: Vec<_> = self.fixed_edges().filter(|&(k, _)| k != old).collect();
        fixed.push((new, id));
        let mut free: Vec<_> = self.free_edges().filter(|&k| k != new).collect();
        free.push(old);
        CompatGraph::new(h, fixed, free)
    }
}

/// Consecutive pairs pinned to their cycle edges; non-consecutive pairs with
/// at least `r` common extra edges are free.
pub fn build_compat_graph(frame: &HamiltonianFrame) -> CompatGraph {
    let n = frame.n();
    let fixed: Vec<_> = (0..n).map(|i| (key(i, (i + 1) % n), frame.cycle_edge(i))).collect();
    let consecutive: BTreeSet<_> = fixed.iter().map(|&(k, _)| k).collect();
    let mut free = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if !consecutive.contains(&(x, y)) && frame.extra_codegree(x, y) >= frame.r() {
                free.push((x, y));
            }
        }
    }
    CompatGraph::new(frame.base(), fixed, free).expect("frame data satisfies the invariants")
}

/// Lifts the graph cycle `d` (vertex list) of `g` to a Berge cycle of `h`:
/// fixed edges keep `φ*`, free edges are matched into the remaining edges.
pub fn lift_graph_cycle(h: &Hypergraph, g: &CompatGraph, d: &[usize]) -> Result<BergeCycle> {
    if d.len() < 3 || d.iter().any(|&v| v >= g.n()) || !g.graph().is_cycle(d) {
        return Err(Error::NotACycle(format!("{d:?} is not a cycle of the compatible graph")));
    }
    let l = d.len();
    let mut edge_ids = vec![usize::MAX; l];
    let mut taken = BTreeSet::new();
    let mut free_slots = Vec::new();
    for i in 0..l {
        let (x, y) = (d[i], d[(i + 1) % l]);
        match g.phi(x, y) {
            Some(id) => {
                edge_ids[i] = id;
                taken.insert(id);
            }
            None => free_slots.push(i),
        }
    }
    let candidates: Vec<Vec<usize>> = free_slots
        .iter()
        .map(|&i| {
            let p = VertexSet::pair(d[i], d[(i + 1) % l]);
            (0..h.num_edges()).filter(|e| !taken.contains(e) && p.is_subset(h.edge(*e))).collect()
        })
        .collect();
    let matched = saturating_matching(free_slots.len(), h.num_edges(), |x| candidates[x].as_slice())
        .ok_or_else(|| Error::MatchingFailed(format!("free edges of {d:?} cannot be matched")))?;
    for (&slot, id) in free_slots.iter().zip(matched) {
        edge_ids[slot] = id;
    }
    Ok(BergeCycle::new(d.to_vec(), edge_ids))
}

/// The edge additions used when the compatible graph has no triangle: for a
/// consecutive pair `{t, t+1}` with extra co-degree at least `r`, pin `e_t`
/// to a new pair `{t, h}` (some `h ± 1` adjacent to `t`) or `{h, h+2}`
/// (`h, h+2 ∈ e_t`), freeing `{t, t+1}`. Invalid candidates are skipped.
pub fn triangle_augmentations(frame: &HamiltonianFrame, g: &CompatGraph) -> Vec<CompatGraph> {
    let n = frame.n();
    let h = frame.base();
    let mut out = Vec::new();
    for t in 0..n {
        let t1 = (t + 1) % n;
        if frame.extra_codegree(t, t1) < frame.r() {
            continue;
        }
        let rest = frame.edge(frame.cycle_edge(t)) - VertexSet::pair(t, t1);
        let nt = g.graph().neighbors(t);
        for v in rest {
            let touches = nt.contains((v + 1) % n) || nt.contains((v + n - 1) % n);
            if touches && !g.graph().has_edge(t, v) {
                if let Ok(g2) = g.refixed(h, (t, t1), (t, v)) {
                    out.push(g2);
                }
            }
        }
        for v in rest {
            let w = (v + 2) % n;
            if rest.contains(w) && !g.graph().has_edge(v, w) {
                if let Ok(g2) = g.refixed(h, (t, t1), (v, w)) {
                    out.push(g2);
                }
            }
        }
    }
    out
}
