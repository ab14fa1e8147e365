use super::cycle::BergeCycle;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::matching::Matching;
use crate::vertex_set::VertexSet;

/// Knobs shared by the exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of node expansions; `None` searches to completion.
    pub node_cap: Option<u64>,
    /// Re-establish the pair/edge matching every this many extensions
    /// (1 = after every extension). The closing step always checks.
    pub hall_interval: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { node_cap: None, hall_interval: 1 }
    }
}

impl SearchOptions {
    pub fn capped(cap: u64) -> Self {
        SearchOptions { node_cap: Some(cap), ..Self::default() }
    }
}

/// Result of a possibly capped exact search. `Unknown` means the cap was hit
/// before the search space was exhausted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Absent,
    Unknown,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Outcome::Unknown)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Search<T> {
    pub outcome: Outcome<T>,
    pub nodes: u64,
}

/// Exact: a Berge cycle of length `length` if one exists.
pub fn find_berge_cycle(h: &Hypergraph, length: usize) -> Result<Option<BergeCycle>> {
    Ok(search_berge_cycle(h, length, &SearchOptions::default())?.outcome.found())
}

/// Backtracking over vertex sequences (smallest vertex first, the first
/// vertex being the minimum of the cycle) with an incrementally maintained
/// matching of consecutive pairs into distinct edges.
pub fn search_berge_cycle(
    h: &Hypergraph,
    length: usize,
    opts: &SearchOptions,
) -> Result<Search<BergeCycle>> {
    let n = h.n();
    if length < 2 || length > n {
        return Err(Error::LengthOutOfRange { length, lo: 2, hi: n });
    }
    if h.num_edges() < length {
        return Ok(Search { outcome: Outcome::Absent, nodes: 0 });
    }
    let mut s = BergeSearch::new(h, length, opts);
    let outcome = s.run();
    Ok(Search { outcome, nodes: s.nodes })
}

struct Aborted;

struct BergeSearch<'a> {
    n: usize,
    length: usize,
    shadow: SimpleGraph,
    /// `pair_edges[u * n + v]`: ids of edges containing `{u, v}`.
    pair_edges: Vec<Vec<usize>>,
    path: Vec<usize>,
    used: VertexSet,
    allowed: VertexSet,
    matching: Matching,
    pending: Vec<usize>,
    nodes: u64,
    opts: &'a SearchOptions,
}

impl<'a> BergeSearch<'a> {
    fn new(h: &Hypergraph, length: usize, opts: &'a SearchOptions) -> Self {
        let n = h.n();
        let mut pair_edges = vec![Vec::new(); n * n];
        for (id, e) in h.edges().iter().enumerate() {
            for u in e.iter() {
                for v in e.iter().filter(|&v| v != u) {
                    pair_edges[u * n + v].push(id);
                }
            }
        }
        BergeSearch {
            n,
            length,
            shadow: h.shadow2(),
            pair_edges,
            path: Vec::with_capacity(length),
            used: VertexSet::EMPTY,
            allowed: VertexSet::EMPTY,
            matching: Matching::new(length, h.num_edges()),
            pending: Vec::new(),
            nodes: 0,
            opts,
        }
    }

    fn run(&mut self) -> Outcome<BergeCycle> {
        for start in 0..self.n {
            if self.shadow.degree(start) == 0 {
                continue;
            }
            self.path.clear();
            self.path.push(start);
            self.used = VertexSet::singleton(start);
            self.allowed = VertexSet::full(self.n) - VertexSet::full(start + 1);
            match self.extend() {
                Ok(true) => return Outcome::Found(self.witness()),
                Ok(false) => {}
                Err(Aborted) => return Outcome::Unknown,
            }
        }
        Outcome::Absent
    }

    fn witness(&self) -> BergeCycle {
        BergeCycle {
            vertices: self.path.clone(),
            edge_ids: (0..self.length)
                .map(|slot| self.matching.partner(slot).expect("all slots matched"))
                .collect(),
        }
    }

    fn slot_pair(&self, slot: usize) -> (usize, usize) {
        let a = self.path[slot];
        let b = self.path[(slot + 1) % self.path.len()];
        (a, b)
    }

    /// Matches every pending slot; false on a Hall violation.
    fn settle_pending(&mut self) -> bool {
        let n = self.n;
        let path = &self.path;
        let pair_edges = &self.pair_edges;
        let len = path.len();
        let candidates = |slot: usize| {
            let (a, b) = (path[slot], path[(slot + 1) % len]);
            pair_edges[a * n + b].as_slice()
        };
        while let Some(&slot) = self.pending.last() {
            if !self.matching.augment(slot, &candidates) {
                return false;
            }
            self.pending.pop();
        }
        true
    }

    fn push_slot(&mut self, slot: usize, check: bool) -> bool {
        debug_assert!({
            let (a, b) = self.slot_pair(slot);
            !self.pair_edges[a * self.n + b].is_empty()
        });
        self.pending.push(slot);
        !check || self.settle_pending()
    }

    fn pop_slot(&mut self, slot: usize) {
        self.matching.unmatch(slot);
        self.pending.retain(|&s| s != slot);
    }

    fn extend(&mut self) -> std::result::Result<bool, Aborted> {
        let depth = self.path.len();
        let start = self.path[0];
        let last = self.path[depth - 1];

        if depth == self.length {
            // closing pair (last, start)
            if !self.push_slot(depth - 1, true) {
                self.pop_slot(depth - 1);
                return Ok(false);
            }
            return Ok(true);
        }

        let free = self.allowed - self.used;
        let remaining = self.length - depth;
        let reach = self.shadow.reachable_within(last, free) - VertexSet::singleton(last);
        if reach.len() < remaining || (depth > 1 && !reach.intersects(self.shadow.neighbors(start))) {
            return Ok(false);
        }

        let mut candidates = self.shadow.neighbors(last) & free;
        if remaining == 1 {
            candidates = candidates & self.shadow.neighbors(start);
            if self.length >= 3 {
                // reflection symmetry: keep v1 < v(l-1)
                candidates = candidates - VertexSet::full(self.path[1] + 1);
            }
        }
        let check_due = |d: usize| d % self.opts.hall_interval.max(1) == 0;

        for next in candidates {
            self.nodes += 1;
            if let Some(cap) = self.opts.node_cap {
                if self.nodes > cap {
                    return Err(Aborted);
                }
            }
            self.path.push(next);
            self.used.insert(next);
            let slot = depth - 1;
            let found = if self.push_slot(slot, check_due(depth) || remaining == 1) {
                self.extend()?
            } else {
                false
            };
            if found {
                return Ok(true);
            }
            self.pop_slot(slot);
            self.used.remove(next);
            self.path.pop();
        }
        Ok(false)
    }
}

/// Exact: a simple cycle of length `length` in `g`, as a vertex list.
pub fn graph_cycle_of_length(g: &SimpleGraph, length: usize) -> Result<Option<Vec<usize>>> {
    Ok(search_graph_cycle(g, length, &SearchOptions::default())?.outcome.found())
}

pub fn search_graph_cycle(
    g: &SimpleGraph,
    length: usize,
    opts: &SearchOptions,
) -> Result<Search<Vec<usize>>> {
    let n = g.n();
    if length < 3 || length > n {
        return Err(Error::LengthOutOfRange { length, lo: 3, hi: n });
    }
    if length % 2 == 1 && g.is_bipartite() {
        return Ok(Search { outcome: Outcome::Absent, nodes: 0 });
    }
    let mut s = GraphSearch { g, length, path: Vec::new(), used: VertexSet::EMPTY, nodes: 0, cap: opts.node_cap };
    for start in 0..n {
        if g.degree(start) < 2 {
            continue;
        }
        s.path = vec![start];
        s.used = VertexSet::singleton(start);
        let allowed = VertexSet::full(n) - VertexSet::full(start + 1);
        match s.extend(allowed) {
            Ok(true) => return Ok(Search { outcome: Outcome::Found(s.path), nodes: s.nodes }),
            Ok(false) => {}
            Err(Aborted) => return Ok(Search { outcome: Outcome::Unknown, nodes: s.nodes }),
        }
    }
    Ok(Search { outcome: Outcome::Absent, nodes: s.nodes })
}

struct GraphSearch<'a> {
    g: &'a SimpleGraph,
    length: usize,
    path: Vec<usize>,
    used: VertexSet,
    nodes: u64,
    cap: Option<u64>,
}

impl GraphSearch<'_> {
    fn extend(&mut self, allowed: VertexSet) -> std::result::Result<bool, Aborted> {
        let depth = self.path.len();
        let start = self.path[0];
        let last = self.path[depth - 1];
        if depth == self.length {
            return Ok(self.g.has_edge(last, start));
        }
        let free = allowed - self.used;
        let remaining = self.length - depth;
        let reach = self.g.reachable_within(last, free) - VertexSet::singleton(last);
        if reach.len() < remaining || !reach.intersects(self.g.neighbors(start)) {
            return Ok(false);
        }
        let mut candidates = self.g.neighbors(last) & free;
        if remaining == 1 {
            candidates = candidates & self.g.neighbors(start) - VertexSet::full(self.path[1] + 1);
        }
        for next in candidates {
            self.nodes += 1;
            if self.cap.is_some_and(|c| self.nodes > c) {
                return Err(Aborted);
            }
            self.path.push(next);
            self.used.insert(next);
            if self.extend(allowed)? {
                return Ok(true);
            }
            self.used.remove(next);
            self.path.pop();
        }
        Ok(false)
    }
}
