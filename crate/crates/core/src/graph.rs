use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Simple undirected graph on `0..n` (n <= 64) with bitset adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= crate::MAX_VERTICES, "graphs are limited to 64 vertices");
        SimpleGraph { adj: vec![VertexSet::EMPTY; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n) - VertexSet::singleton(v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for v in 0..n {
            g.connect(v, (v + 1) % n);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = SimpleGraph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.connect(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.connect(u, v);
        Ok(())
    }

    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn connect_all(&mut self, u: usize, others: VertexSet) {
        self.adj[u] = self.adj[u] | others;
        for v in others {
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.adj[u].intersects(self.adj[v]))
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut side = vec![None::<bool>; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            stack.push(s);
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Vertices reachable from `start` using only vertices in `allowed`
    /// (plus `start` itself).
    pub fn reachable_within(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next | self.adj[u];
            }
            next = (next & allowed) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// True iff `cycle` lists at least three distinct vertices with
    /// consecutive (cyclically) vertices adjacent.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        let l = cycle.len();
        if l < 3 || cycle.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let distinct: VertexSet = cycle.iter().copied().collect();
        distinct.len() == l && (0..l).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % l]))
    }
}
