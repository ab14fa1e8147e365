use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::vertex_set::VertexSet;

/// Hard cap on the vertex count: edges are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// An `r`-uniform hypergraph on vertices `0..n` with a duplicate-free,
/// ordered edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validates and builds a hypergraph from vertex lists. Edge order is kept.
    pub fn new(n: usize, r: usize, edges: &[Vec<usize>]) -> Result<Self> {
        check_dimensions(n, r)?;
        let mut sets = Vec::with_capacity(edges.len());
        for (index, edge) in edges.iter().enumerate() {
            let mut set = VertexSet::EMPTY;
            for &v in edge {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                set.insert(v);
            }
            if set.len() != r {
                return Err(Error::NonUniformEdge { index, size: set.len(), r });
            }
            sets.push(set);
        }
        Self::from_sets(n, r, sets)
    }

    pub fn from_sets(n: usize, r: usize, edges: Vec<VertexSet>) -> Result<Self> {
        check_dimensions(n, r)?;
        let universe = VertexSet::full(n);
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (index, &e) in edges.iter().enumerate() {
            if !e.is_subset(universe) {
                let vertex = (e - universe).min().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if e.len() != r {
                return Err(Error::NonUniformEdge { index, size: e.len(), r });
            }
            if let Some(&first) = seen.get(&e) {
                return Err(Error::DuplicateEdge { index, first });
            }
            seen.insert(e, index);
        }
        Ok(Hypergraph { n, r, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> VertexSet {
        self.edges[id]
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Ids of the edges containing every vertex of `set`, in index order.
    pub fn edges_containing(&self, set: VertexSet) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| set.is_subset(**e))
            .map(|(i, _)| i)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges_containing(VertexSet::singleton(v)).count())
    }

    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex { vertex: u });
        }
        Ok(self.edges_containing(VertexSet::pair(u, v)).count())
    }

    pub fn min_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for v in e.iter() {
                deg[v] += 1;
            }
        }
        deg.into_iter().min().unwrap_or(0)
    }

    /// The graph with `uv` adjacent iff some edge contains both.
    pub fn shadow2(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for e in &self.edges {
            for u in e.iter() {
                g.connect_all(u, *e - VertexSet::singleton(u));
            }
        }
        g
    }

    pub fn incidence_graph(&self) -> BipartiteIncidence {
        let mut vertex_edges = vec![Vec::new(); self.n];
        for (j, e) in self.edges.iter().enumerate() {
            for v in e.iter() {
                vertex_edges[v].push(j);
            }
        }
        BipartiteIncidence {
            vertex_edges,
            edge_vertices: self.edges.clone(),
        }
    }

    /// Renames vertex `v` to `map[v]`; edge ids are unchanged.
    pub fn relabel(&self, map: &[usize]) -> Hypergraph {
        debug_assert_eq!(map.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|v| map[v]).collect())
            .collect();
        Hypergraph { n: self.n, r: self.r, edges }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

fn check_dimensions(n: usize, r: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    if r < 2 || r > n {
        return Err(Error::BadUniformity { n, r });
    }
    Ok(())
}

/// Vertex/edge incidence structure. Left side: vertices of the hypergraph,
/// right side: its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteIncidence {
    vertex_edges: Vec<Vec<usize>>,
    edge_vertices: Vec<VertexSet>,
}

impl BipartiteIncidence {
    pub fn left_count(&self) -> usize {
        self.vertex_edges.len()
    }

    pub fn right_count(&self) -> usize {
        self.edge_vertices.len()
    }

    pub fn left_neighbors(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn right_neighbors(&self, e: usize) -> VertexSet {
        self.edge_vertices[e]
    }

    pub fn left_degree(&self, v: usize) -> usize {
        self.vertex_edges[v].len()
    }

    pub fn right_degree(&self, e: usize) -> usize {
        self.edge_vertices[e].len()
    }

    pub fn adjacent(&self, v: usize, e: usize) -> bool {
        self.edge_vertices[e].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_edges.iter().map(Vec::len).sum()
    }

    /// Adjacency lists over `left_count + right_count` nodes, right node `j`
    /// numbered `left_count + j`.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let n = self.left_count();
        let mut adj: Vec<Vec<usize>> = self
            .vertex_edges
            .iter()
            .map(|es| es.iter().map(|&j| n + j).collect())
            .collect();
        adj.extend(self.edge_vertices.iter().map(|e| e.to_vec()));
        adj
    }
}

/// Minimum degree bound for pancyclicity: `C(floor((n-1)/2), r-1) + 1` when
/// `r <= floor((n-1)/2)`, otherwise `r`.
pub fn degree_threshold(n: usize, r: usize) -> Result<u64> {
    if r < 3 || r >= n {
        return Err(Error::BadUniformity { n, r });
    }
    let half = (n - 1) / 2;
    if r <= half {
        Ok(binomial(half as u64, (r - 1) as u64) + 1)
    } else {
        Ok(r as u64)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
