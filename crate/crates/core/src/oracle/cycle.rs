use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;
use std::fmt;
use std::str::FromStr;

/// A Berge cycle `v0 e0 v1 e1 ... v(l-1) e(l-1) v0`: edge `edge_ids[i]`
/// joins `vertices[i]` and `vertices[(i + 1) % l]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BergeCycle {
    pub vertices: Vec<usize>,
    pub edge_ids: Vec<usize>,
}

/// A violated clause of the Berge-cycle definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooShort { length: usize },
    LengthMismatch { vertices: usize, edges: usize },
    VertexOutOfRange { position: usize, vertex: usize },
    EdgeOutOfRange { position: usize, id: usize },
    RepeatedVertex { vertex: usize },
    RepeatedEdge { id: usize },
    /// `{v_i, v_{i+1}}` is not contained in edge `edge_ids[i]`.
    PairNotCovered { position: usize },
}

impl BergeCycle {
    pub fn new(vertices: Vec<usize>, edge_ids: Vec<usize>) -> Self {
        BergeCycle { vertices, edge_ids }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Renames vertices through `map`; edge ids are kept.
    pub fn map_vertices(&self, map: impl Fn(usize) -> usize) -> BergeCycle {
        BergeCycle {
            vertices: self.vertices.iter().map(|&v| map(v)).collect(),
            edge_ids: self.edge_ids.clone(),
        }
    }

    pub fn validate(&self, h: &Hypergraph) -> std::result::Result<(), Vec<Violation>> {
        let violations = validate_berge_cycle(h, self);
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        validate_berge_cycle(h, self).is_empty()
    }
}

/// Every clause of the definition that `cand` breaks against `h`, in a
/// fixed order. Empty means valid.
pub fn validate_berge_cycle(h: &Hypergraph, cand: &BergeCycle) -> Vec<Violation> {
    let mut out = Vec::new();
    let l = cand.vertices.len();
    if cand.edge_ids.len() != l {
        out.push(Violation::LengthMismatch { vertices: l, edges: cand.edge_ids.len() });
    }
    if l < 2 {
        out.push(Violation::TooShort { length: l });
    }
    let mut seen_v = VertexSet::EMPTY;
    for (position, &vertex) in cand.vertices.iter().enumerate() {
        if vertex >= h.n() {
            out.push(Violation::VertexOutOfRange { position, vertex });
        } else if seen_v.contains(vertex) {
            out.push(Violation::RepeatedVertex { vertex });
        } else {
            seen_v.insert(vertex);
        }
    }
    let mut seen_e = std::collections::HashSet::new();
    for (position, &id) in cand.edge_ids.iter().enumerate() {
        if id >= h.num_edges() {
            out.push(Violation::EdgeOutOfRange { position, id });
        } else if !seen_e.insert(id) {
            out.push(Violation::RepeatedEdge { id });
        }
    }
    if l == 0 {
        return out;
    }
    for position in 0..l.min(cand.edge_ids.len()) {
        let (a, b) = (cand.vertices[position], cand.vertices[(position + 1) % l]);
        let id = cand.edge_ids[position];
        if a >= h.n() || b >= h.n() || id >= h.num_edges() {
            continue;
        }
        if !VertexSet::pair(a, b).is_subset(h.edge(id)) {
            out.push(Violation::PairNotCovered { position });
        }
    }
    out
}

impl fmt::Display for BergeCycle {
    /// `v0 e0 v1 e1 ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.vertices.iter().zip(&self.edge_ids).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v} {e}")?;
        }
        Ok(())
    }
}

impl FromStr for BergeCycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nums = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidCycle(format!("bad token `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if nums.len() % 2 != 0 {
            return Err(Error::InvalidCycle("odd number of tokens".into()));
        }
        Ok(BergeCycle {
            vertices: nums.iter().step_by(2).copied().collect(),
            edge_ids: nums.iter().skip(1).step_by(2).copied().collect(),
        })
    }
}
