use super::cycle::BergeCycle;
use super::search::{search_berge_cycle, Outcome, Search, SearchOptions};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// A hypergraph relabelled along a hamiltonian Berge cycle
/// `C = 0 e_0 1 e_1 ... (n-1) e_(n-1) 0`.
///
/// Positions `0..n` are the frame's vertex names; `labels[p]` is the vertex
/// of the source hypergraph sitting at position `p`. Edge ids are those of
/// the source hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianFrame {
    base: Hypergraph,
    cycle: Vec<usize>,
    extra: Vec<usize>,
    on_cycle: Vec<bool>,
    labels: Vec<usize>,
}

impl HamiltonianFrame {
    /// Frame whose position `p` is `c.vertices[p]`.
    pub fn from_cycle(h: &Hypergraph, c: &BergeCycle) -> Result<Self> {
        if c.len() != h.n() {
            return Err(Error::InvalidCycle(format!(
                "length {} is not hamiltonian for {} vertices",
                c.len(),
                h.n()
            )));
        }
        if let Err(v) = c.validate(h) {
            return Err(Error::InvalidCycle(format!("{v:?}")));
        }
        let mut to_pos = vec![0; h.n()];
        for (p, &v) in c.vertices.iter().enumerate() {
            to_pos[v] = p;
        }
        Self::assemble(h.relabel(&to_pos), c.edge_ids.clone(), c.vertices.clone())
    }

    /// Canonical frame: rotate so the smallest source vertex is position 0,
    /// then take the orientation with the lexicographically smaller vertex
    /// sequence.
    pub fn canonical(h: &Hypergraph, c: &BergeCycle) -> Result<Self> {
        let n = c.len();
        if n == 0 {
            return Err(Error::InvalidCycle("empty cycle".into()));
        }
        let idx = (0..n).min_by_key(|&i| c.vertices[i]).unwrap();
        let forward = BergeCycle {
            vertices: (0..n).map(|p| c.vertices[(idx + p) % n]).collect(),
            edge_ids: (0..n).map(|p| c.edge_ids[(idx + p) % n]).collect(),
        };
        let backward = BergeCycle {
            vertices: (0..n).map(|p| c.vertices[(idx + n - p) % n]).collect(),
            edge_ids: (0..n).map(|p| c.edge_ids[(idx + 2 * n - p - 1) % n]).collect(),
        };
        let pick = if backward.vertices < forward.vertices { backward } else { forward };
        Self::from_cycle(h, &pick)
    }

    /// Frame over a hypergraph already labelled in cycle order, i.e.
    /// `{i, i+1} ⊆ cycle_edges[i]`. Labels are the identity.
    pub fn from_parts(base: Hypergraph, cycle_edges: Vec<usize>) -> Result<Self> {
        let labels = (0..base.n()).collect();
        Self::assemble(base, cycle_edges, labels)
    }

    fn assemble(base: Hypergraph, cycle: Vec<usize>, labels: Vec<usize>) -> Result<Self> {
        let n = base.n();
        let c = BergeCycle::new((0..n).collect(), cycle.clone());
        if cycle.len() != n || !c.is_valid(&base) {
            return Err(Error::InvalidCycle(
                "cycle edges do not form 0 e_0 1 ... (n-1) e_(n-1) 0".into(),
            ));
        }
        let mut on_cycle = vec![false; base.num_edges()];
        for &e in &cycle {
            on_cycle[e] = true;
        }
        let extra = (0..base.num_edges()).filter(|&e| !on_cycle[e]).collect();
        Ok(HamiltonianFrame { base, cycle, extra, on_cycle, labels })
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn r(&self) -> usize {
        self.base.r()
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn edge(&self, id: usize) -> VertexSet {
        self.base.edge(id)
    }

    /// `e_i`, index taken mod n.
    pub fn cycle_edge(&self, i: usize) -> usize {
        self.cycle[i % self.n()]
    }

    pub fn cycle_edges(&self) -> &[usize] {
        &self.cycle
    }

    /// The extra edges ℰ (not on the cycle), ascending.
    pub fn extra_edges(&self) -> &[usize] {
        &self.extra
    }

    pub fn is_extra(&self, id: usize) -> bool {
        id < self.on_cycle.len() && !self.on_cycle[id]
    }

    /// ℰ_i: extra edges containing position `i`.
    pub fn extra_at(&self, i: usize) -> Vec<usize> {
        self.extra.iter().copied().filter(|&e| self.edge(e).contains(i)).collect()
    }

    /// U_i: union of ℰ_i.
    pub fn union_at(&self, i: usize) -> VertexSet {
        self.extra_at(i).into_iter().fold(VertexSet::EMPTY, |acc, e| acc | self.edge(e))
    }

    /// Number of extra edges containing both `x` and `y`.
    pub fn extra_codegree(&self, x: usize, y: usize) -> usize {
        let p = VertexSet::pair(x, y);
        self.extra.iter().filter(|&&e| p.is_subset(self.edge(e))).count()
    }

    /// The frame's own hamiltonian cycle.
    pub fn as_cycle(&self) -> BergeCycle {
        BergeCycle::new((0..self.n()).collect(), self.cycle.clone())
    }

    /// The same hypergraph read along the cycle from position `start`, in
    /// reverse direction if `reflect`. New position `p` is old position
    /// `start + p` (or `start - p`).
    pub fn reoriented(&self, start: usize, reflect: bool) -> HamiltonianFrame {
        let n = self.n();
        let old_of = |p: usize| if reflect { (start + n - p % n) % n } else { (start + p) % n };
        let mut new_of = vec![0; n];
        for p in 0..n {
            new_of[old_of(p)] = p;
        }
        let cycle = (0..n)
            .map(|p| if reflect { self.cycle[(old_of(p) + n - 1) % n] } else { self.cycle[old_of(p)] })
            .collect();
        let labels = (0..n).map(|p| self.labels[old_of(p)]).collect();
        HamiltonianFrame {
            base: self.base.relabel(&new_of),
            cycle,
            extra: self.extra.clone(),
            on_cycle: self.on_cycle.clone(),
            labels,
        }
    }

    /// Replaces `e_i` by the extra edge `e ⊇ {i, i+1}`; the old `e_i`
    /// becomes extra.
    pub fn swapped(&self, i: usize, e: usize) -> Result<HamiltonianFrame> {
        let n = self.n();
        if !self.is_extra(e) {
            return Err(Error::PreconditionViolated(format!("edge {e} is not extra")));
        }
        if !VertexSet::pair(i % n, (i + 1) % n).is_subset(self.edge(e)) {
            return Err(Error::PreconditionViolated(format!(
                "edge {e} does not contain {{{}, {}}}",
                i % n,
                (i + 1) % n
            )));
        }
        let mut cycle = self.cycle.clone();
        cycle[i % n] = e;
        Self::assemble(self.base.clone(), cycle, self.labels.clone())
    }

    /// Position of source vertex `label`.
    pub fn position_of(&self, label: usize) -> usize {
        self.labels.iter().position(|&l| l == label).expect("label belongs to the frame")
    }

    /// Rewrites a cycle given in this frame's positions into source labels.
    pub fn to_source(&self, c: &BergeCycle) -> BergeCycle {
        c.map_vertices(|p| self.labels[p])
    }

    /// Rewrites a cycle given in `other`'s positions into this frame's
    /// positions. Both frames must describe the same source hypergraph.
    pub fn translate_from(&self, other: &HamiltonianFrame, c: &BergeCycle) -> BergeCycle {
        let mut pos = vec![0; self.n()];
        for (p, &l) in self.labels.iter().enumerate() {
            pos[l] = p;
        }
        c.map_vertices(|p| pos[other.labels[p]])
    }
}

/// Exact: a canonical hamiltonian frame of `h`, if `h` is hamiltonian.
pub fn find_hamiltonian_frame(h: &Hypergraph) -> Option<HamiltonianFrame> {
    search_hamiltonian_frame(h, &SearchOptions::default()).outcome.found()
}

pub fn search_hamiltonian_frame(h: &Hypergraph, opts: &SearchOptions) -> Search<HamiltonianFrame> {
    if h.n() < 2 {
        return Search { outcome: Outcome::Absent, nodes: 0 };
    }
    let s = search_berge_cycle(h, h.n(), opts).expect("n is a valid length");
    let outcome = match s.outcome {
        Outcome::Found(c) => Outcome::Found(
            HamiltonianFrame::canonical(h, &c).expect("search witnesses are valid"),
        ),
        Outcome::Absent => Outcome::Absent,
        Outcome::Unknown => Outcome::Unknown,
    };
    Search { outcome, nodes: s.nodes }
}
