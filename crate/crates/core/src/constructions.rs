//! Extremal and separating hypergraph families.
//!
//! Optional edges are always the lexicographically smallest qualifying
//! `r`-set, so every generator is deterministic.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    /// Two cliques sharing one vertex (n odd) or disjoint (n even).
    TwoCliques,
    /// All edges with at most one vertex in the larger side.
    SplitDominating,
    /// Tight cycle with its first edge removed.
    RegularMinusEdge,
    /// Cycle of `k` cliques `K_{r+1}^{(r)}` glued at hub vertices.
    CliqueNecklace,
    TightCycle,
}

/// A fully parameterised generator call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub n: usize,
    pub r: usize,
    /// Necklace length (only for [`ConstructionKind::CliqueNecklace`]).
    pub k: usize,
    /// Bridging edge for two cliques / extra multi-V2 edge for the split
    /// construction (n even only).
    pub optional_edge: bool,
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Hypergraph> {
        match self.kind {
            ConstructionKind::TwoCliques => construction1(self.n, self.r, self.optional_edge),
            ConstructionKind::SplitDominating => construction2(self.n, self.r, self.optional_edge),
            ConstructionKind::RegularMinusEdge => construction3(self.n, self.r),
            ConstructionKind::CliqueNecklace => construction4(self.k, self.r),
            ConstructionKind::TightCycle => tight_cycle(self.n, self.r),
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionKind::TwoCliques => "c1",
            ConstructionKind::SplitDominating => "c2",
            ConstructionKind::RegularMinusEdge => "c3",
            ConstructionKind::CliqueNecklace => "c4",
            ConstructionKind::TightCycle => "tight-cycle",
        })
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c1" | "two-cliques" => Ok(ConstructionKind::TwoCliques),
            "c2" | "split" => Ok(ConstructionKind::SplitDominating),
            "c3" | "regular-minus-edge" => Ok(ConstructionKind::RegularMinusEdge),
            "c4" | "necklace" => Ok(ConstructionKind::CliqueNecklace),
            "tight-cycle" | "tight" => Ok(ConstructionKind::TightCycle),
            other => Err(Error::BadParameters(format!("unknown construction `{other}`"))),
        }
    }
}

/// All `r`-subsets of `universe` in lexicographic order of their sorted
/// element lists.
fn r_subsets(universe: &[usize], r: usize) -> Vec<VertexSet> {
    fn go(u: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == r {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..u.len() {
            if u.len() - i < r - cur.len() {
                break;
            }
            cur.push(u[i]);
            go(u, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(universe, r, 0, &mut Vec::with_capacity(r), &mut out);
    out
}

fn check_small(n: usize, r: usize) -> Result<()> {
    if r < 2 || r > n || n > crate::MAX_VERTICES {
        return Err(Error::BadParameters(format!("n={n}, r={r}")));
    }
    Ok(())
}

fn check_low_uniformity(n: usize, r: usize) -> Result<()> {
    check_small(n, r)?;
    if r > (n - 1) / 2 {
        return Err(Error::BadParameters(format!(
            "needs r <= floor((n-1)/2) = {}, got r={r}",
            (n - 1) / 2
        )));
    }
    Ok(())
}

pub fn construction1(n: usize, r: usize, bridge: bool) -> Result<Hypergraph> {
    check_low_uniformity(n, r)?;
    if bridge && n % 2 == 1 {
        return Err(Error::BadParameters("the bridging edge needs n even".into()));
    }
    let (v1, v2): (Vec<usize>, Vec<usize>) = if n % 2 == 1 {
        let mid = (n - 1) / 2;
        ((0..=mid).collect(), (mid..n).collect())
    } else {
        ((0..n / 2).collect(), (n / 2..n).collect())
    };
    let mut edges = r_subsets(&v1, r);
    edges.extend(r_subsets(&v2, r));
    if bridge {
        let s1: VertexSet = v1.iter().copied().collect();
        let s2: VertexSet = v2.iter().copied().collect();
        let all: Vec<usize> = (0..n).collect();
        let joining = r_subsets(&all, r)
            .into_iter()
            .find(|e| e.intersects(s1) && e.intersects(s2))
            .expect("r >= 2 leaves room for a joining edge");
        edges.push(joining);
    }
    Hypergraph::from_sets(n, r, edges)
}

pub fn construction2(n: usize, r: usize, extra: bool) -> Result<Hypergraph> {
    check_low_uniformity(n, r)?;
    if extra && n % 2 == 1 {
        return Err(Error::BadParameters("the extra edge needs n even".into()));
    }
    let small = (n - 1) / 2;
    let v2 = VertexSet::full(n) - VertexSet::full(small);
    let all: Vec<usize> = (0..n).collect();
    let subsets = r_subsets(&all, r);
    let mut edges: Vec<VertexSet> = subsets.iter().copied().filter(|e| (*e & v2).len() <= 1).collect();
    if extra {
        edges.push(
            subsets
                .into_iter()
                .find(|e| (*e & v2).len() >= 2)
                .expect("V2 has at least two vertices"),
        );
    }
    Hypergraph::from_sets(n, r, edges)
}

pub fn construction3(n: usize, r: usize) -> Result<Hypergraph> {
    check_small(n, r)?;
    if 2 * r < n || r >= n {
        return Err(Error::BadParameters(format!("needs n/2 <= r < n, got n={n}, r={r}")));
    }
    let edges = (1..n).map(|i| window(i, r, n)).collect();
    Hypergraph::from_sets(n, r, edges)
}

pub fn construction4(k: usize, r: usize) -> Result<Hypergraph> {
    if k < 3 || r < 3 {
        return Err(Error::BadParameters(format!("needs k >= 3 and r >= 3, got k={k}, r={r}")));
    }
    let n = k * r;
    if n > crate::MAX_VERTICES {
        return Err(Error::BadParameters(format!("n = k*r = {n} exceeds 64")));
    }
    let mut edges = Vec::with_capacity(k * (r + 1));
    for i in 0..k {
        // hubs i*r and (i+1)*r, internal vertices in between
        let clique: Vec<usize> = (0..=r).map(|j| (i * r + j) % n).collect();
        let mut sorted = clique.clone();
        sorted.sort_unstable();
        edges.extend(r_subsets(&sorted, r));
    }
    Hypergraph::from_sets(n, r, edges)
}

pub fn tight_cycle(n: usize, r: usize) -> Result<Hypergraph> {
    check_small(n, r)?;
    if r >= n {
        return Err(Error::BadParameters(format!("tight cycle needs r < n, got n={n}, r={r}")));
    }
    Hypergraph::from_sets(n, r, (0..n).map(|i| window(i, r, n)).collect())
}

fn window(start: usize, r: usize, n: usize) -> VertexSet {
    (0..r).map(|j| (start + j) % n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::degree_threshold;

    #[test]
    fn two_cliques() {
        let h = construction1(9, 4, false).unwrap();
        assert_eq!(h.num_edges(), 10);
        assert_eq!(h.min_degree() as u64, degree_threshold(9, 4).unwrap() - 1);
        let h = construction1(10, 4, false).unwrap();
        assert_eq!(h.num_edges(), 10);
        assert_eq!(h.shadow2().edge_count(), 20);
        let h = construction1(10, 4, true).unwrap();
        assert_eq!(h.edge(10).to_vec(), vec![0, 1, 2, 5]);
        assert!(construction1(9, 4, true).is_err());
        assert!(construction1(9, 5, false).is_err());
    }

    #[test]
    fn split_construction() {
        let h = construction2(9, 4, false).unwrap();
        let v2 = VertexSet::full(9) - VertexSet::full(4);
        for v in v2 {
            assert_eq!(h.degree(v), Ok(4));
        }
        assert_eq!(h.min_degree(), 4);
        let h = construction2(10, 4, true).unwrap();
        let v2 = VertexSet::full(10) - VertexSet::full(4);
        assert_eq!(h.edges().iter().filter(|e| (**e & v2).len() >= 2).count(), 1);
    }

    #[test]
    fn regular_minus_edge() {
        let h = construction3(6, 3).unwrap();
        assert_eq!(h.num_edges(), 5);
        assert_eq!(h.min_degree(), 2);
        let h = construction3(8, 4).unwrap();
        assert_eq!((h.num_edges(), h.r()), (7, 4));
        assert!(construction3(8, 3).is_err());
    }

    #[test]
    fn necklace() {
        let h = construction4(3, 3).unwrap();
        assert_eq!((h.n(), h.num_edges()), (9, 12));
        let h = construction4(6, 3).unwrap();
        assert_eq!((h.n(), h.num_edges()), (18, 24));
        assert!(construction4(2, 3).is_err());
        assert!(construction4(3, 2).is_err());
    }

    #[test]
    fn necklace_shadow_is_glued_k4s() {
        let g = construction4(3, 3).unwrap().shadow2();
        // three K4 blocks sharing hubs 0, 3, 6
        assert_eq!(g.edge_count(), 18);
        for hub in [0, 3, 6] {
            assert_eq!(g.degree(hub), 6);
        }
        for internal in [1, 2, 4, 5, 7, 8] {
            assert_eq!(g.degree(internal), 3);
        }
    }

    #[test]
    fn tight_cycles() {
        let h = tight_cycle(6, 3).unwrap();
        assert_eq!(h.num_edges(), 6);
        assert!((0..6).all(|v| h.degree(v) == Ok(3)));
        let h = tight_cycle(5, 2).unwrap();
        assert_eq!(h.shadow2(), crate::SimpleGraph::cycle(5));
        assert!(tight_cycle(4, 4).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in [
            ConstructionKind::TwoCliques,
            ConstructionKind::SplitDominating,
            ConstructionKind::RegularMinusEdge,
            ConstructionKind::CliqueNecklace,
            ConstructionKind::TightCycle,
        ] {
            assert_eq!(k.to_string().parse::<ConstructionKind>(), Ok(k));
        }
    }
}
