//! Random hypergraphs with a planted hamiltonian Berge cycle.
//!
//! The skeleton is a tight cycle read along a random vertex order; further
//! distinct random `r`-sets are added until a target is met. Every added set
//! goes through a vertex that is still below target, chosen uniformly, with
//! its other `r - 1` vertices uniform.

use crate::error::{Error, Result};
use crate::hypergraph::{binomial, Hypergraph};
use crate::oracle::{BergeCycle, HamiltonianFrame};
use crate::vertex_set::VertexSet;
use rand::seq::{index, SliceRandom};
use rand::Rng;
use std::collections::HashSet;

/// What the extra (off-cycle) edges must achieve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraTarget {
    /// Exactly this many extra edges, through uniformly chosen vertices.
    Total(usize),
    /// At least `count` extra edges through the cycle's first vertex.
    AtFirstVertex(usize),
    /// Every vertex in at least this many extra edges.
    EveryVertex(usize),
    /// Every vertex of degree at least this (cycle edges included).
    MinDegree(usize),
}

#[derive(Clone, Debug)]
pub struct PlantedSample {
    /// The hypergraph in source labels, edges in shuffled order.
    pub hypergraph: Hypergraph,
    /// The planted cycle in source labels.
    pub cycle: BergeCycle,
    pub frame: HamiltonianFrame,
}

pub fn sample_planted<R: Rng + ?Sized>(n: usize, r: usize, target: ExtraTarget, rng: &mut R) -> Result<PlantedSample> {
    if n > crate::MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    if r < 2 || r >= n {
        return Err(Error::BadUniformity { n, r });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut sets: Vec<VertexSet> = (0..n).map(|i| (0..r).map(|t| order[(i + t) % n]).collect()).collect();
    let mut seen: HashSet<VertexSet> = sets.iter().copied().collect();
    let mut extra = vec![0usize; n];
    let mut degree = vec![r; n];

    let through = binomial(n as u64 - 1, r as u64 - 1) as usize;
    let need = |v: usize, extra: &[usize], degree: &[usize]| -> usize {
        match target {
            ExtraTarget::Total(_) => 0,
            ExtraTarget::AtFirstVertex(c) => {
                if v == order[0] {
                    c.saturating_sub(extra[v])
                } else {
                    0
                }
            }
            ExtraTarget::EveryVertex(c) => c.saturating_sub(extra[v]),
            ExtraTarget::MinDegree(d) => d.saturating_sub(degree[v]),
        }
    };
    let max_per_vertex = match target {
        ExtraTarget::Total(_) => 0,
        ExtraTarget::AtFirstVertex(c) | ExtraTarget::EveryVertex(c) => c,
        ExtraTarget::MinDegree(d) => d.saturating_sub(r),
    };
    // cycle edges through a vertex are at most r, so extras can reach the
    // target only if enough r-sets pass through it
    if max_per_vertex + r > through {
        return Err(Error::BadParameters(format!(
            "target needs {max_per_vertex} extra edges at a vertex, only {} r-sets are available",
            through.saturating_sub(r)
        )));
    }
    if let ExtraTarget::Total(m) = target {
        let total = binomial(n as u64, r as u64) as usize;
        if m + n > total {
            return Err(Error::BadParameters(format!("{m} extra edges do not fit among {total} r-sets")));
        }
    }

    let mut add_through = |v: usize, sets: &mut Vec<VertexSet>, extra: &mut [usize], degree: &mut [usize], rng: &mut R| {
        loop {
            let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let mut e = VertexSet::singleton(v);
            for i in index::sample(rng, n - 1, r - 1) {
                e.insert(others[i]);
            }
            if seen.insert(e) {
                for u in e {
                    extra[u] += 1;
                    degree[u] += 1;
                }
                sets.push(e);
                return;
            }
        }
    };

    match target {
        ExtraTarget::Total(m) => {
            for _ in 0..m {
                let v = rng.gen_range(0..n);
                if extra[v] + r >= through {
                    // v is saturated; fall back to the least covered vertex
                    let w = (0..n).min_by_key(|&u| extra[u]).expect("n > 0");
                    add_through(w, &mut sets, &mut extra, &mut degree, rng);
                } else {
                    add_through(v, &mut sets, &mut extra, &mut degree, rng);
                }
            }
        }
        _ => loop {
            let below: Vec<usize> = (0..n).filter(|&v| need(v, &extra, &degree) > 0).collect();
            if below.is_empty() {
                break;
            }
            let v = below[rng.gen_range(0..below.len())];
            add_through(v, &mut sets, &mut extra, &mut degree, rng);
        },
    }

    let mut ids: Vec<usize> = (0..sets.len()).collect();
    ids.shuffle(rng);
    let mut slot = vec![0; sets.len()];
    for (new, &old) in ids.iter().enumerate() {
        slot[old] = new;
    }
    let shuffled: Vec<VertexSet> = ids.iter().map(|&old| sets[old]).collect();
    let hypergraph = Hypergraph::from_sets(n, r, shuffled)?;
    let cycle = BergeCycle::new(order.clone(), (0..n).map(|i| slot[i]).collect());
    let frame = HamiltonianFrame::from_cycle(&hypergraph, &cycle)?;
    Ok(PlantedSample { hypergraph, cycle, frame })
}
