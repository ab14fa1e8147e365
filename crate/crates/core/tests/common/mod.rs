#![allow(dead_code)]

use berge_core::constructive::{gcd, Regime};
use berge_core::oracle::BergeCycle;
use berge_core::sample::{sample_planted, ExtraTarget};
use berge_core::{HamiltonianFrame, Hypergraph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Brute force: every ordering of `l` distinct vertices starting at its
/// minimum, then every injective choice of covering edges.
pub fn naive_has_cycle(h: &Hypergraph, l: usize) -> bool {
    fn edges(h: &Hypergraph, seq: &[usize], pos: usize, used: &mut Vec<usize>) -> bool {
        let l = seq.len();
        if pos == l {
            return true;
        }
        let (a, b) = (seq[pos], seq[(pos + 1) % l]);
        for e in 0..h.num_edges() {
            if used.contains(&e) || !h.edge(e).contains(a) || !h.edge(e).contains(b) {
                continue;
            }
            used.push(e);
            if edges(h, seq, pos + 1, used) {
                return true;
            }
            used.pop();
        }
        false
    }
    fn orders(h: &Hypergraph, l: usize, seq: &mut Vec<usize>) -> bool {
        if seq.len() == l {
            return edges(h, seq, 0, &mut Vec::new());
        }
        for v in seq[0] + 1..h.n() {
            if !seq.contains(&v) {
                seq.push(v);
                if orders(h, l, seq) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    (0..h.n()).any(|s| orders(h, l, &mut vec![s]))
}

/// Edge ids of `c` are distinct, vertices distinct, each edge covers its pair.
pub fn independent_validate(h: &Hypergraph, c: &BergeCycle) -> bool {
    let l = c.vertices.len();
    if l < 2 || c.edge_ids.len() != l {
        return false;
    }
    let mut vs = c.vertices.clone();
    vs.sort_unstable();
    vs.dedup();
    let mut es = c.edge_ids.clone();
    es.sort_unstable();
    es.dedup();
    vs.len() == l
        && es.len() == l
        && (0..l).all(|i| {
            let e = c.edge_ids[i];
            e < h.num_edges() && h.edge(e).contains(c.vertices[i]) && h.edge(e).contains(c.vertices[(i + 1) % l])
        })
}

pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, r: usize, m: usize) -> Hypergraph {
    let mut sets: Vec<VertexSet> = Vec::new();
    let total = (0u64..1 << n).filter(|b| b.count_ones() as usize == r).count();
    while sets.len() < m.min(total) {
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(rng);
        let e: VertexSet = vs[..r].iter().copied().collect();
        if !sets.contains(&e) {
            sets.push(e);
        }
    }
    Hypergraph::from_sets(n, r, sets).unwrap()
}

/// All k-SSC subsets of `Z_n` containing 0, by enumerating every
/// `n/2`-subset through 0 and testing the definition directly.
pub fn all_ssc_sets(n: usize, k: usize) -> Vec<VertexSet> {
    let half = n / 2;
    let mut out = Vec::new();
    for rest in 0u64..1 << (n - 1) {
        if rest.count_ones() as usize != half - 1 {
            continue;
        }
        let bits = 1 | (rest << 1);
        let a = VertexSet::from_bits(bits);
        if a.iter().all(|x| !a.contains((x + k) % n)) {
            out.push(a);
        }
    }
    out
}

/// A random k-SSC set through 0 built from the coset description, or
/// `None` when `n / gcd(n, k)` is odd.
pub fn random_ssc<R: Rng>(rng: &mut R, n: usize, k: usize) -> Option<VertexSet> {
    let d = gcd(n, k);
    if (n / d) % 2 != 0 {
        return None;
    }
    let mut a = VertexSet::EMPTY;
    for j in 0..d {
        let start = if j == 0 || rng.gen_bool(0.5) { j } else { j + d };
        for t in (0..n).step_by(2 * d) {
            a.insert((start + t) % n);
        }
    }
    Some(a)
}

/// Tight cycle along positions plus `extras` (duplicates of windows are
/// dropped), relabelled through a random permutation. Returns the source
/// hypergraph and the frame.
pub fn planted_frame<R: Rng>(rng: &mut R, n: usize, r: usize, extras: &[VertexSet]) -> (Hypergraph, HamiltonianFrame) {
    let mut sets: Vec<VertexSet> = (0..n).map(|i| (0..r).map(|t| (i + t) % n).collect()).collect();
    for &e in extras {
        if !sets.contains(&e) {
            sets.push(e);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let relabelled: Vec<VertexSet> = sets.iter().map(|e| e.iter().map(|v| perm[v]).collect()).collect();
    let h = Hypergraph::from_sets(n, r, relabelled).unwrap();
    let cycle = BergeCycle::new(perm.clone(), (0..n).collect());
    let frame = HamiltonianFrame::from_cycle(&h, &cycle).unwrap();
    (h, frame)
}

fn random_subset_through_zero<R: Rng>(rng: &mut R, pool: &[usize], size: usize) -> VertexSet {
    let mut p: Vec<usize> = pool.iter().copied().filter(|&v| v != 0).collect();
    p.shuffle(rng);
    let mut e: VertexSet = p[..size - 1].iter().copied().collect();
    e.insert(0);
    e
}

/// `count` distinct r-sets through 0 inside `u`.
fn packed<R: Rng>(rng: &mut R, u: VertexSet, r: usize, count: usize) -> Vec<VertexSet> {
    let pool = u.to_vec();
    let mut out = Vec::new();
    for _ in 0..1000 {
        let e = random_subset_through_zero(rng, &pool, r);
        if !out.contains(&e) {
            out.push(e);
        }
        if out.len() == count {
            break;
        }
    }
    out
}

/// A frame in the given regime meeting its extra-edge bar literally.
/// Even `variant`s sample uniformly; odd ones pack the extra edges into a
/// small union so that chords are scarce.
pub fn regime_frame<R: Rng>(rng: &mut R, n: usize, r: usize, variant: usize) -> (Hypergraph, HamiltonianFrame) {
    let regime = Regime::classify(n, r).expect("regime");
    let bar = regime.extra_edge_bar(r);
    if variant % 2 == 0 || regime == Regime::Small {
        let target = match regime {
            Regime::Chords | Regime::Half => ExtraTarget::Total(bar + rng.gen_range(0..2)),
            Regime::OddNear | Regime::EvenNear => ExtraTarget::AtFirstVertex(bar),
            Regime::Small => ExtraTarget::EveryVertex(bar),
        };
        let s = sample_planted(n, r, target, rng).unwrap();
        return (s.hypergraph, s.frame);
    }
    let extras = match regime {
        Regime::Chords => {
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            vec![vs[..r].iter().copied().collect()]
        }
        Regime::Half => vec![(0..n).step_by(2).collect()],
        Regime::OddNear => {
            let mut others: Vec<usize> = (1..n).collect();
            others.shuffle(rng);
            let size = if r >= bar { r + rng.gen_range(1..=2) } else { r + 2 };
            let mut u: VertexSet = others[..size - 1].iter().copied().collect();
            u.insert(0);
            packed(rng, u, r, bar)
        }
        Regime::EvenNear => {
            let k = rng.gen_range(1..n);
            let u = match random_ssc(rng, n, k) {
                Some(a) if r >= bar => a,
                _ => {
                    let mut others: Vec<usize> = (1..n).collect();
                    others.shuffle(rng);
                    let mut u: VertexSet = others[..r + 1].iter().copied().collect();
                    u.insert(0);
                    u
                }
            };
            packed(rng, u, r, bar)
        }
        Regime::Small => unreachable!(),
    };
    planted_frame(rng, n, r, &extras)
}
