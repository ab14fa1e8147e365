//! Regime-specific constructions for `r = n/2`, `n = 2r + 1` and `n = 2r + 2`.

use super::chord::{chord_to_cycle, find_k_chord};
use super::extract::Branch;
use super::pairs::match_pairs_to_edges;
use super::shift::{find_shift_trigger, shift_lemma_extract};
use super::ssc::{is_k_ssc, ssc_decompose};
use crate::error::{Error, Result};
use crate::oracle::{BergeCycle, HamiltonianFrame};
use crate::vertex_set::VertexSet;

fn union_of(frame: &HamiltonianFrame, edges: &[usize]) -> VertexSet {
    edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | frame.edge(e))
}

fn checked(frame: &HamiltonianFrame, c: BergeCycle, length: usize, what: &str) -> Result<BergeCycle> {
    if c.len() != length {
        return Err(Error::PreconditionViolated(format!("{what}: built length {} instead of {length}", c.len())));
    }
    match c.validate(frame.base()) {
        Ok(()) => Ok(c),
        Err(v) => Err(Error::PreconditionViolated(format!("{what}: invalid cycle {v:?}"))),
    }
}

/// Even-length cycles when `r = n/2` and some extra edge holds every other
/// vertex of the cycle. Tries every even rotation and both orientations for
/// a vertex `j ∈ e_0` with `2 ≤ j ≤ n-2`. Result is in `frame`'s positions.
pub fn case2_extract(frame: &HamiltonianFrame, length: usize) -> Result<(BergeCycle, Branch)> {
    let n = frame.n();
    if 2 * frame.r() != n {
        return Err(Error::PreconditionViolated(format!("needs r = n/2, got n={n}, r={}", frame.r())));
    }
    if length % 2 != 0 || length < 2 || length > n {
        return Err(Error::PreconditionViolated(format!("length {length} is not an even length in [2, {n}]")));
    }
    let evens: VertexSet = (0..n).step_by(2).collect();
    let odds = VertexSet::full(n) - evens;
    let e = frame
        .extra_edges()
        .iter()
        .copied()
        .find(|&e| frame.edge(e) == evens || frame.edge(e) == odds)
        .ok_or_else(|| Error::PreconditionViolated("no extra edge alternates along the cycle".into()))?;
    let parity = frame.edge(e).min().unwrap_or(0) % 2;
    for start in (parity..n).step_by(2) {
        for reflect in [false, true] {
            let f = frame.reoriented(start, reflect);
            debug_assert_eq!(f.edge(e), evens);
            let e0 = f.edge(f.cycle_edge(0));
            for j in e0.iter().filter(|&j| (2..=n - 2).contains(&j)) {
                if let Some((c, branch)) = case2_cycle(&f, e, j, length) {
                    return Ok((frame.translate_from(&f, &c), branch));
                }
            }
        }
    }
    Err(Error::PreconditionViolated(format!("no (a, b) parameters reach length {length}")))
}

fn case2_cycle(f: &HamiltonianFrame, e: usize, j: usize, length: usize) -> Option<(BergeCycle, Branch)> {
    let n = f.n();
    let c = |i: usize| f.cycle_edge(i % n);
    if j % 2 == 0 {
        // 0 e_0 j e_(j-1) ... (j-a) e (n-b) e_(n-b) ... (n-1) e_(n-1) 0
        for a in (0..j).step_by(2) {
            let Some(b) = length.checked_sub(a + 2) else { continue };
            if b >= n - j {
                continue;
            }
            let mut vs = vec![0];
            let mut es = vec![c(0)];
            for t in 0..=a {
                vs.push(j - t);
                if t < a {
                    es.push(c(j - t - 1));
                }
            }
            es.push(e);
            for v in n - b..n {
                vs.push(v);
                es.push(c(v));
            }
            let cyc = BergeCycle::new(vs, es);
            if cyc.is_valid(f.base()) {
                return Some((cyc, Branch::Case2Even));
            }
        }
    } else {
        // 1 e_1 ... a e (j+b) e_(j+b-1) ... j e_0 1
        for a in (2..j).step_by(2) {
            let Some(b) = length.checked_sub(a + 1) else { continue };
            if b == 0 || b > n - j {
                continue;
            }
            let mut vs: Vec<usize> = (1..=a).collect();
            let mut es: Vec<usize> = (1..a).map(c).collect();
            es.push(e);
            for t in (j..=j + b).rev() {
                vs.push(t % n);
                if t > j {
                    es.push(c(t - 1));
                }
            }
            es.push(c(0));
            let cyc = BergeCycle::new(vs, es);
            if cyc.is_valid(f.base()) {
                return Some((cyc, Branch::Case2Odd));
            }
        }
    }
    None
}

/// Cycles of length `length` for `n = 2r + 1`, anchored at position 0: a
/// chord inside `ℰ_0`, the shift lemma read in either direction, then the
/// shift lemma (or a chord of the old `e_0`) after swapping `e_0` with an
/// extra edge through `{0, 1}`. Result is in `frame`'s positions.
pub fn case3_extract(frame: &HamiltonianFrame, length: usize) -> Result<(BergeCycle, Branch)> {
    let n = frame.n();
    if n != 2 * frame.r() + 1 {
        return Err(Error::PreconditionViolated(format!("needs n = 2r + 1, got n={n}, r={}", frame.r())));
    }
    if length < 3 || length >= n {
        return Err(Error::PreconditionViolated(format!("length {length} outside 3..={}", n - 1)));
    }
    let k = length - 1;
    let s = n - k;
    if let Some((i, f)) = find_k_chord(frame, k, &frame.extra_at(0)) {
        return Ok((checked(frame, chord_to_cycle(frame, i, k, f)?, length, "chord")?, Branch::Chord));
    }
    let sides = [frame.clone(), frame.reoriented(0, true)];
    for g in &sides {
        if let Some((f, j)) = find_shift_trigger(g, s) {
            let c = frame.translate_from(g, &shift_lemma_extract(g, s, f, j)?);
            return Ok((checked(frame, c, length, "shift")?, Branch::Shift));
        }
    }
    for g in &sides {
        let old = g.cycle_edge(0);
        for e in g.extra_at(0).into_iter().filter(|&e| g.edge(e).contains(1)) {
            let sw = g.swapped(0, e)?;
            let c = if let Some((i, f)) = find_k_chord(&sw, k, &[old]) {
                chord_to_cycle(&sw, i, k, f)?
            } else if let Some((f, j)) = find_shift_trigger(&sw, s) {
                shift_lemma_extract(&sw, s, f, j)?
            } else {
                continue;
            };
            let c = frame.translate_from(&sw, &c);
            return Ok((checked(frame, c, length, "swap")?, Branch::Swap));
        }
    }
    Err(Error::PreconditionViolated(format!("no anchored construction reaches length {length}")))
}

/// Outcome of shrinking `ℰ_0` until its union has exactly `r + 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Case4Reduction {
    /// A `k`-chord `{i, i+k} ⊆ f` turned up on the way (positions of `frame`).
    Chord { frame: HamiltonianFrame, i: usize, f: usize },
    /// `ℰ'_0` and its union `U'_0`, in the positions of `frame` (the input
    /// frame, possibly reflected so that `1 ∈ U_0`).
    Reduced { frame: HamiltonianFrame, edges: Vec<usize>, union: VertexSet },
}

/// Shrinks `ℰ_0` (extra edges at position 0) to `ℰ'_0` with
/// `|∪ℰ'_0| = r + 1`, for `n = 2r + 2` and a missing length `k + 1`.
///
/// Fails with [`Error::PreconditionViolated`] when the sizes leave the
/// range in which the argument runs; in that range a shifted cycle of length
/// `k + 1` exists, which callers try first.
pub fn case4_reduce(frame: &HamiltonianFrame, k: usize) -> Result<Case4Reduction> {
    let n = frame.n();
    let r = frame.r();
    if n != 2 * r + 2 {
        return Err(Error::PreconditionViolated(format!("needs n = 2r + 2, got n={n}, r={r}")));
    }
    if k == 0 || k + 2 > n {
        return Err(Error::PreconditionViolated(format!("k = {k} outside 1..={}", n - 2)));
    }
    let mut f = frame.clone();
    let u0 = f.union_at(0);
    let mut star = f.extra_at(0);
    if let Some((i, e)) = find_k_chord(&f, k, &star) {
        return Ok(Case4Reduction::Chord { frame: f, i, f: e });
    }
    if u0.len() > r + 2 {
        if u0.len() != r + 3 || !u0.contains(n - 1) {
            return Err(Error::PreconditionViolated(format!("|U_0| = {} is too large", u0.len())));
        }
        if !u0.contains(1) {
            f = f.reoriented(0, true);
            star = f.extra_at(0);
        }
        let drop = *star
            .iter()
            .find(|&&e| f.edge(e).contains(1))
            .expect("1 lies in U_0 after orientation");
        star.retain(|&e| e != drop);
    }
    let ustar = union_of(&f, &star);
    if ustar.len() > r + 2 {
        return Err(Error::PreconditionViolated(format!("|U*_0| = {} exceeds r + 2", ustar.len())));
    }
    let reduced = if ustar.len() == r + 2 {
        let sources: Vec<usize> = ustar.iter().filter(|&i| ustar.contains((i + k) % n)).collect();
        if sources.len() < 2 {
            return Err(Error::PreconditionViolated("fewer than two k-pairs in U*_0".into()));
        }
        let (i1, i2) = (sources[0], sources[1]);
        let t: VertexSet = [i1, (i1 + k) % n, i2, (i2 + k) % n].into_iter().collect();
        match t.len() {
            3 => {
                let middle = if (i1 + k) % n == i2 { i2 } else { i1 };
                star.iter().copied().filter(|&e| !f.edge(e).contains(middle)).collect()
            }
            2 => {
                let (with_a, with_b): (Vec<usize>, Vec<usize>) = (
                    star.iter().copied().filter(|&e| f.edge(e).contains(i1)).collect(),
                    star.iter().copied().filter(|&e| f.edge(e).contains(i2)).collect(),
                );
                let removed = if with_a.len() <= with_b.len() { with_a } else { with_b };
                star.iter().copied().filter(|e| !removed.contains(e)).collect()
            }
            _ => return Err(Error::PreconditionViolated("four k-pair vertices but no chord".into())),
        }
    } else {
        star
    };
    let union = union_of(&f, &reduced);
    if union.len() != r + 1 {
        return Err(Error::PreconditionViolated(format!("reduced union has {} vertices", union.len())));
    }
    Ok(Case4Reduction::Reduced { frame: f, edges: reduced, union })
}

/// Cycles of length `k + 1` from the rigid structure of `U'_0`, given
/// `ℰ'_0 = edges` (all containing position 0) with union `U'_0` of size
/// `n/2`. Result is in `frame`'s positions.
pub fn case4_endgame(frame: &HamiltonianFrame, k: usize, edges: &[usize]) -> Result<(BergeCycle, Branch)> {
    let n = frame.n();
    let h = frame.base();
    let length = k + 1;
    let u = union_of(frame, edges);
    if 2 * u.len() != n || !u.contains(0) {
        return Err(Error::PreconditionViolated("U'_0 must have n/2 vertices including 0".into()));
    }
    if k == 0 || k + 2 > n {
        return Err(Error::PreconditionViolated(format!("k = {k} outside 1..={}", n - 2)));
    }
    if !is_k_ssc(u, k, n) {
        // some {i, i+k} ⊆ U'_0 is covered by an edge of ℰ'_0
        let i = u.iter().find(|&i| u.contains((i + k) % n)).expect("not SSC means a k-pair");
        let ids = match_pairs_to_edges(h, edges, &[(i, (i + k) % n)])?;
        let c = super::chord::chord_to_cycle(frame, i, k, ids[0])?;
        return Ok((checked(frame, c, length, "chord")?, Branch::Chord));
    }
    let dec = ssc_decompose(u, k, n)?;
    let d = dec.d;
    let m = (1..=n).find(|&m| u.contains((k + n - m) % n)).expect("U' is non-empty");
    let p = (1..=n).find(|&p| u.contains((k + p) % n)).expect("U' is non-empty");
    let (a, b, w) = ((k + n - m) % n, (k + p) % n, (n - (m - 1)) % n);
    let e = |i: usize| frame.cycle_edge(i % n);
    if a != b && b != w && a != w {
        // w e_w ... a, then a -> b -> w through ℰ'_0
        let ids = match_pairs_to_edges(h, edges, &[(a, b), (b, w)])?;
        let mut vs: Vec<usize> = (0..k).map(|t| (w + t) % n).collect();
        let mut es: Vec<usize> = (0..k - 1).map(|t| e(w + t)).collect();
        vs.push(b);
        es.extend(ids);
        let c = checked(frame, BergeCycle::new(vs, es), length, "m,p,d cycle")?;
        return Ok((c, Branch::SscMpd));
    }
    if 2 * k != n {
        if d < 3 {
            return Err(Error::PreconditionViolated(format!(
                "two-interval construction needs d >= 3, got d = {d}"
            )));
        }
        let interval = |s: usize| -> VertexSet { (0..d).map(|t| (s + t) % n).collect() };
        let i = (0..n)
            .find(|&i| interval(i).is_subset(u) && interval(i + 2 * d).is_subset(u))
            .ok_or_else(|| Error::SscInvariant("no two intervals of length d at distance 2d".into()))?;
        let (x, y) = ((i + d - 1) % n, (i + 2 * d) % n);
        let z = (y + 2) % n;
        let ids = match_pairs_to_edges(h, edges, &[(i, x), (y, z)])?;
        let mut vs = vec![i];
        let mut es = vec![ids[0]];
        for t in i + d - 1..i + 2 * d {
            vs.push(t % n);
            es.push(e(t));
        }
        vs.push(y);
        es.push(ids[1]);
        for t in i + 2 * d + 2..i + n {
            vs.push(t % n);
            es.push(e(t));
        }
        let c = checked(frame, BergeCycle::new(vs, es), length, "two-interval cycle")?;
        return Ok((c, Branch::SscIntervals));
    }
    ssc_half(frame, k, edges, w).map(|c| (c, Branch::SscHalf))
}

/// `k = d = n/2` with `U'_0` the interval starting at `w`.
fn ssc_half(frame: &HamiltonianFrame, k: usize, edges: &[usize], w: usize) -> Result<BergeCycle> {
    let n = frame.n();
    let base = frame.reoriented(w, false);
    let block = VertexSet::full(k);
    if union_of(&base, edges) != block {
        return Err(Error::SscInvariant("U'_0 is not an interval of length n/2".into()));
    }
    for orient in [base.clone(), base.reoriented(k - 1, true)] {
        let e = |i: usize| orient.cycle_edge(i % n);
        for j in 1..k.saturating_sub(1) {
            let ej = orient.edge(e(j));
            if ej.is_subset(block) {
                continue;
            }
            for x in ej.iter().filter(|&x| x >= k) {
                let s = x - k;
                if s + 3 > k {
                    continue;
                }
                let lo = j.saturating_sub(s + 1);
                let hi = (j - 1).min(k - 3 - s);
                if lo > hi {
                    continue;
                }
                let t = lo;
                let Ok(ids) = match_pairs_to_edges(orient.base(), edges, &[(t, t + s + 2), (j, 0)]) else {
                    continue;
                };
                let mut vs: Vec<usize> = (0..=t).collect();
                let mut es: Vec<usize> = (0..t).map(e).collect();
                es.push(ids[0]);
                for v in t + s + 2..=k + s {
                    vs.push(v);
                    if v < k + s {
                        es.push(e(v));
                    }
                }
                es.push(e(j));
                vs.push(j);
                es.push(ids[1]);
                let c = BergeCycle::new(vs, es);
                if let Ok(c) = checked(&orient, c, k + 1, "half-interval cycle") {
                    return Ok(frame.translate_from(&orient, &c));
                }
            }
        }
    }
    Err(Error::PreconditionViolated("no cycle edge e_j leaves U'_0 with a usable vertex".into()))
}
