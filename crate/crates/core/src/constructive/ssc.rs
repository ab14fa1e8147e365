//! Self-shift-complementary index sets and their coset structure.

use super::shift::shift_set;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `|A| = n/2` and `A ∩ (k + A) = ∅`.
pub fn is_k_ssc(a: VertexSet, k: usize, n: usize) -> bool {
    n >= 2
        && n % 2 == 0
        && n <= crate::MAX_VERTICES
        && a.is_subset(VertexSet::full(n))
        && a.len() == n / 2
        && !a.intersects(shift_set(a, k, n))
}

/// A `k`-SSC set `A ∋ 0` split into the blocks `O_0, ..., O_(d-1)`, where
/// `d = gcd(n, k)` and `O_j` is the coset of `⟨2d⟩` through whichever of `j`,
/// `j + d` lies in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SscDecomposition {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub set: VertexSet,
    pub blocks: Vec<VertexSet>,
}

impl SscDecomposition {
    /// The multiples of `2d` modulo `n`.
    pub fn double_subgroup(&self) -> VertexSet {
        (0..self.n).step_by(2 * self.d).collect()
    }
}

pub fn ssc_decompose(a: VertexSet, k: usize, n: usize) -> Result<SscDecomposition> {
    if !is_k_ssc(a, k, n) {
        return Err(Error::NotSsc(format!("{a:?} is not {k}-SSC modulo {n}")));
    }
    if !a.contains(0) {
        return Err(Error::NotSsc(format!("{a:?} does not contain 0")));
    }
    let d = gcd(n, k);
    if (n / d) % 2 != 0 {
        return Err(Error::SscInvariant(format!("n/d = {}/{d} is odd", n)));
    }
    if a.intersects(shift_set(a, d, n)) {
        return Err(Error::SscInvariant(format!("A meets d + A for d = {d}")));
    }
    let sub: VertexSet = (0..n).step_by(2 * d).collect();
    let mut blocks = Vec::with_capacity(d);
    let mut covered = VertexSet::EMPTY;
    for j in 0..d {
        let start = if a.contains(j) { j } else { j + d };
        let block = sub.rotate(start, n);
        if !block.is_subset(a) || block.intersects(covered) {
            return Err(Error::SscInvariant(format!("block {j} = {block:?} is not a part of A")));
        }
        covered = covered | block;
        blocks.push(block);
    }
    if covered != a {
        return Err(Error::SscInvariant("blocks do not cover A".into()));
    }
    Ok(SscDecomposition { n, k, d, set: a, blocks })
}

/// Decomposes `A - min(A)`; returns the rotation amount `min(A)` alongside.
pub fn ssc_decompose_anchored(a: VertexSet, k: usize, n: usize) -> Result<(usize, SscDecomposition)> {
    let m = a
        .min()
        .ok_or_else(|| Error::NotSsc("empty set".into()))?;
    Ok((m, ssc_decompose(a.rotate(n - m, n), k, n)?))
}
