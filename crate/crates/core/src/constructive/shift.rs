//! The shifting function `S_s` and the cycles it produces.

use crate::error::{Error, Result};
use crate::oracle::{BergeCycle, HamiltonianFrame};
use crate::vertex_set::VertexSet;

/// `S_s(i)`: `i + s` if that stays below `n`, otherwise `i + s + 1 (mod n)`.
pub fn shift_map(i: usize, s: usize, n: usize) -> Result<usize> {
    if i >= n {
        return Err(Error::OutOfRange { value: i, n });
    }
    if s >= n {
        return Err(Error::OutOfRange { value: s, n });
    }
    Ok(if i + s < n { i + s } else { (i + s + 1) % n })
}

/// `A^{+s} = {(a + s) mod n : a ∈ A}`.
pub fn shift_set(a: VertexSet, s: usize, n: usize) -> VertexSet {
    (a & VertexSet::full(n)).rotate(s, n)
}

/// `S_s(A)`. Elements of `A` outside `0..n` are ignored.
pub fn shift_image(a: VertexSet, s: usize, n: usize) -> VertexSet {
    let a = a & VertexSet::full(n);
    let s = s % n;
    // 0..n-s-1 move up by s; n-s..n-1 wrap onto 1..s.
    let low = a & VertexSet::full(n - s);
    let high = a - low;
    let low_img = VertexSet::from_bits(low.bits() << s);
    let high_img = VertexSet::from_bits((high.bits() >> (n - s)) << 1);
    low_img | high_img
}

/// First `(f, j)` with `f ∈ ℰ_0`, `j ∈ f` and `S_s(j) ∈ e_0`, scanning
/// edges then vertices in increasing order.
pub fn find_shift_trigger(frame: &HamiltonianFrame, s: usize) -> Option<(usize, usize)> {
    let n = frame.n();
    if s == 0 || s + 2 > n {
        return None;
    }
    let e0 = frame.edge(frame.cycle_edge(0));
    frame.extra_at(0).into_iter().find_map(|f| {
        frame
            .edge(f)
            .iter()
            .find(|&j| e0.contains(shift_map(j, s, n).expect("j < n")))
            .map(|j| (f, j))
    })
}

/// The `(n - s + 1)`-cycle built from an extra edge `f ∋ 0, j` whose shifted
/// vertex `S_s(j)` lies in `e_0`.
pub fn shift_lemma_extract(frame: &HamiltonianFrame, s: usize, f: usize, j: usize) -> Result<BergeCycle> {
    let n = frame.n();
    if s == 0 || s + 2 > n {
        return Err(Error::PreconditionViolated(format!("shift {s} outside 1..={}", n.saturating_sub(2))));
    }
    if !frame.is_extra(f) {
        return Err(Error::PreconditionViolated(format!("edge {f} is not extra")));
    }
    let fs = frame.edge(f);
    if !fs.contains(0) || j >= n || !fs.contains(j) {
        return Err(Error::PreconditionViolated(format!("edge {f} does not contain both 0 and {j}")));
    }
    let target = shift_map(j, s, n)?;
    if !frame.edge(frame.cycle_edge(0)).contains(target) {
        return Err(Error::PreconditionViolated(format!("S_{s}({j}) = {target} is not in e_0")));
    }
    let e = |i: usize| frame.cycle_edge(i);
    let (vertices, edges): (Vec<usize>, Vec<usize>) = if j + s < n {
        if j == 0 {
            // 0 e_0 s e_s (s+1) ... (n-1) e_(n-1) 0
            let mut vs = vec![0];
            let mut es = vec![e(0)];
            for t in s..n {
                vs.push(t);
                es.push(e(t));
            }
            (vs, es)
        } else {
            // 0 f j e_(j-1) ... 1 e_0 (j+s) e_(j+s) ... (n-1) e_(n-1) 0
            let mut vs = vec![0];
            let mut es = vec![f];
            for t in (1..=j).rev() {
                vs.push(t);
                es.push(e(t - 1));
            }
            for t in j + s..n {
                vs.push(t);
                es.push(e(t));
            }
            (vs, es)
        }
    } else {
        // 0 e_0 i e_i (i+1) ... j f 0, with i = S_s(j) = j+s+1-n
        let i = target;
        let mut vs = vec![0];
        let mut es = vec![e(0)];
        for t in i..j {
            vs.push(t);
            es.push(e(t));
        }
        vs.push(j);
        es.push(f);
        (vs, es)
    };
    let c = BergeCycle::new(vertices, edges);
    debug_assert_eq!(c.len(), n - s + 1);
    if let Err(v) = c.validate(frame.base()) {
        return Err(Error::PreconditionViolated(format!("shift cycle invalid: {v:?}")));
    }
    Ok(c)
}
