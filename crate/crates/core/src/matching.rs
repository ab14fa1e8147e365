//! Augmenting-path bipartite matching (Kuhn's algorithm).
//!
//! Left nodes are "demands" (vertex pairs, graph edges), right nodes are
//! hyperedge ids. Candidates are tried in the order given, so feeding them
//! in increasing id order makes the result deterministic with smallest-index
//! preference.

/// Incremental matching of left nodes `0..L` into right nodes `0..R`.
#[derive(Clone, Debug)]
pub struct Matching {
    left_to_right: Vec<Option<usize>>,
    right_to_left: Vec<Option<usize>>,
}

impl Matching {
    pub fn new(left: usize, right: usize) -> Self {
        Matching {
            left_to_right: vec![None; left],
            right_to_left: vec![None; right],
        }
    }

    pub fn partner(&self, left: usize) -> Option<usize> {
        self.left_to_right[left]
    }

    pub fn owner(&self, right: usize) -> Option<usize> {
        self.right_to_left[right]
    }

    pub fn size(&self) -> usize {
        self.left_to_right.iter().flatten().count()
    }

    pub fn ensure_left(&mut self, left: usize) {
        if self.left_to_right.len() < left {
            self.left_to_right.resize(left, None);
        }
    }

    /// Drops the assignment of `left`, if any.
    pub fn unmatch(&mut self, left: usize) {
        if let Some(r) = self.left_to_right[left].take() {
            self.right_to_left[r] = None;
        }
    }

    /// Tries to match `left` by an augmenting path. `candidates(x)` lists the
    /// right nodes left node `x` may use.
    pub fn augment<F, C>(&mut self, left: usize, candidates: &F) -> bool
    where
        F: Fn(usize) -> C,
        C: AsRef<[usize]>,
    {
        if self.left_to_right[left].is_some() {
            return true;
        }
        let mut visited = vec![false; self.right_to_left.len()];
        self.try_kuhn(left, candidates, &mut visited)
    }

    fn try_kuhn<F, C>(&mut self, left: usize, candidates: &F, visited: &mut [bool]) -> bool
    where
        F: Fn(usize) -> C,
        C: AsRef<[usize]>,
    {
        let options = candidates(left);
        let options = options.as_ref();
        // Prefer a free right node before re-routing others.
        for &r in options {
            if !visited[r] && self.right_to_left[r].is_none() {
                visited[r] = true;
                self.assign(left, r);
                return true;
            }
        }
        for &r in options {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let other = self.right_to_left[r].expect("free nodes handled above");
            if self.try_kuhn(other, candidates, visited) {
                self.assign(left, r);
                return true;
            }
        }
        false
    }

    fn assign(&mut self, left: usize, right: usize) {
        if let Some(old) = self.left_to_right[left] {
            self.right_to_left[old] = None;
        }
        self.left_to_right[left] = Some(right);
        self.right_to_left[right] = Some(left);
    }
}

/// Matches every left node `0..left` into distinct right nodes, or returns
/// `None` if no such (left-saturating) matching exists.
pub fn saturating_matching<F, C>(left: usize, right: usize, candidates: F) -> Option<Vec<usize>>
where
    F: Fn(usize) -> C,
    C: AsRef<[usize]>,
{
    let mut m = Matching::new(left, right);
    for x in 0..left {
        if !m.augment(x, &candidates) {
            return None;
        }
    }
    Some((0..left).map(|x| m.partner(x).unwrap()).collect())
}
