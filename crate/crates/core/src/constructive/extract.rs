//! The extraction driver: classifies `(n, r)`, checks the extra-edge
//! hypotheses and tries the constructive branches in order for each length.

use super::cases::{case2_extract, case3_extract, case4_endgame, case4_reduce, Case4Reduction};
use super::chord::{chord_to_cycle, find_k_chord};
use super::compat::{build_compat_graph, lift_graph_cycle, triangle_augmentations, CompatGraph};
use super::shift::{find_shift_trigger, shift_lemma_extract};
use crate::error::{Error, Result};
use crate::oracle::{search_berge_cycle, search_graph_cycle, BergeCycle, HamiltonianFrame, Outcome, SearchOptions};
use crate::vertex_set::VertexSet;
use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Chord,
    Shift,
    Swap,
    SscMpd,
    SscIntervals,
    SscHalf,
    Case2Even,
    Case2Odd,
    CompatLift,
    OracleFallback,
    TrivialN,
    TwoCycle,
}

impl Branch {
    pub const ALL: [Branch; 12] = [
        Branch::Chord,
        Branch::Shift,
        Branch::Swap,
        Branch::SscMpd,
        Branch::SscIntervals,
        Branch::SscHalf,
        Branch::Case2Even,
        Branch::Case2Odd,
        Branch::CompatLift,
        Branch::OracleFallback,
        Branch::TrivialN,
        Branch::TwoCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Branch::Chord => "CHORD",
            Branch::Shift => "SHIFT",
            Branch::Swap => "SWAP",
            Branch::SscMpd => "SSC_MPD",
            Branch::SscIntervals => "SSC_INTERVALS",
            Branch::SscHalf => "SSC_HALF",
            Branch::Case2Even => "CASE2_EVEN",
            Branch::Case2Odd => "CASE2_ODD",
            Branch::CompatLift => "COMPAT_LIFT",
            Branch::OracleFallback => "ORACLE_FALLBACK",
            Branch::TrivialN => "TRIVIAL_N",
            Branch::TwoCycle => "TWO_CYCLE",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Branch::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse { line: 0, message: format!("unknown branch `{s}`") })
    }
}

/// Position of `r` relative to `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `r > n/2`
    Chords,
    /// `r = n/2`
    Half,
    /// `n = 2r + 1`
    OddNear,
    /// `n = 2r + 2`
    EvenNear,
    /// `n ∈ {2r + 3, 2r + 4}`
    Small,
}

/// Smallest `n` for which the small regime is claimed.
pub const SMALL_REGIME_MIN_N: usize = 19;

impl Regime {
    pub fn classify(n: usize, r: usize) -> Option<Regime> {
        if r == 0 || r >= n {
            return None;
        }
        match n {
            _ if 2 * r > n => Some(Regime::Chords),
            _ if 2 * r == n => Some(Regime::Half),
            _ if n == 2 * r + 1 => Some(Regime::OddNear),
            _ if n == 2 * r + 2 => Some(Regime::EvenNear),
            _ if n == 2 * r + 3 || n == 2 * r + 4 => Some(Regime::Small),
            _ => None,
        }
    }

    /// The extra-edge count a vertex must reach: `c_r` for the first four
    /// regimes (some vertex), `5(r-1)+2` for the small regime (every vertex).
    pub fn extra_edge_bar(self, r: usize) -> usize {
        match self {
            Regime::Chords | Regime::Half => 1,
            Regime::OddNear | Regime::EvenNear => 6,
            Regime::Small => 5 * (r - 1) + 2,
        }
    }

    /// Whether the bar applies to every vertex rather than some vertex.
    pub fn every_vertex(self) -> bool {
        self == Regime::Small
    }

    pub fn describe(self) -> &'static str {
        match self {
            Regime::Chords => "r > n/2, some vertex in c_r = 1 extra edge",
            Regime::Half => "r = n/2, some vertex in c_r = 1 extra edge",
            Regime::OddNear => "n = 2r+1, some vertex in c_r = 6 extra edges",
            Regime::EvenNear => "n = 2r+2, some vertex in c_r = 6 extra edges",
            Regime::Small => "n in {2r+3, 2r+4}, n >= 19, every vertex in 5(r-1)+2 extra edges",
        }
    }
}

/// The regime a frame falls in and the positions meeting its bar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub regime: Regime,
    pub bar: usize,
    /// Positions with at least `bar` extra edges, ascending.
    pub anchors: Vec<usize>,
}

pub fn check_hypotheses(frame: &HamiltonianFrame) -> Result<Hypotheses> {
    let (n, r) = (frame.n(), frame.r());
    let regime = Regime::classify(n, r).ok_or_else(|| {
        Error::HypothesesNotMet(format!("n = {n}, r = {r}: needs r >= floor((n-1)/2) - 1 and r < n"))
    })?;
    if regime == Regime::Small && n < SMALL_REGIME_MIN_N {
        return Err(Error::HypothesesNotMet(format!(
            "n = {n}, r = {r} is in the small regime, which needs n >= {SMALL_REGIME_MIN_N}"
        )));
    }
    let bar = regime.extra_edge_bar(r);
    let counts: Vec<usize> = (0..n).map(|v| frame.extra_at(v).len()).collect();
    let anchors: Vec<usize> = (0..n).filter(|&v| counts[v] >= bar).collect();
    if regime.every_vertex() {
        if let Some(v) = (0..n).find(|&v| counts[v] < bar) {
            return Err(Error::HypothesesNotMet(format!(
                "vertex {} lies in {} extra edges, below 5(r-1)+2 = {bar} ({})",
                frame.labels()[v],
                counts[v],
                regime.describe()
            )));
        }
    } else if anchors.is_empty() {
        let best = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap_or(0);
        return Err(Error::HypothesesNotMet(format!(
            "no vertex lies in c_r = {bar} extra edges; best is vertex {} with {} ({})",
            frame.labels()[best],
            counts[best],
            regime.describe()
        )));
    }
    Ok(Hypotheses { regime, bar, anchors })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Run the generic branches and then the exact oracle when the
    /// hypotheses fail or every constructive branch misses.
    pub allow_fallback: bool,
    /// Limits for graph-cycle searches and the oracle fallback.
    pub search: SearchOptions,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions { allow_fallback: false, search: SearchOptions::capped(5_000_000) }
    }
}

/// One extracted length. The witness is in source vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub length: usize,
    pub branch: Branch,
    pub witness: BergeCycle,
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} BRANCH {} WITNESS {}", self.length, self.branch, self.witness)
    }
}

impl FromStr for TraceRecord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse { line: 0, message: format!("{m} in trace line `{s}`") };
        let (head, witness) = s.split_once(" WITNESS ").ok_or_else(|| bad("missing WITNESS"))?;
        let (length, branch) = head.split_once(" BRANCH ").ok_or_else(|| bad("missing BRANCH"))?;
        let length = length.trim().parse().map_err(|_| bad("bad length"))?;
        Ok(TraceRecord { length, branch: branch.trim().parse()?, witness: witness.parse()? })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtractionTrace {
    pub records: Vec<TraceRecord>,
}

impl ExtractionTrace {
    pub fn count(&self, branch: Branch) -> usize {
        self.records.iter().filter(|r| r.branch == branch).count()
    }
}

impl fmt::Display for ExtractionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for ExtractionTrace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let records = s
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                l.parse().map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse { line: i + 1, message },
                    other => other,
                })
            })
            .collect::<Result<_>>()?;
        Ok(ExtractionTrace { records })
    }
}

/// Extraction state for one frame; caches the reoriented frames and the
/// compatible graphs shared by all lengths.
pub struct Extractor<'a> {
    frame: &'a HamiltonianFrame,
    hypotheses: Option<Hypotheses>,
    regime: Option<Regime>,
    opts: ExtractOptions,
    oriented: OnceCell<Vec<HamiltonianFrame>>,
    compat: OnceCell<CompatGraph>,
    augmented: OnceCell<Vec<CompatGraph>>,
}

impl<'a> Extractor<'a> {
    /// Fails with [`Error::HypothesesNotMet`] unless the hypotheses hold or
    /// the fallback is allowed.
    pub fn new(frame: &'a HamiltonianFrame, opts: ExtractOptions) -> Result<Self> {
        let hypotheses = match check_hypotheses(frame) {
            Ok(h) => Some(h),
            Err(_) if opts.allow_fallback => None,
            Err(e) => return Err(e),
        };
        Ok(Extractor {
            frame,
            regime: Regime::classify(frame.n(), frame.r()),
            hypotheses,
            opts,
            oriented: OnceCell::new(),
            compat: OnceCell::new(),
            augmented: OnceCell::new(),
        })
    }

    pub fn hypotheses(&self) -> Option<&Hypotheses> {
        self.hypotheses.as_ref()
    }

    pub fn extract(&self, length: usize) -> Result<TraceRecord> {
        let frame = self.frame;
        let n = frame.n();
        if length < 2 || length > n {
            return Err(Error::LengthOutOfRange { length, lo: 2, hi: n });
        }
        let found = if length == n {
            Some((frame.as_cycle(), Branch::TrivialN))
        } else if length == 2 {
            two_cycle(frame).map(|c| (c, Branch::TwoCycle))
        } else {
            self.constructive(length)?
        };
        let (cycle, branch) = match found {
            Some(hit) => hit,
            None if self.opts.allow_fallback => match search_berge_cycle(frame.base(), length, &self.opts.search)?.outcome {
                Outcome::Found(c) => (c, Branch::OracleFallback),
                _ => return Err(Error::ExtractionFailed { length }),
            },
            None => return Err(Error::ExtractionFailed { length }),
        };
        if cycle.len() != length {
            return Err(Error::InvalidCycle(format!("{branch} built length {} for {length}", cycle.len())));
        }
        if let Err(v) = cycle.validate(frame.base()) {
            return Err(Error::InvalidCycle(format!("{branch} built an invalid cycle: {v:?}")));
        }
        Ok(TraceRecord { length, branch, witness: frame.to_source(&cycle) })
    }

    /// Anchor positions: those meeting the bar first, then the rest.
    fn anchor_order(&self) -> Vec<usize> {
        let n = self.frame.n();
        let mut order = self.hypotheses.as_ref().map(|h| h.anchors.clone()).unwrap_or_default();
        let rest: Vec<usize> = (0..n).filter(|v| !order.contains(v)).collect();
        order.extend(rest);
        order
    }

    /// Anchors for the regime-specific arguments.
    fn regime_anchors(&self) -> Vec<usize> {
        match &self.hypotheses {
            Some(h) if !h.regime.every_vertex() => h.anchors.clone(),
            _ => (0..self.frame.n()).filter(|&v| !self.frame.extra_at(v).is_empty()).collect(),
        }
    }

    fn orientation(&self, start: usize, reflect: bool) -> &HamiltonianFrame {
        let all = self.oriented.get_or_init(|| {
            (0..self.frame.n())
                .flat_map(|v| [self.frame.reoriented(v, false), self.frame.reoriented(v, true)])
                .collect()
        });
        &all[2 * start + usize::from(reflect)]
    }

    fn back(&self, from: &HamiltonianFrame, c: BergeCycle, branch: Branch) -> Option<(BergeCycle, Branch)> {
        Some((self.frame.translate_from(from, &c), branch))
    }

    fn constructive(&self, length: usize) -> Result<Option<(BergeCycle, Branch)>> {
        let frame = self.frame;
        let n = frame.n();
        let k = length - 1;
        let s = n - k;

        if let Some((i, f)) = find_k_chord(frame, k, frame.extra_edges()) {
            return Ok(Some((chord_to_cycle(frame, i, k, f)?, Branch::Chord)));
        }

        let anchors = self.anchor_order();
        for &a in &anchors {
            for reflect in [false, true] {
                let g = self.orientation(a, reflect);
                if let Some((f, j)) = find_shift_trigger(g, s) {
                    return Ok(self.back(g, shift_lemma_extract(g, s, f, j)?, Branch::Shift));
                }
            }
        }

        if let Some(hit) = self.swap(k, s)? {
            return Ok(Some(hit));
        }

        match self.regime {
            Some(Regime::Half) if length % 2 == 0 => Ok(case2_extract(frame, length).ok()),
            Some(Regime::OddNear) => {
                for a in self.regime_anchors() {
                    let g = self.orientation(a, false);
                    if let Ok((c, b)) = case3_extract(g, length) {
                        return Ok(self.back(g, c, b));
                    }
                }
                Ok(None)
            }
            Some(Regime::EvenNear) => Ok(self.case4(k)),
            Some(Regime::Small) => self.compat_lift(length),
            _ => Ok(None),
        }
    }

    /// Swaps `e_i` for an extra edge through `{i, i+1}`, then tries a chord
    /// of the old `e_i` and the shift lemma anchored at either end.
    fn swap(&self, k: usize, s: usize) -> Result<Option<(BergeCycle, Branch)>> {
        let frame = self.frame;
        let n = frame.n();
        for i in 0..n {
            let pair = VertexSet::pair(i, (i + 1) % n);
            let old = frame.cycle_edge(i);
            for &e in frame.extra_edges().iter().filter(|&&e| pair.is_subset(frame.edge(e))) {
                let sw = frame.swapped(i, e)?;
                if let Some((p, f)) = find_k_chord(&sw, k, &[old]) {
                    return Ok(self.back(&sw, chord_to_cycle(&sw, p, k, f)?, Branch::Swap));
                }
                for (start, reflect) in [(i, false), ((i + 1) % n, true)] {
                    let g = sw.reoriented(start, reflect);
                    if let Some((f, j)) = find_shift_trigger(&g, s) {
                        return Ok(self.back(&g, shift_lemma_extract(&g, s, f, j)?, Branch::Swap));
                    }
                }
            }
        }
        Ok(None)
    }

    fn case4(&self, k: usize) -> Option<(BergeCycle, Branch)> {
        for a in self.regime_anchors() {
            for reflect in [false, true] {
                let g = self.orientation(a, reflect);
                match case4_reduce(g, k) {
                    Ok(Case4Reduction::Chord { frame, i, f }) => {
                        if let Ok(c) = chord_to_cycle(&frame, i, k, f) {
                            return self.back(&frame, c, Branch::Chord);
                        }
                    }
                    Ok(Case4Reduction::Reduced { frame, edges, .. }) => {
                        if let Ok((c, b)) = case4_endgame(&frame, k, &edges) {
                            return self.back(&frame, c, b);
                        }
                    }
                    Err(_) => {}
                }
            }
        }
        None
    }

    /// A graph cycle of the compatible graph (or of one of its triangle
    /// augmentations) lifted to a Berge cycle.
    fn compat_lift(&self, length: usize) -> Result<Option<(BergeCycle, Branch)>> {
        let frame = self.frame;
        let g = self.compat.get_or_init(|| build_compat_graph(frame));
        if let Some(c) = self.lift_from(g, length)? {
            return Ok(Some((c, Branch::CompatLift)));
        }
        let augmented = self.augmented.get_or_init(|| triangle_augmentations(frame, g));
        for g2 in augmented {
            if let Some(c) = self.lift_from(g2, length)? {
                return Ok(Some((c, Branch::CompatLift)));
            }
        }
        Ok(None)
    }

    fn lift_from(&self, g: &CompatGraph, length: usize) -> Result<Option<BergeCycle>> {
        match search_graph_cycle(g.graph(), length, &self.opts.search)?.outcome {
            Outcome::Found(d) => Ok(lift_graph_cycle(self.frame.base(), g, &d).ok()),
            _ => Ok(None),
        }
    }
}

/// The first pair of edges `a < b` sharing two vertices, as a 2-cycle on the
/// two smallest shared vertices.
fn two_cycle(frame: &HamiltonianFrame) -> Option<BergeCycle> {
    let h = frame.base();
    let m = h.num_edges();
    (0..m).find_map(|a| {
        (a + 1..m).find_map(|b| {
            let common = h.edge(a) & h.edge(b);
            let mut it = common.iter();
            match (it.next(), it.next()) {
                (Some(x), Some(y)) => Some(BergeCycle::new(vec![x, y], vec![a, b])),
                _ => None,
            }
        })
    })
}

/// A Berge cycle of length `length` with the branch that built it.
pub fn extract_length(frame: &HamiltonianFrame, length: usize, opts: &ExtractOptions) -> Result<TraceRecord> {
    Extractor::new(frame, *opts)?.extract(length)
}

/// One record per requested length, in the given order.
pub fn extract_lengths(
    frame: &HamiltonianFrame,
    lengths: impl IntoIterator<Item = usize>,
    opts: &ExtractOptions,
) -> Result<ExtractionTrace> {
    let ex = Extractor::new(frame, *opts)?;
    let records = lengths.into_iter().map(|l| ex.extract(l)).collect::<Result<_>>()?;
    Ok(ExtractionTrace { records })
}
