use super::cycle::BergeCycle;
use super::search::{search_berge_cycle, Outcome, SearchOptions};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthStatus {
    Present(BergeCycle),
    Absent,
    /// The node cap was reached before the length was decided.
    Unknown,
}

/// Per-length classification of Berge cycles over `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n: usize,
    pub lo: usize,
    pub hi: usize,
    pub entries: BTreeMap<usize, LengthStatus>,
    /// Total node expansions spent.
    pub nodes: u64,
}

impl SpectrumReport {
    fn lengths_where(&self, pred: impl Fn(&LengthStatus) -> bool) -> Vec<usize> {
        self.entries.iter().filter(|(_, s)| pred(s)).map(|(&l, _)| l).collect()
    }

    pub fn present(&self) -> Vec<usize> {
        self.lengths_where(|s| matches!(s, LengthStatus::Present(_)))
    }

    pub fn absent(&self) -> Vec<usize> {
        self.lengths_where(|s| matches!(s, LengthStatus::Absent))
    }

    pub fn unknown(&self) -> Vec<usize> {
        self.lengths_where(|s| matches!(s, LengthStatus::Unknown))
    }

    pub fn witness(&self, length: usize) -> Option<&BergeCycle> {
        match self.entries.get(&length) {
            Some(LengthStatus::Present(c)) => Some(c),
            _ => None,
        }
    }

    /// True iff the report covers `[2, n]` and every length is present.
    pub fn is_pancyclic(&self) -> bool {
        self.lo <= 2 && self.hi >= self.n && self.absent().is_empty() && self.unknown().is_empty()
    }
}

/// Classifies every length in `[lo, hi]`, each search capped by `opts`.
pub fn spectrum(h: &Hypergraph, lo: usize, hi: usize, opts: &SearchOptions) -> Result<SpectrumReport> {
    let n = h.n();
    if lo < 2 || lo > hi || hi > n {
        let length = if lo < 2 || lo > n { lo } else { hi };
        return Err(Error::LengthOutOfRange { length, lo: 2, hi: n });
    }
    let mut entries = BTreeMap::new();
    let mut nodes = 0;
    for length in lo..=hi {
        let s = search_berge_cycle(h, length, opts)?;
        nodes += s.nodes;
        let status = match s.outcome {
            Outcome::Found(c) => LengthStatus::Present(c),
            Outcome::Absent => LengthStatus::Absent,
            Outcome::Unknown => LengthStatus::Unknown,
        };
        entries.insert(length, status);
    }
    Ok(SpectrumReport { n, lo, hi, entries, nodes })
}

impl fmt::Display for SpectrumReport {
    /// One line per length: `l PRESENT <witness>`, `l ABSENT` or `l UNKNOWN`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, status) in &self.entries {
            match status {
                LengthStatus::Present(c) => writeln!(f, "{l} PRESENT {c}")?,
                LengthStatus::Absent => writeln!(f, "{l} ABSENT")?,
                LengthStatus::Unknown => writeln!(f, "{l} UNKNOWN")?,
            }
        }
        Ok(())
    }
}
