//! Random sweeps over `(n, r, target)` cells.
//!
//! Each cell samples planted-hamiltonian hypergraphs (see [`crate::sample`])
//! and classifies every length with the capped oracle. Cells at one below
//! the degree threshold start with whichever of the sharpness constructions
//! apply. Each cell draws from its own ChaCha stream keyed by the cell, so
//! the table does not depend on evaluation order.

use crate::constructions::{construction1, construction2, construction3};
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, degree_threshold, Hypergraph};
use crate::oracle::{spectrum, SearchOptions};
use crate::sample::{sample_planted, ExtraTarget};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

/// What the per-cell value means.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Minimum degree target `threshold + value`.
    DegreeOffset,
    /// `value` extra edges through one vertex, nothing else beyond the
    /// planted cycle (probes how small `c_r` can be).
    ExtraAtVertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_lo: usize,
    pub n_hi: usize,
    /// `r = floor((n-1)/2) + offset` for each offset.
    pub r_offsets: Vec<i64>,
    pub mode: SweepMode,
    pub values: Vec<i64>,
    pub samples: usize,
    pub seed: u64,
    pub cap: Option<u64>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_lo > self.n_hi {
            return Err(Error::BadParameters(format!("empty n range {}..={}", self.n_lo, self.n_hi)));
        }
        if self.n_hi > crate::MAX_VERTICES {
            return Err(Error::TooManyVertices { n: self.n_hi });
        }
        if self.r_offsets.is_empty() || self.values.is_empty() {
            return Err(Error::BadParameters("r offsets and values must be non-empty".into()));
        }
        if self.mode == SweepMode::ExtraAtVertex && self.values.iter().any(|&v| v < 0) {
            return Err(Error::BadParameters("extra-edge counts must be non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepCell {
    pub n: usize,
    pub r: usize,
    pub value: i64,
    /// Minimum degree (degree mode) or extra-edge count (extra mode).
    pub target: usize,
    pub instances: usize,
    pub pancyclic: usize,
    pub hamiltonian: usize,
    /// Instances with at least one length left undecided by the cap.
    pub unknown: usize,
    pub nodes: u64,
}

impl SweepCell {
    fn fraction(&self, x: usize) -> f64 {
        if self.instances == 0 {
            0.0
        } else {
            x as f64 / self.instances as f64
        }
    }
}

pub const SWEEP_HEADER: &str = "n\tr\tvalue\ttarget\tinstances\tpancyclic\thamiltonian\tunknown\tmean_nodes";

/// Header line, then one tab-separated row per cell in cell-key order.
pub fn format_table(cells: &[SweepCell]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{SWEEP_HEADER}");
    for c in cells {
        let mean = if c.instances == 0 { 0.0 } else { c.nodes as f64 / c.instances as f64 };
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{:.3}\t{:.3}\t{}\t{:.1}",
            c.n,
            c.r,
            c.value,
            c.target,
            c.instances,
            c.fraction(c.pancyclic),
            c.fraction(c.hamiltonian),
            c.unknown,
            mean
        );
    }
    out
}

fn cell_rng(seed: u64, n: usize, r: usize, value: i64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 48) ^ ((r as u64) << 32) ^ (value as u32 as u64));
    rng
}

/// Constructions whose minimum degree sits exactly one below the threshold.
fn sharpness_seeds(n: usize, r: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    if r <= (n - 1) / 2 {
        out.extend(construction1(n, r, false).ok());
        out.extend(construction2(n, r, false).ok());
    } else {
        out.extend(construction3(n, r).ok());
    }
    out
}

/// Cells whose target cannot be reached (or whose `r` is out of range) are
/// left out. With zero samples the result is empty.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepCell>> {
    cfg.validate()?;
    let mut cells = Vec::new();
    if cfg.samples == 0 {
        return Ok(cells);
    }
    let opts = SearchOptions { node_cap: cfg.cap, ..SearchOptions::default() };
    for n in cfg.n_lo..=cfg.n_hi {
        let mut rs: Vec<usize> = cfg
            .r_offsets
            .iter()
            .filter_map(|&o| usize::try_from(((n as i64) - 1) / 2 + o).ok())
            .filter(|&r| r >= 3 && r < n)
            .collect();
        rs.sort_unstable();
        rs.dedup();
        for r in rs {
            let threshold = degree_threshold(n, r)? as i64;
            let mut values = cfg.values.clone();
            values.sort_unstable();
            values.dedup();
            for value in values {
                let (target, spec) = match cfg.mode {
                    SweepMode::DegreeOffset => {
                        let d = threshold + value;
                        if d < r as i64 || d as u64 > binomial(n as u64 - 1, r as u64 - 1) {
                            continue;
                        }
                        (d as usize, ExtraTarget::MinDegree(d as usize))
                    }
                    SweepMode::ExtraAtVertex => {
                        let c = value as usize;
                        if c + r > binomial(n as u64 - 1, r as u64 - 1) as usize {
                            continue;
                        }
                        (c, ExtraTarget::AtFirstVertex(c))
                    }
                };
                let mut instances: Vec<Hypergraph> = Vec::with_capacity(cfg.samples);
                if cfg.mode == SweepMode::DegreeOffset && value == -1 {
                    instances.extend(sharpness_seeds(n, r).into_iter().take(cfg.samples));
                }
                let mut rng = cell_rng(cfg.seed, n, r, value);
                while instances.len() < cfg.samples {
                    instances.push(sample_planted(n, r, spec, &mut rng)?.hypergraph);
                }
                let mut cell = SweepCell {
                    n,
                    r,
                    value,
                    target,
                    instances: instances.len(),
                    pancyclic: 0,
                    hamiltonian: 0,
                    unknown: 0,
                    nodes: 0,
                };
                for h in &instances {
                    let rep = spectrum(h, 2, n, &opts)?;
                    cell.nodes += rep.nodes;
                    cell.pancyclic += usize::from(rep.is_pancyclic());
                    cell.hamiltonian += usize::from(rep.witness(n).is_some());
                    cell.unknown += usize::from(!rep.unknown().is_empty());
                }
                cells.push(cell);
            }
        }
    }
    Ok(cells)
}
