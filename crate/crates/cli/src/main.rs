use anyhow::{anyhow, bail, Context, Result};
use berge_core::constructions::{ConstructionKind, ConstructionSpec};
use berge_core::constructive::{check_hypotheses, extract_lengths, ExtractOptions};
use berge_core::format::{parse_hypergraph, write_hypergraph};
use berge_core::oracle::{search_hamiltonian_frame, spectrum, Outcome, SearchOptions};
use berge_core::sweep::{format_table, run_sweep, SweepConfig, SweepMode};
use berge_core::Hypergraph;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "berge", version, about = "Berge cycles in uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one of the extremal constructions or a tight cycle.
    Gen {
        /// c1, c2, c3, c4 or tight-cycle
        kind: ConstructionKind,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Necklace length for c4.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Add the bridging edge (c1, n even).
        #[arg(long)]
        bridge: bool,
        /// Add the extra multi-V2 edge (c2, n even).
        #[arg(long)]
        extra: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every length in [lo, hi] as PRESENT, ABSENT or UNKNOWN.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        lo: usize,
        /// Defaults to n.
        #[arg(long)]
        hi: Option<usize>,
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract cycles constructively from a hamiltonian Berge cycle.
    Extract {
        file: PathBuf,
        /// `a..b` (inclusive, `n` allowed as bound) or a comma list.
        #[arg(long, default_value = "2..n")]
        lengths: String,
        #[arg(long)]
        allow_fallback: bool,
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hamiltonicity only.
    Check {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random sweep over (n, r, value) cells.
    Sweep {
        #[arg(long, default_value_t = 7)]
        n_lo: usize,
        #[arg(long, default_value_t = 10)]
        n_hi: usize,
        /// r = floor((n-1)/2) + offset; repeatable.
        #[arg(long = "r-offset", default_values_t = [0], allow_negative_numbers = true, value_delimiter = ',')]
        r_offsets: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Mode::Degree)]
        mode: Mode,
        /// Degree offsets from the threshold, or extra-edge counts.
        #[arg(long = "values", default_values_t = [-1, 0], allow_negative_numbers = true, value_delimiter = ',')]
        values: Vec<i64>,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Degree,
    Extra,
}

fn read(path: &Path) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_hypergraph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn search(cap: Option<u64>) -> SearchOptions {
    SearchOptions { node_cap: cap, ..SearchOptions::default() }
}

fn parse_lengths(spec: &str, n: usize) -> Result<Vec<usize>> {
    let bound = |t: &str| -> Result<usize> {
        match t.trim() {
            "n" => Ok(n),
            s => s.parse().map_err(|_| anyhow!("bad length `{s}`")),
        }
    };
    if let Some((a, b)) = spec.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (bound(a)?, bound(b)?);
        if a > b {
            bail!("empty length range {spec}");
        }
        Ok((a..=b).collect())
    } else {
        spec.split(',').map(bound).collect()
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { kind, n, r, k, bridge, extra, out } => {
            let spec = ConstructionSpec { kind, n, r, k, optional_edge: bridge || extra };
            emit(out.as_deref(), &write_hypergraph(&spec.build()?))
        }
        Command::Spectrum { file, lo, hi, cap, out } => {
            let h = read(&file)?;
            let rep = spectrum(&h, lo, hi.unwrap_or(h.n()), &search(cap))?;
            emit(out.as_deref(), &rep.to_string())
        }
        Command::Check { file, cap, out } => {
            let h = read(&file)?;
            let text = match search_hamiltonian_frame(&h, &search(cap)).outcome {
                Outcome::Found(f) => format!("HAMILTONIAN {}\n", f.to_source(&f.as_cycle())),
                Outcome::Absent => "NOT HAMILTONIAN\n".to_string(),
                Outcome::Unknown => "UNKNOWN\n".to_string(),
            };
            emit(out.as_deref(), &text)
        }
        Command::Extract { file, lengths, allow_fallback, cap, out } => {
            let h = read(&file)?;
            let lengths = parse_lengths(&lengths, h.n())?;
            let frame = match search_hamiltonian_frame(&h, &search(cap)).outcome {
                Outcome::Found(f) => f,
                Outcome::Absent => bail!("no hamiltonian Berge cycle, nothing to extract from"),
                Outcome::Unknown => bail!("hamiltonicity undecided within the node cap"),
            };
            match check_hypotheses(&frame) {
                Ok(hyp) => eprintln!("hypotheses hold: {}", hyp.regime.describe()),
                Err(e) if allow_fallback => eprintln!("{e}; continuing with fallback"),
                Err(e) => return Err(e.into()),
            }
            let mut opts = ExtractOptions { allow_fallback, ..ExtractOptions::default() };
            if cap.is_some() {
                opts.search = search(cap);
            }
            let trace = extract_lengths(&frame, lengths, &opts)?;
            emit(out.as_deref(), &trace.to_string())
        }
        Command::Sweep { n_lo, n_hi, r_offsets, mode, values, samples, seed, cap, out } => {
            let cfg = SweepConfig {
                n_lo,
                n_hi,
                r_offsets,
                mode: match mode {
                    Mode::Degree => SweepMode::DegreeOffset,
                    Mode::Extra => SweepMode::ExtraAtVertex,
                },
                values,
                samples,
                seed,
                cap: Some(cap),
            };
            emit(out.as_deref(), &format_table(&run_sweep(&cfg)?))
        }
    }
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
