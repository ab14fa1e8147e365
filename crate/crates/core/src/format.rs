//! Plain-text hypergraph files.
//!
//! ```text
//! # optional comment lines start with '#'
//! n m r
//! v v v      (m lines, r strictly increasing vertex indices each)
//! ```
//!
//! [`write_hypergraph`] emits no comments, so `write(parse(s)) == s` for any
//! file it produced.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use std::fmt::Write as _;

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", h.n(), h.num_edges(), h.r());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing header `n m r`".into(),
    })?;
    let header = parse_numbers(line, header)?;
    let [n, m, r] = header[..] else {
        return Err(Error::Parse {
            line,
            message: format!("header needs 3 numbers, found {}", header.len()),
        });
    };

    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref().take(m) {
        let edge = parse_numbers(line, text)?;
        if edge.len() != r {
            return Err(Error::Parse {
                line,
                message: format!("expected {r} vertices, found {}", edge.len()),
            });
        }
        if edge.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse {
                line,
                message: "vertex indices must be strictly increasing".into(),
            });
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: "trailing data after the last edge".into(),
        });
    }
    Hypergraph::new(n, r, &edges)
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("not a non-negative integer: `{tok}`"),
            })
        })
        .collect()
}
