//! Edge-coloring text files: a header line `n m`, then one line `u v R` or
//! `u v B` per edge. Blank lines and lines starting with `#` are ignored.

use ramseylab_core::{edge, Color, Edge, EdgeColoring, Graph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringFormatError {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("header announces {announced} edges, found {found}")]
    Count { announced: usize, found: usize },
}

pub fn format(c: &EdgeColoring) -> String {
    let mut out = format!("{} {}\n", c.n(), c.edges().len());
    for ((u, v), col) in c.iter() {
        out.push_str(&format!("{u} {v} {}\n", col.letter()));
    }
    out
}

/// Parses the file into `(n, colored edges)` without reference to a host.
pub fn parse(text: &str) -> Result<(usize, Vec<(Edge, Color)>), ColoringFormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(ColoringFormatError::MissingHeader)?;
    let bad = |line: usize, reason: &str| ColoringFormatError::Line { line, reason: reason.to_string() };
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| bad(hline, "header must be two integers"))?;
    let [n, m] = nums[..] else { return Err(bad(hline, "header must be two integers")) };
    let mut pairs = Vec::with_capacity(m);
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [u, v, c] = parts[..] else { return Err(bad(line, "expected `u v R|B`")) };
        let u: usize = u.parse().map_err(|_| bad(line, "bad vertex"))?;
        let v: usize = v.parse().map_err(|_| bad(line, "bad vertex"))?;
        let color = match c {
            "R" | "r" => Color::Red,
            "B" | "b" => Color::Blue,
            _ => return Err(bad(line, "color must be R or B")),
        };
        pairs.push((edge(u, v), color));
    }
    if pairs.len() != m {
        return Err(ColoringFormatError::Count { announced: m, found: pairs.len() });
    }
    Ok((n, pairs))
}

/// Parses and checks the coloring against `host`.
pub fn parse_for(text: &str, host: &Graph) -> Result<Result<EdgeColoring, ramseylab_core::Error>, ColoringFormatError> {
    let (n, pairs) = parse(text)?;
    if n != host.n() {
        return Ok(Err(ramseylab_core::Error::ColoringMismatch(format!(
            "coloring has {n} vertices, graph has {}",
            host.n()
        ))));
    }
    Ok(EdgeColoring::from_pairs(host, &pairs))
}
