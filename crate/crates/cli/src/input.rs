use std::path::Path;

use anyhow::{bail, Context, Result};
use rothlab::graph::{parse_edge_list, parse_graph6};
use rothlab::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Auto,
    Graph6,
    Edgelist,
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_none_or(|l| l.contains(char::is_whitespace))
}

pub fn read_graph(path: &Path, format: Format) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = match format {
        Format::Auto if looks_like_edge_list(&text) => Format::Edgelist,
        Format::Auto => Format::Graph6,
        f => f,
    };
    let g = match format {
        Format::Edgelist => parse_edge_list(&text),
        _ => {
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            parse_graph6(line)
        }
    };
    g.with_context(|| format!("parsing {}", path.display()))
}

/// `K4`, `P5`, `C6`, `E3` (edgeless), or a graph6 string.
pub fn graph_spec(spec: &str) -> Result<Graph> {
    let named = |n: &str| n.parse::<usize>().ok();
    let g = match (spec.chars().next(), spec.get(1..).and_then(named)) {
        (Some('K'), Some(n)) => Graph::complete(n),
        (Some('P'), Some(n)) => Graph::path(n),
        (Some('C'), Some(n)) if n >= 3 => Graph::cycle(n),
        (Some('E'), Some(n)) => Graph::empty(n),
        _ => parse_graph6(spec).with_context(|| format!("graph spec {spec:?}"))?,
    };
    Ok(g)
}

/// Comma-separated integers and inclusive `a-b` ranges.
pub fn index_list(spec: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
                if a > b {
                    bail!("empty range {part}");
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().with_context(|| format!("not an index: {part:?}"))?),
        }
    }
    Ok(out)
}
