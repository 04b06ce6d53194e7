use super::{Graph, GraphError};

/// Parses one `u v` pair per line (0-based). `#` starts a comment; blank
/// lines are skipped. The order is one more than the largest vertex seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| GraphError::EdgeList { line: lineno + 1, msg: msg.to_string() };
        let mut fields = line.split_whitespace();
        let u = fields.next().ok_or_else(|| err("missing vertex"))?;
        let v = fields.next().ok_or_else(|| err("expected two vertices"))?;
        if fields.next().is_some() {
            return Err(err("more than two fields"));
        }
        let u: usize = u.parse().map_err(|_| err("vertex is not a nonnegative integer"))?;
        let v: usize = v.parse().map_err(|_| err("vertex is not a nonnegative integer"))?;
        if u == v {
            return Err(err("self-loop"));
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edges(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}
