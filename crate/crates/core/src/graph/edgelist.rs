use std::fmt::Write as _;

use super::{Graph, GraphError};

/// Parses the plain edge-list format: a line `n <count>` followed by one
/// `u v` pair per line, 0-indexed. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: &str| GraphError::EdgeList {
        line,
        msg: msg.to_string(),
    };

    let (line, header) = lines.next().ok_or_else(|| err(1, "missing `n <count>` header"))?;
    let mut parts = header.split_whitespace();
    let n = match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(count), None) => count
            .parse::<usize>()
            .map_err(|_| err(line, "vertex count is not an integer"))?,
        _ => return Err(err(line, "expected `n <count>`")),
    };
    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(line, "expected `u v`"));
        };
        let u = a
            .parse::<usize>()
            .map_err(|_| err(line, "endpoint is not an integer"))?;
        let v = b
            .parse::<usize>()
            .map_err(|_| err(line, "endpoint is not an integer"))?;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
