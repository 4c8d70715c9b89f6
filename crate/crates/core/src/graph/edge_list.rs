//! Human-authored edge-list fixtures: a header line `n m`, then `m` lines
//! `u v` with 0-based vertex indices. Blank lines and `#` comments are skipped.

use super::Graph;
use crate::error::EdgeListError;

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(EdgeListError::Syntax {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let [u, v] = parse_pair(line, body)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2], EdgeListError> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(EdgeListError::Syntax {
            line,
            reason: format!("expected two integers, found {} field(s)", fields.len()),
        });
    }
    let mut out = [0usize; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| EdgeListError::Syntax {
            line,
            reason: format!("`{f}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
