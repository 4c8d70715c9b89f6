use std::io::Read;

use itdom_core::graph::{encode_graph6, parse_edge_list, parse_graph6};
use itdom_core::Graph;

use crate::args::{InputFormat, Source};
use crate::cache::CatalogCache;
use crate::error::CliError;

/// Solver guard for user-supplied graphs.
pub const MAX_INPUT_ORDER: usize = 20;

#[derive(Debug, Clone)]
pub struct InputGraph {
    pub graph6: String,
    pub graph: Graph,
}

impl InputGraph {
    fn new(graph: Graph) -> Result<Self, CliError> {
        if graph.order() > MAX_INPUT_ORDER {
            return Err(CliError::Limit(format!(
                "graph order {} exceeds the solver limit {MAX_INPUT_ORDER}",
                graph.order()
            )));
        }
        if graph.order() == 0 {
            return Err(CliError::Parse("the empty graph has no invariants".into()));
        }
        let graph6 = encode_graph6(&graph).expect("order <= 20");
        Ok(InputGraph { graph6, graph })
    }
}

pub fn load(source: &Source, cache: &CatalogCache) -> Result<Vec<InputGraph>, CliError> {
    let mut out = Vec::new();
    if let Some(path) = &source.corpus {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?
        };
        for g in parse_corpus(&text, source.input_format)? {
            out.push(InputGraph::new(g)?);
        }
    }
    let orders: Vec<usize> = match (source.order, source.up_to) {
        (Some(n), _) => vec![n],
        (None, Some(n)) => (1..=n).collect(),
        (None, None) => Vec::new(),
    };
    for n in orders {
        for e in cache.catalog(n, true)? {
            out.push(InputGraph {
                graph6: e.graph6,
                graph: e.graph,
            });
        }
    }
    for code in &source.graphs {
        let g = parse_graph6(code.trim())
            .map_err(|e| CliError::Parse(format!("graph `{code}`: {e}")))?;
        out.push(InputGraph::new(g)?);
    }
    if out.is_empty() && source.corpus.is_none() {
        return Err(CliError::Usage(
            "no input graphs: pass --corpus, --order, --up-to or --graph".into(),
        ));
    }
    Ok(out)
}

fn looks_like_edge_list(text: &str) -> bool {
    content_lines(text).next().is_some_and(|(_, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok())
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Graph6 lines (an optional `>>graph6<<` header is accepted), or a single
/// edge list.
pub fn parse_corpus(text: &str, format: InputFormat) -> Result<Vec<Graph>, CliError> {
    let edge_list = match format {
        InputFormat::EdgeList => true,
        InputFormat::Graph6 => false,
        InputFormat::Auto => looks_like_edge_list(text),
    };
    if edge_list {
        let g = parse_edge_list(text).map_err(|e| CliError::Parse(format!("edge list: {e}")))?;
        return Ok(vec![g]);
    }
    content_lines(text)
        .map(|(no, line)| {
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            parse_graph6(line).map_err(|e| CliError::Parse(format!("line {no}: {e}")))
        })
        .collect()
}
