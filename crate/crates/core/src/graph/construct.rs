//! Graph constructions: coronas and named families.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::GraphError;
use crate::vertex_set::MAX_ORDER;

/// `H ∘ K1`: vertex `h.order() + i` is a new pendant attached to `i`.
pub fn corona(h: &Graph) -> Result<Graph, GraphError> {
    let k = h.order();
    if k == 0 {
        return Err(GraphError::BadParameters {
            family: "corona",
            reason: "base graph must have at least one vertex".into(),
        });
    }
    if 2 * k > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(2 * k));
    }
    let pendants = (0..k).map(|i| (i, k + i));
    Graph::from_edges(2 * k, h.edges().into_iter().chain(pendants))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,k}`: centre 0, leaves `1..=k`.
    Star(usize),
    Petersen,
}

pub fn named_graph(family: NamedFamily) -> Result<Graph, GraphError> {
    use NamedFamily::*;
    match family {
        Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Cycle(n) => {
            if n < 3 {
                return Err(GraphError::BadParameters {
                    family: "cycle",
                    reason: format!("needs at least 3 vertices, got {n}"),
                });
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Complete(n) => Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))),
        CompleteBipartite(a, b) => {
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Star(k) => Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))),
        Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedFamily::*;
        match *self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Star(k) => write!(f, "star:{k}"),
            Petersen => write!(f, "petersen"),
        }
    }
}

/// Parses `petersen`, `path:5`, `cycle:4`, `complete:3`, `star:4`,
/// `complete_bipartite:2,3`.
impl FromStr for NamedFamily {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let bad = |reason: String| GraphError::BadParameters {
            family: "named graph",
            reason,
        };
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|_| bad(format!("bad number `{a}`")))
                })
                .collect::<Result<_, _>>()?
        };
        let one = || match nums[..] {
            [k] => Ok(k),
            _ => Err(bad(format!("`{name}` takes exactly one parameter"))),
        };
        Ok(match name {
            "path" => NamedFamily::Path(one()?),
            "cycle" => NamedFamily::Cycle(one()?),
            "complete" => NamedFamily::Complete(one()?),
            "star" => NamedFamily::Star(one()?),
            "complete_bipartite" => match nums[..] {
                [a, b] => NamedFamily::CompleteBipartite(a, b),
                _ => return Err(bad("complete_bipartite takes two parameters".into())),
            },
            "petersen" if nums.is_empty() => NamedFamily::Petersen,
            _ => return Err(bad(format!("unknown family `{s}`"))),
        })
    }
}
