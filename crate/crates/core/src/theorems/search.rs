//! Exhaustive searches over the connected catalog for the open problems:
//! the largest `τ_i` at a given order, and the bipartite graphs with
//! `γ_it = n/2`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::SolverError;
use crate::graph::{enumerate_connected_graphs, CatalogEntry, Graph};
use crate::invariants::Analysis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Connected graphs attaining the maximum `τ_i` at order `n`.
    MaxTauI,
    /// Connected bipartite graphs of even order with `γ_it = n/2`.
    #[serde(rename = "bipartite_half_gammait")]
    BipartiteHalfGammaIt,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::MaxTauI => "max_tau_i",
            SearchMode::BipartiteHalfGammaIt => "bipartite_half_gammait",
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max_tau_i" => Ok(SearchMode::MaxTauI),
            "bipartite_half_gammait" => Ok(SearchMode::BipartiteHalfGammaIt),
            other => Err(format!(
                "unknown search mode `{other}` (expected max_tau_i or bipartite_half_gammait)"
            )),
        }
    }
}

/// One graph returned by a search, with the invariants it was selected on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub graph6: String,
    #[serde(skip)]
    pub graph: Graph,
    pub alpha: usize,
    pub gamma: usize,
    pub tau_i: usize,
    pub gamma_it: usize,
    /// Bipartite mode only: which hypothesis pattern the graph falls under.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<&'static str>,
    /// Bipartite mode only: `|X| = |Y|` and `γ = n/2 - 1`.
    pub open_case: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub mode: SearchMode,
    pub order: usize,
    /// Graphs examined.
    pub examined: usize,
    /// The maximum `τ_i` found (`max_tau_i` mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_tau_i: Option<usize>,
    /// Sorted by graph6.
    pub hits: Vec<SearchHit>,
}

pub const CASE_HALF: &str = "gamma = n/2";
pub const CASE_SMALL_SIDE: &str = "gamma = n/2 - 1, |X| = n/2 - 1";
pub const CASE_OPEN: &str = "gamma = n/2 - 1, |X| = |Y|";

/// Runs `mode` over the connected catalog of order `n`.
pub fn search_extremal(mode: SearchMode, n: usize) -> Result<SearchResult, SolverError> {
    let catalog = enumerate_connected_graphs(n)?;
    let mut r = search_extremal_in(mode, &catalog)?;
    r.order = n;
    Ok(r)
}

/// Runs `mode` over an explicit list of catalog entries, all of one order.
pub fn search_extremal_in(
    mode: SearchMode,
    catalog: &[CatalogEntry],
) -> Result<SearchResult, SolverError> {
    let order = catalog.first().map_or(0, |e| e.order);
    let mut hits = Vec::new();
    let mut max_tau_i = None;
    for entry in catalog {
        let g = &entry.graph;
        let a = Analysis::new(g);
        match mode {
            SearchMode::MaxTauI => {
                let tau = a.tau_i()?;
                match max_tau_i {
                    Some(best) if tau < best => continue,
                    Some(best) if tau > best => hits.clear(),
                    _ => {}
                }
                max_tau_i = Some(tau);
                hits.push(hit(entry, &a, None, false)?);
            }
            SearchMode::BipartiteHalfGammaIt => {
                let n = g.order();
                if n % 2 == 1 || n <= 2 || !g.is_connected() {
                    continue;
                }
                let Some(b) = g.bipartition() else { continue };
                if 2 * a.gamma_it()? != n {
                    continue;
                }
                let gamma = a.gamma()?;
                let balanced = b.x.len() == b.y.len();
                let case = if 2 * gamma == n {
                    CASE_HALF
                } else if balanced {
                    CASE_OPEN
                } else {
                    CASE_SMALL_SIDE
                };
                hits.push(hit(entry, &a, Some(case), case == CASE_OPEN)?);
            }
        }
    }
    hits.sort_by(|p, q| p.graph6.cmp(&q.graph6));
    Ok(SearchResult {
        mode,
        order,
        examined: catalog.len(),
        max_tau_i,
        hits,
    })
}

fn hit(
    entry: &CatalogEntry,
    a: &Analysis<'_>,
    case: Option<&'static str>,
    open_case: bool,
) -> Result<SearchHit, SolverError> {
    Ok(SearchHit {
        graph6: entry.graph6.clone(),
        graph: entry.graph.clone(),
        alpha: a.alpha()?,
        gamma: a.gamma()?,
        tau_i: a.tau_i()?,
        gamma_it: a.gamma_it()?,
        case,
        open_case,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::encode_graph6;
    use crate::graph::{canonical_form, named_graph, NamedFamily};

    fn canonical_code(f: NamedFamily) -> String {
        encode_graph6(&canonical_form(&named_graph(f).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn k4_maximizes_tau_i_at_order_four() {
        let r = search_extremal(SearchMode::MaxTauI, 4).unwrap();
        assert_eq!(r.max_tau_i, Some(4));
        let codes: Vec<_> = r.hits.iter().map(|h| h.graph6.as_str()).collect();
        assert_eq!(codes, vec![canonical_code(NamedFamily::Complete(4))]);
    }

    #[test]
    fn bipartite_half_at_order_four() {
        let r = search_extremal(SearchMode::BipartiteHalfGammaIt, 4).unwrap();
        let codes: Vec<_> = r.hits.iter().map(|h| h.graph6.clone()).collect();
        assert!(codes.contains(&canonical_code(NamedFamily::Cycle(4))));
        assert!(codes.contains(&canonical_code(NamedFamily::Path(4))));
        assert!(r.hits.iter().all(|h| h.gamma_it == 2));
    }

    #[test]
    fn bipartite_mode_skips_odd_and_tiny_orders() {
        for n in [1, 2, 3, 5] {
            let r = search_extremal(SearchMode::BipartiteHalfGammaIt, n).unwrap();
            assert!(r.hits.is_empty(), "n = {n}");
        }
    }

    #[test]
    fn mode_names_round_trip() {
        for m in [SearchMode::MaxTauI, SearchMode::BipartiteHalfGammaIt] {
            assert_eq!(m.as_str().parse::<SearchMode>().unwrap(), m);
            assert_eq!(serde_json::to_value(m).unwrap(), m.as_str());
        }
        assert!("max".parse::<SearchMode>().is_err());
    }
}
