//! Unoptimized exhaustive oracles.
//!
//! Every value here comes from sweeping all `2^n` vertex subsets (or all
//! matchings) and testing the defining predicate directly on the graph. None
//! of it shares code with the branch-and-bound solvers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order for subset-sweep oracles.
pub const MAX_ORACLE_ORDER: usize = 16;
/// Largest edge count for the edge-subset matching sweep.
pub const MAX_ORACLE_EDGES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantId {
    Alpha,
    Beta,
    Matching,
    Gamma,
    TauI,
    Xi,
    GammaIt,
    GammaT,
    GammaTt,
}

impl InvariantId {
    pub const ALL: [InvariantId; 9] = [
        InvariantId::Alpha,
        InvariantId::Beta,
        InvariantId::Matching,
        InvariantId::Gamma,
        InvariantId::TauI,
        InvariantId::Xi,
        InvariantId::GammaIt,
        InvariantId::GammaT,
        InvariantId::GammaTt,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InvariantId::Alpha => "alpha",
            InvariantId::Beta => "beta",
            InvariantId::Matching => "matching",
            InvariantId::Gamma => "gamma",
            InvariantId::TauI => "tau_i",
            InvariantId::Xi => "xi",
            InvariantId::GammaIt => "gamma_it",
            InvariantId::GammaT => "gamma_t",
            InvariantId::GammaTt => "gamma_tt",
        }
    }
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InvariantId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        InvariantId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown invariant `{s}`"))
    }
}

/// The value of one invariant by exhaustive enumeration. `γ_t` and `γ_tt`
/// are `None` on graphs with an isolated vertex.
pub fn naive_oracle(g: &Graph, which: InvariantId) -> Result<Option<usize>, SolverError> {
    if which == InvariantId::Matching {
        return naive_matching_number(g).map(Some);
    }
    let sweep = SubsetSweep::new(g)?;
    Ok(match which {
        InvariantId::Alpha => Some(sweep.alpha),
        InvariantId::Beta => Some(sweep.min_size(|s| g.is_vertex_cover(s)).expect("V covers")),
        InvariantId::Gamma => sweep.min_size(|s| g.is_dominating(s)),
        InvariantId::TauI => sweep.min_size(|s| sweep.hits_omega(s)),
        InvariantId::Xi => Some(sweep.core().len()),
        InvariantId::GammaIt => sweep.min_size(|s| g.is_dominating(s) && sweep.hits_omega(s)),
        InvariantId::GammaT => sweep.min_size(|s| g.is_total_dominating(s)),
        InvariantId::GammaTt => sweep.min_size(|s| g.is_total_dominating(s) && sweep.hits_omega(s)),
        InvariantId::Matching => unreachable!(),
    })
}

/// `Ω(G)` by subset sweep, sorted by bit value.
pub fn naive_omega(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    Ok(SubsetSweep::new(g)?.omega)
}

/// Every minimum independent transversal dominating set, by subset sweep.
pub fn naive_it_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    let sweep = SubsetSweep::new(g)?;
    Ok(sweep.all_minimum(|s| g.is_dominating(s) && sweep.hits_omega(s)))
}

/// Every minimum dominating set, by subset sweep.
pub fn naive_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    let sweep = SubsetSweep::new(g)?;
    Ok(sweep.all_minimum(|s| g.is_dominating(s)))
}

struct SubsetSweep {
    n: usize,
    alpha: usize,
    omega: Vec<VertexSet>,
}

impl SubsetSweep {
    fn new(g: &Graph) -> Result<Self, SolverError> {
        let n = g.order();
        if n > MAX_ORACLE_ORDER {
            return Err(SolverError::OrderLimit {
                what: "naive oracle",
                order: n,
                limit: MAX_ORACLE_ORDER,
            });
        }
        if n == 0 {
            return Err(SolverError::EmptyGraph("naive oracle"));
        }
        let mut alpha = 0;
        let mut omega = Vec::new();
        for bits in 0..(1u64 << n) {
            let s = VertexSet::from_bits(bits);
            if !g.is_independent(s) {
                continue;
            }
            if s.len() > alpha {
                alpha = s.len();
                omega.clear();
            }
            if s.len() == alpha {
                omega.push(s);
            }
        }
        Ok(SubsetSweep { n, alpha, omega })
    }

    fn hits_omega(&self, s: VertexSet) -> bool {
        self.omega.iter().all(|i| i.intersects(s))
    }

    fn core(&self) -> VertexSet {
        self.omega
            .iter()
            .fold(VertexSet::full(self.n), |acc, &i| acc.intersection(i))
    }

    fn min_size(&self, pred: impl Fn(VertexSet) -> bool) -> Option<usize> {
        (0..(1u64 << self.n))
            .map(VertexSet::from_bits)
            .filter(|&s| pred(s))
            .map(|s| s.len())
            .min()
    }

    fn all_minimum(&self, pred: impl Fn(VertexSet) -> bool) -> Vec<VertexSet> {
        let mut best = usize::MAX;
        let mut out = Vec::new();
        for bits in 0..(1u64 << self.n) {
            let s = VertexSet::from_bits(bits);
            if s.len() > best || !pred(s) {
                continue;
            }
            if s.len() < best {
                best = s.len();
                out.clear();
            }
            out.push(s);
        }
        out
    }
}

/// `α'(G)` by exhaustive enumeration: every edge subset when `m <= 20`,
/// otherwise every matching (include/exclude each edge, no bounding) for
/// graphs within the vertex-sweep order limit.
pub fn naive_matching_number(g: &Graph) -> Result<usize, SolverError> {
    let edges = g.edges();
    if edges.len() <= MAX_ORACLE_EDGES {
        let mut best = 0;
        for mask in 0u32..(1u32 << edges.len()) {
            let mut used = VertexSet::EMPTY;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    if used.contains(u) || used.contains(v) {
                        ok = false;
                        break;
                    }
                    used = used.with(u).with(v);
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        return Ok(best);
    }
    if g.order() > MAX_ORACLE_ORDER {
        return Err(SolverError::EdgeLimit {
            what: "naive matching oracle",
            edges: edges.len(),
            limit: MAX_ORACLE_EDGES,
        });
    }
    fn all_matchings(edges: &[(usize, usize)], used: VertexSet, size: usize) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return size;
        };
        let without = all_matchings(rest, used, size);
        if used.contains(u) || used.contains(v) {
            return without;
        }
        without.max(all_matchings(rest, used.with(u).with(v), size + 1))
    }
    Ok(all_matchings(&edges, VertexSet::EMPTY, 0))
}
