//! Enumeration of all maximum independent sets.

use serde::Serialize;

use crate::error::SolverError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default bound on `|Ω(G)|` before enumeration gives up.
pub const DEFAULT_OMEGA_CAP: usize = 1_000_000;

/// `Ω(G)` together with `α(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaFamily {
    pub alpha: usize,
    /// Every maximum independent set, sorted by bit value.
    pub sets: Vec<VertexSet>,
}

impl OmegaFamily {
    /// `core(G)`: the vertices lying in every maximum independent set.
    pub fn core(&self) -> VertexSet {
        self.sets
            .iter()
            .fold(VertexSet::full(64), |acc, &s| acc.intersection(s))
    }

    /// `ξ(G) = |core(G)|`.
    pub fn xi(&self) -> usize {
        self.core().len()
    }

    pub fn is_hit_by(&self, s: VertexSet) -> bool {
        self.sets.iter().all(|&i| i.intersects(s))
    }
}

pub fn omega(g: &Graph) -> Result<OmegaFamily, SolverError> {
    omega_with_cap(g, DEFAULT_OMEGA_CAP)
}

/// Bron–Kerbosch with pivoting on the complement (maximal independent sets
/// are maximal cliques of `Ḡ`), pruned to sets that can still reach the
/// current best size.
pub fn omega_with_cap(g: &Graph, cap: usize) -> Result<OmegaFamily, SolverError> {
    if g.order() == 0 {
        return Err(SolverError::EmptyGraph("Ω(G)"));
    }
    let mut bk = Enumerator {
        g,
        cap,
        best: 0,
        sets: Vec::new(),
        overflow: false,
    };
    bk.expand(VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY);
    if bk.overflow {
        return Err(SolverError::OmegaCapExceeded { cap });
    }
    let mut sets = bk.sets;
    sets.sort_unstable();
    Ok(OmegaFamily {
        alpha: bk.best,
        sets,
    })
}

struct Enumerator<'a> {
    g: &'a Graph,
    cap: usize,
    best: usize,
    sets: Vec<VertexSet>,
    overflow: bool,
}

impl Enumerator<'_> {
    fn expand(&mut self, current: VertexSet, mut candidates: VertexSet, mut excluded: VertexSet) {
        if current.len() + candidates.len() < self.best {
            return;
        }
        if candidates.is_empty() {
            if excluded.is_empty() {
                self.record(current);
            }
            return;
        }
        // Pivot maximizing the candidates it rules out; only vertices of the
        // pivot's closed neighbourhood need to be tried.
        let pivot = candidates
            .union(excluded)
            .iter()
            .max_by_key(|&u| candidates.difference(self.g.closed_neighborhood(u)).len())
            .expect("non-empty");
        let branch = candidates.intersection(self.g.closed_neighborhood(pivot));
        for v in branch {
            let closed = self.g.closed_neighborhood(v);
            self.expand(
                current.with(v),
                candidates.difference(closed),
                excluded.difference(closed),
            );
            candidates.remove(v);
            excluded.insert(v);
        }
    }

    fn record(&mut self, set: VertexSet) {
        let size = set.len();
        if size > self.best {
            self.best = size;
            self.sets.clear();
            self.overflow = false;
        }
        if size == self.best {
            if self.sets.len() >= self.cap {
                self.overflow = true;
            } else {
                self.sets.push(set);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedFamily};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn complete_graph_singletons() {
        let k4 = named_graph(NamedFamily::Complete(4)).unwrap();
        let om = omega(&k4).unwrap();
        assert_eq!(om.alpha, 1);
        assert_eq!(
            om.sets,
            (0..4).map(VertexSet::singleton).collect::<Vec<_>>()
        );
        assert!(om.core().is_empty());
    }

    #[test]
    fn c4_and_star() {
        let c4 = named_graph(NamedFamily::Cycle(4)).unwrap();
        let om = omega(&c4).unwrap();
        assert_eq!(om.alpha, 2);
        assert_eq!(om.sets, vec![set(&[0, 2]), set(&[1, 3])]);
        assert_eq!(om.xi(), 0);

        let star = named_graph(NamedFamily::Star(4)).unwrap();
        let om = omega(&star).unwrap();
        assert_eq!(om.sets, vec![set(&[1, 2, 3, 4])]);
        assert_eq!(om.core(), set(&[1, 2, 3, 4]));
        assert_eq!(om.xi(), 4);
    }

    #[test]
    fn petersen_has_five_maximum_independent_sets() {
        let p = named_graph(NamedFamily::Petersen).unwrap();
        let om = omega(&p).unwrap();
        assert_eq!(om.alpha, 4);
        assert_eq!(om.sets.len(), 5);
        assert!(om.sets.iter().all(|&s| p.is_independent(s)));
    }

    #[test]
    fn edgeless_graph_has_single_member() {
        let e = Graph::empty(5).unwrap();
        let om = omega(&e).unwrap();
        assert_eq!(om.alpha, 5);
        assert_eq!(om.sets, vec![VertexSet::full(5)]);
    }

    #[test]
    fn cap_and_empty_errors() {
        let k4 = named_graph(NamedFamily::Complete(4)).unwrap();
        assert_eq!(
            omega_with_cap(&k4, 3),
            Err(SolverError::OmegaCapExceeded { cap: 3 })
        );
        assert!(omega_with_cap(&k4, 4).is_ok());
        assert!(omega(&Graph::empty(0).unwrap()).is_err());
    }
}
