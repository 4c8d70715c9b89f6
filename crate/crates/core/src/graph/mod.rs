//! Simple undirected graphs on at most 64 vertices, with bitset adjacency.

mod canon;
mod construct;
mod edge_list;
mod graph6;
mod structure;

pub use canon::{
    canonical_form, canonical_graph6, enumerate_connected_graphs, enumerate_graphs, CatalogEntry,
    MAX_CANONICAL_ORDER, MAX_CATALOG_ORDER,
};
pub use construct::{corona, named_graph, NamedFamily};
pub use edge_list::{format_edge_list, parse_edge_list};
pub use graph6::{encode_graph6, parse_graph6, MAX_GRAPH6_ORDER};
pub use structure::Bipartition;

use std::fmt;

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, MAX_ORDER};

/// An immutable simple undirected graph.
///
/// Vertices are `0..n`. `adj[v]` is the open neighbourhood of `v`. The
/// constructors reject self-loops, asymmetric adjacency and out-of-range
/// neighbours, so every `Graph` value is a valid simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbour sets, validating every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let range = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if let Some(w) = nb.difference(range).first() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
            if nb.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            for w in nb {
                if !adj[w].contains(v) {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// `N(S)`: the union of the open neighbourhoods of `s`.
    pub fn open_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// `S ∪ N(S)`.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        self.open_neighborhood_of(s).union(s)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.closed_neighborhood_of(s) == self.vertices()
    }

    /// Every vertex of the graph (including those in `s`) has a neighbour in `s`.
    pub fn is_total_dominating(&self, s: VertexSet) -> bool {
        self.open_neighborhood_of(s) == self.vertices()
    }

    pub fn is_vertex_cover(&self, s: VertexSet) -> bool {
        self.is_independent(self.vertices().difference(s))
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation {
                got: perm.len(),
                order: self.n,
            });
        }
        let image: VertexSet = perm.iter().copied().filter(|&p| p < self.n).collect();
        if image != self.vertices() {
            return Err(GraphError::BadPermutation {
                got: perm.len(),
                order: self.n,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in increasing order of
    /// the original indices. The second value maps new index to old index.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.intersection(self.vertices()).to_vec();
        let mut inverse = [usize::MAX; MAX_ORDER];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(s)
                    .iter()
                    .map(|w| inverse[w])
                    .collect()
            })
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|a| VertexSet::from_bits(a.bits() << shift)),
        );
        Ok(Graph { n, adj })
    }

    /// `Ḡ`: same vertices, `uv` an edge iff `u != v` and `uv ∉ E(G)`.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| !self.adj[u].intersects(self.adj[v]))
    }

    /// Connected and acyclic (`m = n - 1`).
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::empty(65).unwrap_err(), GraphError::OrderTooLarge(65));
    }

    #[test]
    fn rejects_bad_adjacency() {
        let asym = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert_eq!(
            Graph::from_adjacency(asym),
            Err(GraphError::Asymmetric(0, 1))
        );
        let loopy = vec![VertexSet::singleton(0)];
        assert_eq!(Graph::from_adjacency(loopy), Err(GraphError::SelfLoop(0)));
        let out = vec![VertexSet::singleton(5)];
        assert!(matches!(
            Graph::from_adjacency(out),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn complement_counts_edges() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let c = g.complement();
        assert_eq!(g.edge_count() + c.edge_count(), 10);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn domination_predicates() {
        // P3: 0-1-2
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(g.is_dominating(VertexSet::singleton(1)));
        assert!(!g.is_total_dominating(VertexSet::singleton(1)));
        assert!(g.is_total_dominating([0, 1].into_iter().collect()));
        assert!(g.is_independent([0, 2].into_iter().collect()));
        assert!(g.is_vertex_cover(VertexSet::singleton(1)));
    }

    #[test]
    fn induced_and_union() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, map) = g.induced_subgraph([1, 2, 3].into_iter().collect());
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        let u = h.disjoint_union(&h).unwrap();
        assert_eq!(u.order(), 6);
        assert_eq!(u.edges(), vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn permute_validates() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(g.permute(&[2, 1, 0]).unwrap().edges(), vec![(1, 2)]);
        assert!(g.permute(&[0, 0, 1]).is_err());
        assert!(g.permute(&[0, 1]).is_err());
    }
}
