//! Brute-force canonical labelling and isomorphism-free catalogs of small
//! connected graphs.

use std::collections::BTreeMap;

use super::{encode_graph6, Graph};
use crate::error::SolverError;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 9;
/// Largest order accepted by [`enumerate_connected_graphs`].
pub const MAX_CATALOG_ORDER: usize = 7;

/// One isomorphism class in a catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// The canonical representative.
    pub graph: Graph,
    /// graph6 encoding of `graph`.
    pub graph6: String,
    pub order: usize,
}

/// The relabelling of `g` whose upper-triangle bit string (graph6 order,
/// first bit most significant) is lexicographically minimum over all `n!`
/// vertex permutations.
pub fn canonical_form(g: &Graph) -> Result<Graph, SolverError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(SolverError::OrderLimit {
            what: "canonical form",
            order: n,
            limit: MAX_CANONICAL_ORDER,
        });
    }
    let mut search = CanonSearch {
        g,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        order: Vec::with_capacity(n),
        best_key: u64::MAX,
        best_order: Vec::new(),
    };
    search.extend(VertexSet::EMPTY, 0, 0);

    // best_order[k] = original vertex placed at position k.
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permute(&perm).expect("search produces a permutation"))
}

pub fn canonical_graph6(g: &Graph) -> Result<String, SolverError> {
    let c = canonical_form(g)?;
    Ok(encode_graph6(&c).expect("canonical orders fit graph6"))
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: u32,
    order: Vec<usize>,
    best_key: u64,
    best_order: Vec<usize>,
}

impl CanonSearch<'_> {
    /// Places one more vertex. `key` holds the `bits` leading bits fixed by
    /// the current prefix of the permutation.
    fn extend(&mut self, used: VertexSet, key: u64, bits: u32) {
        let k = self.order.len();
        if k == self.g.order() {
            if self.best_order.is_empty() || key < self.best_key {
                self.best_key = key;
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        for v in self.g.vertices().difference(used) {
            let mut next = key;
            for &u in &self.order {
                next = (next << 1) | self.g.has_edge(u, v) as u64;
            }
            let next_bits = bits + k as u32;
            if !self.best_order.is_empty() {
                let best_prefix = self.best_key >> (self.total_bits - next_bits);
                if next > best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.extend(used.with(v), next, next_bits);
            self.order.pop();
        }
    }
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, sorted by canonical graph6 string.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<CatalogEntry>, SolverError> {
    if !(1..=MAX_CATALOG_ORDER).contains(&n) {
        return Err(SolverError::CatalogOrder {
            order: n,
            max: MAX_CATALOG_ORDER,
        });
    }
    // Every connected graph on n >= 2 vertices has a non-cut vertex, so it
    // arises from a connected graph on n - 1 vertices by attaching a new
    // vertex to a non-empty neighbour set.
    let mut level = vec![Graph::empty(1).expect("order 1")];
    for m in 2..=n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for base in &level {
            let prev = VertexSet::full(m - 1).bits();
            for mask in 1..=prev {
                let mut adj = base.adjacency().to_vec();
                let nb = VertexSet::from_bits(mask);
                for u in nb {
                    adj[u].insert(m - 1);
                }
                adj.push(nb);
                let g = Graph::from_adjacency(adj).expect("valid extension");
                let c = canonical_form(&g)?;
                let code = encode_graph6(&c).expect("small order");
                seen.entry(code).or_insert(c);
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level
        .into_iter()
        .map(|graph| CatalogEntry {
            graph6: encode_graph6(&graph).expect("small order"),
            order: n,
            graph,
        })
        .collect())
}

/// One canonical representative per isomorphism class of all graphs on `n`
/// vertices, connected or not, sorted by canonical graph6 string.
///
/// A graph is determined up to isomorphism by the multiset of its
/// components, so the classes are the multisets of connected catalog
/// entries with orders summing to `n`.
pub fn enumerate_graphs(n: usize) -> Result<Vec<CatalogEntry>, SolverError> {
    if !(1..=MAX_CATALOG_ORDER).contains(&n) {
        return Err(SolverError::CatalogOrder {
            order: n,
            max: MAX_CATALOG_ORDER,
        });
    }
    let mut pool = Vec::new();
    for m in 1..=n {
        pool.extend(enumerate_connected_graphs(m)?);
    }
    let mut out = BTreeMap::new();
    let mut stack = Vec::new();
    combine(&pool, 0, n, &mut stack, &mut out)?;
    Ok(out
        .into_iter()
        .map(|(graph6, graph)| CatalogEntry {
            graph,
            graph6,
            order: n,
        })
        .collect())
}

fn combine(
    pool: &[CatalogEntry],
    start: usize,
    remaining: usize,
    stack: &mut Vec<usize>,
    out: &mut BTreeMap<String, Graph>,
) -> Result<(), SolverError> {
    if remaining == 0 {
        let mut g = Graph::empty(0).expect("order 0");
        for &i in stack.iter() {
            g = g.disjoint_union(&pool[i].graph).expect("small order");
        }
        let c = canonical_form(&g)?;
        out.insert(encode_graph6(&c).expect("small order"), c);
        return Ok(());
    }
    for i in start..pool.len() {
        if pool[i].order <= remaining {
            stack.push(i);
            combine(pool, i, remaining - pool[i].order, stack, out)?;
            stack.pop();
        }
    }
    Ok(())
}
