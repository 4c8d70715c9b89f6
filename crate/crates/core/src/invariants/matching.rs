//! Maximum matchings: Hopcroft–Karp on bipartite graphs, branch and bound on
//! everything else.

use std::collections::VecDeque;

use crate::graph::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

pub type Edge = (usize, usize);

/// `α'(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// A maximum matching, edges as `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &Graph) -> Vec<Edge> {
    match g.bipartition() {
        Some(b) => hopcroft_karp(g, &b),
        None => matching_branch_and_bound(g),
    }
}

const FREE: usize = usize::MAX;

/// Hopcroft–Karp over the given bipartition.
pub fn hopcroft_karp(g: &Graph, sides: &Bipartition) -> Vec<Edge> {
    debug_assert!(sides.is_valid_for(g));
    let n = g.order();
    let left: Vec<usize> = sides.x.to_vec();
    let mut mate = vec![FREE; n];
    let mut dist = vec![usize::MAX; n];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut reachable_free = false;
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                match mate[v] {
                    FREE => reachable_free = true,
                    w if dist[w] == usize::MAX => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !reachable_free {
            break;
        }
        for &u in &left {
            if mate[u] == FREE {
                augment(g, u, &mut mate, &mut dist);
            }
        }
    }

    let mut edges: Vec<Edge> = left
        .iter()
        .filter(|&&u| mate[u] != FREE)
        .map(|&u| (u.min(mate[u]), u.max(mate[u])))
        .collect();
    edges.sort_unstable();
    edges
}

fn augment(g: &Graph, u: usize, mate: &mut [usize], dist: &mut [usize]) -> bool {
    for v in g.neighbors(u) {
        let w = mate[v];
        let advance = w == FREE || (dist[w] == dist[u] + 1 && augment(g, w, mate, dist));
        if advance {
            mate[u] = v;
            mate[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Exact maximum matching by branching on the lowest vertex that still has
/// an available neighbour: either it stays unmatched or it is matched to one
/// of those neighbours. Bound: every matched edge uses two active vertices.
pub fn matching_branch_and_bound(g: &Graph) -> Vec<Edge> {
    let mut bb = MatchingSearch {
        g,
        current: Vec::new(),
        best: Vec::new(),
    };
    bb.run(g.vertices());
    let mut best = bb.best;
    best.sort_unstable();
    best
}

struct MatchingSearch<'a> {
    g: &'a Graph,
    current: Vec<Edge>,
    best: Vec<Edge>,
}

impl MatchingSearch<'_> {
    fn run(&mut self, available: VertexSet) {
        let active: VertexSet = available
            .iter()
            .filter(|&v| self.g.neighbors(v).intersects(available))
            .collect();
        if self.current.len() + active.len() / 2 <= self.best.len() {
            return;
        }
        let Some(v) = active.first() else {
            self.best.clone_from(&self.current);
            return;
        };
        for u in self.g.neighbors(v).intersection(active) {
            self.current.push((v, u));
            self.run(active.without(v).without(u));
            self.current.pop();
        }
        self.run(active.without(v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedFamily};

    fn is_matching(g: &Graph, m: &[Edge]) -> bool {
        let mut used = VertexSet::EMPTY;
        m.iter().all(|&(u, v)| {
            let ok = g.has_edge(u, v) && !used.contains(u) && !used.contains(v);
            used = used.with(u).with(v);
            ok
        })
    }

    #[test]
    fn small_values() {
        let c4 = named_graph(NamedFamily::Cycle(4)).unwrap();
        assert_eq!(matching_number(&c4), 2);
        let p = named_graph(NamedFamily::Petersen).unwrap();
        let m = maximum_matching(&p);
        assert_eq!(m.len(), 5);
        assert!(is_matching(&p, &m));
        let c5 = named_graph(NamedFamily::Cycle(5)).unwrap();
        assert_eq!(matching_number(&c5), 2);
        assert_eq!(matching_number(&Graph::empty(3).unwrap()), 0);
        assert_eq!(matching_number(&Graph::empty(0).unwrap()), 0);
        let star = named_graph(NamedFamily::Star(5)).unwrap();
        assert_eq!(matching_number(&star), 1);
    }

    #[test]
    fn both_routes_agree_on_bipartite_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = rng.gen_range(1..=7);
            let b = rng.gen_range(1..=7);
            let p = rng.gen_range(0.1..0.8);
            let edges: Vec<_> = (0..a)
                .flat_map(|i| (a..a + b).map(move |j| (i, j)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(a + b, edges).unwrap();
            let sides = g.bipartition().unwrap();
            let hk = hopcroft_karp(&g, &sides);
            let bb = matching_branch_and_bound(&g);
            assert!(is_matching(&g, &hk));
            assert!(is_matching(&g, &bb));
            assert_eq!(hk.len(), bb.len(), "{g:?}");
        }
    }
}
