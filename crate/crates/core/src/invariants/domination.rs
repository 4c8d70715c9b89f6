//! Minimum dominating, total dominating and transversal sets.
//!
//! Each search is phrased as a hitting-set problem over one requirement
//! family: closed neighbourhoods for domination, open neighbourhoods for
//! total domination, `Ω(G)` for transversality.

use super::hitting::{minimum_hitting_sets, MinimumSets};
use super::omega::OmegaFamily;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub(crate) fn closed_neighborhoods(g: &Graph) -> Vec<VertexSet> {
    (0..g.order()).map(|v| g.closed_neighborhood(v)).collect()
}

pub(crate) fn open_neighborhoods(g: &Graph) -> Vec<VertexSet> {
    (0..g.order()).map(|v| g.neighbors(v)).collect()
}

/// `⌈n / (Δ + 1)⌉`: one vertex dominates at most `Δ + 1` vertices.
fn domination_lower_bound(g: &Graph) -> usize {
    g.order().div_ceil(g.max_degree() + 1)
}

/// `γ(G)` and every `γ(G)`-set.
pub(crate) fn minimum_dominating_sets(g: &Graph) -> MinimumSets {
    minimum_hitting_sets(
        g.vertices(),
        &closed_neighborhoods(g),
        domination_lower_bound(g),
    )
    .expect("V(G) dominates G")
}

/// `β(G)` and every minimum vertex cover.
pub(crate) fn minimum_vertex_covers(g: &Graph) -> MinimumSets {
    let edges: Vec<VertexSet> = g
        .edges()
        .into_iter()
        .map(|(u, v)| VertexSet::singleton(u).with(v))
        .collect();
    minimum_hitting_sets(g.vertices(), &edges, 0).expect("edges are non-empty")
}

/// `τ_i(G)` and every minimum independent transversal.
pub(crate) fn minimum_transversals(g: &Graph, omega: &OmegaFamily) -> MinimumSets {
    minimum_hitting_sets(g.vertices(), &omega.sets, 1).expect("Ω(G) has no empty member")
}

/// `γ_it(G)`: dominate and meet every maximum independent set. The search
/// starts at `max(γ, τ_i)`.
pub(crate) fn minimum_it_dominating_sets(
    g: &Graph,
    omega: &OmegaFamily,
    lower: usize,
) -> MinimumSets {
    let mut family = closed_neighborhoods(g);
    family.extend_from_slice(&omega.sets);
    minimum_hitting_sets(g.vertices(), &family, lower).expect("V(G) is feasible")
}

/// `γ_t(G)`, absent when some vertex is isolated.
pub(crate) fn minimum_total_dominating_sets(g: &Graph, lower: usize) -> Option<MinimumSets> {
    if g.has_isolated_vertex() {
        return None;
    }
    minimum_hitting_sets(g.vertices(), &open_neighborhoods(g), lower)
}

/// `γ_tt(G)`, absent when some vertex is isolated.
pub(crate) fn minimum_it_total_dominating_sets(
    g: &Graph,
    omega: &OmegaFamily,
    lower: usize,
) -> Option<MinimumSets> {
    if g.has_isolated_vertex() {
        return None;
    }
    let mut family = open_neighborhoods(g);
    family.extend_from_slice(&omega.sets);
    minimum_hitting_sets(g.vertices(), &family, lower)
}
