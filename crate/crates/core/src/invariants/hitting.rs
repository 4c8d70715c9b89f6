//! Branch-and-bound minimum hitting set search.
//!
//! Domination (`S ∩ N[v] ≠ ∅` for all `v`), total domination
//! (`S ∩ N(v) ≠ ∅`) and independent transversality (`S ∩ I ≠ ∅` for all
//! `I ∈ Ω`) are all hitting conditions over a family of vertex sets, so every
//! minimum-set invariant reduces to this one search.

use serde::Serialize;

use crate::vertex_set::VertexSet;

/// All minimum-cardinality solutions of one search, sorted by bit value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimumSets {
    pub size: usize,
    pub sets: Vec<VertexSet>,
}

impl MinimumSets {
    /// The optimum with the smallest bit value.
    pub fn witness(&self) -> VertexSet {
        self.sets[0]
    }
}

/// Finds every minimum subset of `universe` that meets each member of
/// `family`. The search deepens from `lower` upward; `lower` must not exceed
/// the true optimum. Returns `None` when some requirement has no element in
/// `universe`.
pub fn minimum_hitting_sets(
    universe: VertexSet,
    family: &[VertexSet],
    lower: usize,
) -> Option<MinimumSets> {
    let family = reduce_family(universe, family)?;
    let upper = universe.len();
    for budget in lower..=upper {
        let mut search = Search {
            family: &family,
            budget,
            found: Vec::new(),
        };
        search.run(VertexSet::EMPTY, universe);
        if !search.found.is_empty() {
            let mut sets = search.found;
            sets.sort_unstable();
            return Some(MinimumSets { size: budget, sets });
        }
    }
    // `universe` itself always hits every non-empty requirement.
    unreachable!("the whole universe is a hitting set")
}

/// Restricts requirements to `universe`, drops duplicates and (for moderate
/// family sizes) supersets, since hitting a subset hits every superset.
fn reduce_family(universe: VertexSet, family: &[VertexSet]) -> Option<Vec<VertexSet>> {
    let mut sets: Vec<VertexSet> = family.iter().map(|s| s.intersection(universe)).collect();
    if sets.iter().any(|s| s.is_empty()) {
        return None;
    }
    sets.sort_unstable_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
    if sets.len() <= 4096 {
        let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !kept.iter().any(|k| k.is_subset(s)) {
                kept.push(s);
            }
        }
        sets = kept;
    }
    Some(sets)
}

struct Search<'a> {
    family: &'a [VertexSet],
    budget: usize,
    found: Vec<VertexSet>,
}

impl Search<'_> {
    /// `allowed` shrinks as branches exclude earlier candidates, so each
    /// solution is produced by exactly one leaf.
    fn run(&mut self, chosen: VertexSet, allowed: VertexSet) {
        let remaining = self.budget - chosen.len();

        // The unhit requirement with the fewest still-allowed elements.
        let mut pivot: Option<VertexSet> = None;
        let mut packed = VertexSet::EMPTY;
        let mut disjoint = 0usize;
        for &req in self.family {
            if req.intersects(chosen) {
                continue;
            }
            let options = req.intersection(allowed);
            if options.is_empty() {
                return;
            }
            if pivot.map_or(true, |p| options.len() < p.len()) {
                pivot = Some(options);
            }
            // Greedy packing of pairwise-disjoint requirements: each needs its
            // own vertex.
            if !options.intersects(packed) {
                packed = packed.union(options);
                disjoint += 1;
                if disjoint > remaining {
                    return;
                }
            }
        }

        let Some(options) = pivot else {
            self.found.push(chosen);
            return;
        };
        let mut allowed = allowed;
        for v in options {
            self.run(chosen.with(v), allowed.without(v));
            allowed.remove(v);
        }
    }
}
