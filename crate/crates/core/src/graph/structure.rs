//! Connectivity, 2-colourings and degree-based vertex classes.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::SolverError;
use crate::vertex_set::VertexSet;

/// A partition `(X, Y)` of the vertex set with no edge inside either side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl Bipartition {
    pub fn swapped(self) -> Self {
        Bipartition {
            x: self.y,
            y: self.x,
        }
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.x.union(self.y) == g.vertices()
            && !self.x.intersects(self.y)
            && g.is_independent(self.x)
            && g.is_independent(self.y)
    }
}

/// Most components for which [`Graph::all_bipartitions`] will enumerate.
pub const MAX_BIPARTITION_COMPONENTS: usize = 20;

impl Graph {
    /// Connected components, each as a vertex set, ordered by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let comp = self.reach(start);
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// All vertices reachable from `start`.
    pub fn reach(&self, start: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let next = self.open_neighborhood_of(frontier).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    /// True iff the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.reach(0) == self.vertices()
    }

    /// A proper 2-colouring, or `None` if the graph has an odd cycle.
    ///
    /// Within each component the colour class containing the component's
    /// minimum vertex is placed in `X`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut x = VertexSet::EMPTY;
        let mut y = VertexSet::EMPTY;
        for comp in self.components() {
            let (cx, cy) = self.two_colour(comp)?;
            x = x.union(cx);
            y = y.union(cy);
        }
        Some(Bipartition { x, y })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Layered BFS colouring of one component; the minimum vertex gets colour X.
    fn two_colour(&self, comp: VertexSet) -> Option<(VertexSet, VertexSet)> {
        let root = comp.first()?;
        let mut sides = [VertexSet::singleton(root), VertexSet::EMPTY];
        let mut frontier = sides[0];
        let mut side = 0;
        while !frontier.is_empty() {
            let next = self
                .open_neighborhood_of(frontier)
                .difference(sides[0].union(sides[1]));
            side ^= 1;
            sides[side] = sides[side].union(next);
            frontier = next;
        }
        if self.is_independent(sides[0]) && self.is_independent(sides[1]) {
            Some((sides[0], sides[1]))
        } else {
            None
        }
    }

    /// Every bipartition of the graph, one per choice of orientation for each
    /// component. Empty if the graph is not bipartite.
    pub fn all_bipartitions(&self) -> Result<Vec<Bipartition>, SolverError> {
        let mut parts = Vec::new();
        for comp in self.components() {
            match self.two_colour(comp) {
                Some(p) => parts.push(p),
                None => return Ok(Vec::new()),
            }
        }
        if parts.len() > MAX_BIPARTITION_COMPONENTS {
            return Err(SolverError::TooManyComponents(parts.len()));
        }
        let mut out = Vec::with_capacity(1 << parts.len());
        for mask in 0u32..(1u32 << parts.len()) {
            let mut b = Bipartition {
                x: VertexSet::EMPTY,
                y: VertexSet::EMPTY,
            };
            for (i, &(a, c)) in parts.iter().enumerate() {
                let (to_x, to_y) = if (mask >> i) & 1 == 0 { (a, c) } else { (c, a) };
                b.x = b.x.union(to_x);
                b.y = b.y.union(to_y);
            }
            out.push(b);
        }
        Ok(out)
    }

    /// Vertices of degree exactly one.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }
}
