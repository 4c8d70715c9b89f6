//! Structural predicates behind the bipartite characterizations: the pendant
//! condition on one side of a bipartition, corona recognition, and the
//! small counterexample to the original two-pendant condition.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizationError {
    #[error("side {0} is not an independent set")]
    NotIndependent(VertexSet),
    #[error("side {0} contains vertices outside the graph")]
    OutOfRange(VertexSet),
}

/// Outcome of a structural predicate.
///
/// When `holds`, `witness` certifies it (the pendant vertices that satisfy
/// the condition); otherwise it lists the vertices of the side that fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationResult {
    pub holds: bool,
    pub witness: VertexSet,
}

fn check_side(g: &Graph, side: VertexSet) -> Result<(), CharacterizationError> {
    if !side.is_subset(g.vertices()) {
        return Err(CharacterizationError::OutOfRange(side));
    }
    if !g.is_independent(side) {
        return Err(CharacterizationError::NotIndependent(side));
    }
    Ok(())
}

/// Every `x ∈ side` is pendant or has at least two pendant neighbours.
pub fn pendant_condition(
    g: &Graph,
    side: VertexSet,
) -> Result<CharacterizationResult, CharacterizationError> {
    check_side(g, side)?;
    let pendants = g.pendant_vertices();
    let mut failing = VertexSet::EMPTY;
    let mut certificate = VertexSet::EMPTY;
    for x in side {
        let pendant_nbrs = g.neighbors(x).intersection(pendants);
        if pendants.contains(x) {
            certificate.insert(x);
        } else if pendant_nbrs.len() >= 2 {
            certificate = certificate.union(pendant_nbrs);
        } else {
            failing.insert(x);
        }
    }
    Ok(result(failing, certificate))
}

/// The uncorrected condition: every `x ∈ side` has at least two pendant
/// neighbours (a pendant `x` does not qualify by itself).
pub fn two_pendant_condition(
    g: &Graph,
    side: VertexSet,
) -> Result<CharacterizationResult, CharacterizationError> {
    check_side(g, side)?;
    let pendants = g.pendant_vertices();
    let mut failing = VertexSet::EMPTY;
    let mut certificate = VertexSet::EMPTY;
    for x in side {
        let pendant_nbrs = g.neighbors(x).intersection(pendants);
        if pendant_nbrs.len() >= 2 {
            certificate = certificate.union(pendant_nbrs);
        } else {
            failing.insert(x);
        }
    }
    Ok(result(failing, certificate))
}

fn result(failing: VertexSet, certificate: VertexSet) -> CharacterizationResult {
    if failing.is_empty() {
        CharacterizationResult {
            holds: true,
            witness: certificate,
        }
    } else {
        CharacterizationResult {
            holds: false,
            witness: failing,
        }
    }
}

/// If `g ≅ H ∘ K1`, the base vertex set of one such decomposition.
///
/// Pendants of the corona are all attached vertices plus the base vertices
/// isolated in `H`; the latter form `K2` components, where the smaller
/// index is taken as the base vertex.
pub fn corona_base(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    if n == 0 || n % 2 == 1 {
        return None;
    }
    let pendants = g.pendant_vertices();
    let mut base = g.vertices().difference(pendants);
    for p in pendants {
        let q = g.neighbors(p).first().expect("pendant has a neighbour");
        if pendants.contains(q) && p < q {
            base.insert(p);
        }
    }
    if base.len() * 2 != n {
        return None;
    }
    let attached = g.vertices().difference(base);
    for v in base {
        if g.neighbors(v).intersection(attached).len() != 1 {
            return None;
        }
    }
    for a in attached {
        if g.degree(a) != 1 || !g.neighbors(a).is_subset(base) {
            return None;
        }
    }
    Some(base)
}

/// Recovers `H` from `g = H ∘ K1` (vertices relabelled in increasing order).
/// `K2` is accepted as `K1 ∘ K1`.
pub fn is_corona(g: &Graph) -> Option<Graph> {
    corona_base(g).map(|base| g.induced_subgraph(base).0)
}

/// The 4-cycle, under any labelling.
pub fn is_c4(g: &Graph) -> bool {
    g.order() == 4 && g.edge_count() == 4 && (0..4).all(|v| g.degree(v) == 2)
}

/// Bipartite counterexample to the two-pendant characterization.
///
/// `X = {x1, x2} = {0, 1}`, `Y = {y1, y2, y3} = {2, 3, 4}` with edges
/// `x1y1, x2y1, x2y2, x2y3`. Here `γ = |X| = 2` and `γ_it = 3`, yet `x1`
/// has no pendant neighbour (it is itself pendant).
pub fn figure1_graph() -> Graph {
    Graph::from_edges(5, [(0, 2), (1, 2), (1, 3), (1, 4)]).expect("valid edges")
}

/// The `X` side of [`figure1_graph`].
pub fn figure1_x() -> VertexSet {
    VertexSet::from_bits(0b00011)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, corona, named_graph, NamedFamily};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn star_centre_satisfies_both_conditions() {
        let star = named_graph(NamedFamily::Star(3)).unwrap();
        let x = set(&[0]);
        assert!(pendant_condition(&star, x).unwrap().holds);
        assert!(two_pendant_condition(&star, x).unwrap().holds);
    }

    #[test]
    fn p4_fails_at_the_inner_vertex() {
        let p4 = named_graph(NamedFamily::Path(4)).unwrap();
        let r = pendant_condition(&p4, set(&[0, 2])).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, set(&[2]));
    }

    #[test]
    fn figure1_conditions() {
        let g = figure1_graph();
        let b = g.bipartition().unwrap();
        assert_eq!(b.x, figure1_x());
        assert_eq!(b.y, set(&[2, 3, 4]));
        let corrected = pendant_condition(&g, figure1_x()).unwrap();
        assert!(corrected.holds);
        assert_eq!(corrected.witness, set(&[0, 3, 4]));
        let original = two_pendant_condition(&g, figure1_x()).unwrap();
        assert!(!original.holds);
        assert_eq!(original.witness, set(&[0]));
    }

    #[test]
    fn side_must_be_independent() {
        let k2 = named_graph(NamedFamily::Complete(2)).unwrap();
        assert_eq!(
            pendant_condition(&k2, set(&[0, 1])),
            Err(CharacterizationError::NotIndependent(set(&[0, 1])))
        );
        assert!(matches!(
            pendant_condition(&k2, set(&[5])),
            Err(CharacterizationError::OutOfRange(_))
        ));
    }

    #[test]
    fn corona_recognition() {
        let c4 = named_graph(NamedFamily::Cycle(4)).unwrap();
        assert!(is_corona(&c4).is_none());
        let p4 = named_graph(NamedFamily::Path(4)).unwrap();
        let h = is_corona(&p4).unwrap();
        assert_eq!(h.edges(), vec![(0, 1)]);
        let k2 = named_graph(NamedFamily::Complete(2)).unwrap();
        assert_eq!(is_corona(&k2).unwrap().order(), 1);
        assert!(is_corona(&Graph::empty(1).unwrap()).is_none());
        assert!(is_corona(&named_graph(NamedFamily::Star(3)).unwrap()).is_none());
    }

    #[test]
    fn corona_of_disconnected_base() {
        // H = K2 + K1: the isolated base vertex becomes a K2 component.
        let h = Graph::from_edges(3, [(0, 1)]).unwrap();
        let g = corona(&h).unwrap();
        let back = is_corona(&g).unwrap();
        assert_eq!(canonical_form(&back).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn c4_detection() {
        assert!(is_c4(&named_graph(NamedFamily::Cycle(4)).unwrap()));
        assert!(!is_c4(&named_graph(NamedFamily::Path(4)).unwrap()));
        assert!(!is_c4(&named_graph(NamedFamily::Complete(4)).unwrap()));
    }
}
