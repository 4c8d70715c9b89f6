use serde::Serialize;

use super::{Analysis, Edge};
use crate::error::SolverError;
use crate::vertex_set::VertexSet;

/// One optimal set per invariant. Minimum-set witnesses are the optimum with
/// the smallest bit value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub alpha: VertexSet,
    pub beta: VertexSet,
    pub matching: Vec<Edge>,
    pub gamma: VertexSet,
    pub tau_i: VertexSet,
    pub gamma_it: VertexSet,
    pub gamma_t: Option<VertexSet>,
    pub gamma_tt: Option<VertexSet>,
}

/// All invariants of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub alpha: usize,
    pub beta: usize,
    pub matching: usize,
    pub gamma: usize,
    pub tau_i: usize,
    pub xi: usize,
    pub gamma_it: usize,
    pub gamma_t: Option<usize>,
    pub gamma_tt: Option<usize>,
    pub omega_count: usize,
    pub core: VertexSet,
    pub witnesses: Witnesses,
}

impl InvariantReport {
    pub(super) fn from_analysis(a: &Analysis<'_>) -> Result<Self, SolverError> {
        let g = a.graph();
        let omega = a.omega()?;
        let total = a.total_dominating_sets()?;
        let it_total = a.it_total_dominating_sets()?;
        let report = InvariantReport {
            order: g.order(),
            size: g.edge_count(),
            min_degree: g.min_degree(),
            alpha: omega.alpha,
            beta: a.beta()?,
            matching: a.matching_number(),
            gamma: a.gamma()?,
            tau_i: a.tau_i()?,
            xi: omega.xi(),
            gamma_it: a.gamma_it()?,
            gamma_t: total.map(|m| m.size),
            gamma_tt: it_total.map(|m| m.size),
            omega_count: omega.sets.len(),
            core: omega.core(),
            witnesses: Witnesses {
                alpha: omega.sets[0],
                beta: a.vertex_covers()?.witness(),
                matching: a.maximum_matching().to_vec(),
                gamma: a.dominating_sets()?.witness(),
                tau_i: a.transversals()?.witness(),
                gamma_it: a.it_dominating_sets()?.witness(),
                gamma_t: total.map(|m| m.witness()),
                gamma_tt: it_total.map(|m| m.witness()),
            },
        };
        debug_assert_eq!(report.alpha + report.beta, report.order);
        debug_assert!(report.gamma.max(report.tau_i) <= report.gamma_it);
        Ok(report)
    }
}
