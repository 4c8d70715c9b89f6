//! Exact computation of α, β, α', γ, Ω, core/ξ, τ_i, γ_it, γ_t and γ_tt.
//!
//! [`Analysis`] memoizes the expensive pieces (Ω in particular) so that a
//! caller asking for several invariants of one graph pays for each search
//! once. The free functions are thin wrappers for one-off queries.

mod domination;
mod hitting;
mod matching;
mod omega;
pub mod oracle;
mod report;

pub use hitting::{minimum_hitting_sets, MinimumSets};
pub use matching::{
    hopcroft_karp, matching_branch_and_bound, matching_number, maximum_matching, Edge,
};
pub use omega::{omega, omega_with_cap, OmegaFamily, DEFAULT_OMEGA_CAP};
pub use oracle::{naive_oracle, InvariantId};
pub use report::{InvariantReport, Witnesses};

use std::cell::OnceCell;

use crate::error::SolverError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Lazily computed invariants of one graph.
pub struct Analysis<'g> {
    graph: &'g Graph,
    omega_cap: usize,
    omega: OnceCell<OmegaFamily>,
    matching: OnceCell<Vec<Edge>>,
    covers: OnceCell<MinimumSets>,
    dominating: OnceCell<MinimumSets>,
    transversals: OnceCell<MinimumSets>,
    it_dominating: OnceCell<MinimumSets>,
    total: OnceCell<Option<MinimumSets>>,
    it_total: OnceCell<Option<MinimumSets>>,
}

fn get_or_try<T, F>(cell: &OnceCell<T>, f: F) -> Result<&T, SolverError>
where
    F: FnOnce() -> Result<T, SolverError>,
{
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

impl<'g> Analysis<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_omega_cap(graph, DEFAULT_OMEGA_CAP)
    }

    pub fn with_omega_cap(graph: &'g Graph, omega_cap: usize) -> Self {
        Analysis {
            graph,
            omega_cap,
            omega: OnceCell::new(),
            matching: OnceCell::new(),
            covers: OnceCell::new(),
            dominating: OnceCell::new(),
            transversals: OnceCell::new(),
            it_dominating: OnceCell::new(),
            total: OnceCell::new(),
            it_total: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    fn non_empty(&self, what: &'static str) -> Result<(), SolverError> {
        if self.graph.order() == 0 {
            Err(SolverError::EmptyGraph(what))
        } else {
            Ok(())
        }
    }

    pub fn omega(&self) -> Result<&OmegaFamily, SolverError> {
        get_or_try(&self.omega, || omega_with_cap(self.graph, self.omega_cap))
    }

    pub fn alpha(&self) -> Result<usize, SolverError> {
        Ok(self.omega()?.alpha)
    }

    /// All minimum vertex covers, found as minimum hitting sets of the edge
    /// family (independently of Ω).
    pub fn vertex_covers(&self) -> Result<&MinimumSets, SolverError> {
        get_or_try(&self.covers, || {
            self.non_empty("β(G)")?;
            Ok(domination::minimum_vertex_covers(self.graph))
        })
    }

    /// `β(G)`.
    pub fn beta(&self) -> Result<usize, SolverError> {
        Ok(self.vertex_covers()?.size)
    }

    pub fn maximum_matching(&self) -> &[Edge] {
        self.matching.get_or_init(|| maximum_matching(self.graph))
    }

    /// `α'(G)`.
    pub fn matching_number(&self) -> usize {
        self.maximum_matching().len()
    }

    pub fn core(&self) -> Result<VertexSet, SolverError> {
        Ok(self.omega()?.core())
    }

    pub fn xi(&self) -> Result<usize, SolverError> {
        Ok(self.omega()?.xi())
    }

    /// All minimum dominating sets.
    pub fn dominating_sets(&self) -> Result<&MinimumSets, SolverError> {
        get_or_try(&self.dominating, || {
            self.non_empty("γ(G)")?;
            Ok(domination::minimum_dominating_sets(self.graph))
        })
    }

    pub fn gamma(&self) -> Result<usize, SolverError> {
        Ok(self.dominating_sets()?.size)
    }

    /// All minimum independent transversals.
    pub fn transversals(&self) -> Result<&MinimumSets, SolverError> {
        get_or_try(&self.transversals, || {
            Ok(domination::minimum_transversals(self.graph, self.omega()?))
        })
    }

    pub fn tau_i(&self) -> Result<usize, SolverError> {
        Ok(self.transversals()?.size)
    }

    /// All minimum independent transversal dominating sets.
    pub fn it_dominating_sets(&self) -> Result<&MinimumSets, SolverError> {
        get_or_try(&self.it_dominating, || {
            let lower = self.gamma()?.max(self.tau_i()?);
            Ok(domination::minimum_it_dominating_sets(
                self.graph,
                self.omega()?,
                lower,
            ))
        })
    }

    pub fn gamma_it(&self) -> Result<usize, SolverError> {
        Ok(self.it_dominating_sets()?.size)
    }

    /// All minimum total dominating sets; `None` if a vertex is isolated.
    pub fn total_dominating_sets(&self) -> Result<Option<&MinimumSets>, SolverError> {
        let sets = get_or_try(&self.total, || {
            let lower = self.gamma()?;
            Ok(domination::minimum_total_dominating_sets(self.graph, lower))
        })?;
        Ok(sets.as_ref())
    }

    pub fn gamma_t(&self) -> Result<Option<usize>, SolverError> {
        Ok(self.total_dominating_sets()?.map(|m| m.size))
    }

    /// All minimum independent transversal total dominating sets.
    pub fn it_total_dominating_sets(&self) -> Result<Option<&MinimumSets>, SolverError> {
        let sets = get_or_try(&self.it_total, || {
            let Some(gamma_t) = self.gamma_t()? else {
                return Ok(None);
            };
            let lower = gamma_t.max(self.gamma_it()?);
            Ok(domination::minimum_it_total_dominating_sets(
                self.graph,
                self.omega()?,
                lower,
            ))
        })?;
        Ok(sets.as_ref())
    }

    pub fn gamma_tt(&self) -> Result<Option<usize>, SolverError> {
        Ok(self.it_total_dominating_sets()?.map(|m| m.size))
    }

    /// One invariant by id, in the same shape as [`naive_oracle`].
    pub fn value(&self, which: InvariantId) -> Result<Option<usize>, SolverError> {
        Ok(match which {
            InvariantId::Alpha => Some(self.alpha()?),
            InvariantId::Beta => Some(self.beta()?),
            InvariantId::Matching => Some(self.matching_number()),
            InvariantId::Gamma => Some(self.gamma()?),
            InvariantId::TauI => Some(self.tau_i()?),
            InvariantId::Xi => Some(self.xi()?),
            InvariantId::GammaIt => Some(self.gamma_it()?),
            InvariantId::GammaT => self.gamma_t()?,
            InvariantId::GammaTt => self.gamma_tt()?,
        })
    }

    /// Every invariant with one witness each.
    pub fn report(&self) -> Result<InvariantReport, SolverError> {
        InvariantReport::from_analysis(self)
    }
}

/// `γ(G)` and all `γ(G)`-sets.
pub fn domination_sets(g: &Graph) -> Result<MinimumSets, SolverError> {
    Analysis::new(g).dominating_sets().cloned()
}

/// `(core(G), ξ(G))`.
pub fn core_and_xi(g: &Graph) -> Result<(VertexSet, usize), SolverError> {
    let om = omega(g)?;
    Ok((om.core(), om.xi()))
}

pub fn tau_i(g: &Graph) -> Result<usize, SolverError> {
    Analysis::new(g).tau_i()
}

/// `γ_it(G)` with the optimum of smallest bit value.
pub fn gamma_it(g: &Graph) -> Result<(usize, VertexSet), SolverError> {
    let a = Analysis::new(g);
    let sets = a.it_dominating_sets()?;
    Ok((sets.size, sets.witness()))
}

pub fn gamma_t(g: &Graph) -> Result<Option<usize>, SolverError> {
    Analysis::new(g).gamma_t()
}

pub fn gamma_tt(g: &Graph) -> Result<Option<usize>, SolverError> {
    Analysis::new(g).gamma_tt()
}
