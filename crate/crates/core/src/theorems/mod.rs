//! Machine-checkable verdicts for the known results on independent
//! transversal domination.
//!
//! Each registry entry has a stable string ID, a hypothesis and a claim.
//! [`check`] evaluates the hypothesis first (`NotApplicable` if it fails),
//! then the claim, and records the values and sets involved as a witness.
//! Entries flagged [`Expectation::Refutable`] are statements known to be
//! false; their violations are the expected outcome, not a failure.

mod characterize;
mod checks;
mod search;

pub use characterize::{
    corona_base, figure1_graph, figure1_x, is_c4, is_corona, pendant_condition,
    two_pendant_condition, CharacterizationError, CharacterizationResult,
};
pub use search::{search_extremal, search_extremal_in, SearchHit, SearchMode, SearchResult};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::SolverError;
use crate::graph::{encode_graph6, Graph};
use crate::invariants::Analysis;
use crate::vertex_set::VertexSet;

macro_rules! theorem_ids {
    ($( $variant:ident => $name:literal, $expect:ident, $statement:literal; )*) => {
        /// Stable identifiers of the registry entries.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremId { $( $variant, )* }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[ $( TheoremId::$variant, )* ];

            pub fn as_str(self) -> &'static str {
                match self { $( TheoremId::$variant => $name, )* }
            }

            pub fn expectation(self) -> Expectation {
                match self { $( TheoremId::$variant => Expectation::$expect, )* }
            }

            /// One-line statement: hypotheses ⇒ claim.
            pub fn statement(self) -> &'static str {
                match self { $( TheoremId::$variant => $statement, )* }
            }
        }
    };
}

theorem_ids! {
    Eq1 => "EQ1", Proven, "alpha + beta = n";
    Eq2 => "EQ2", Proven, "matching <= min(floor(n/2), beta)";
    Eq3 => "EQ3", Proven, "bipartite => matching = beta";
    Eq4 => "EQ4", Proven, "gamma <= alpha";
    Eq5 => "EQ5", Proven, "no isolated vertices => gamma <= beta";
    Eq6 => "EQ6", Proven, "max(gamma, tau_i) <= gamma_it";
    T1_1 => "T1.1", Proven, "no isolated vertices => gamma_it <= beta + 1";
    T1_2 => "T1.2", Proven, "non-complete, connected, alpha >= n/2 => gamma_it <= n/2";
    L2_1 => "L2.1", Proven, "complement triangle-free, non-complete => tau_i = beta(complement) and gamma_it >= n - alpha(complement)";
    T2_4 => "T2.4", Proven, "connected, n >= 2, alpha > matching => xi >= alpha - matching + 1";
    C2_4a => "C2.4a", Proven, "connected, alpha > matching => tau_i = 1";
    T2_5 => "T2.5", Proven, "bipartite with |X| != |Y| => gamma_it <= gamma + 1";
    T2_6 => "T2.6", Proven, "connected bipartite => gamma_it in {gamma, gamma + 1}";
    Tree => "TREE", Proven, "tree => gamma_it in {gamma, gamma + 1}";
    Sand => "SAND", Proven, "connected => gamma <= gamma_it <= gamma + delta";
    T3_2 => "T3.2", Proven, "bipartite, no isolated vertices, |X| <= |Y|, gamma = |X| => (gamma_it = gamma + 1 <=> every x in X is pendant or has >= 2 pendant neighbours)";
    T3_2Nec => "T3.2-nec", Proven, "bipartite, no isolated vertices, |X| <= |Y|, gamma = |X|, gamma_it = gamma + 1 => pendant condition on X";
    T3_2Suf => "T3.2-suf", Proven, "bipartite, no isolated vertices, |X| <= |Y|, gamma = |X|, pendant condition on X => gamma_it = gamma + 1";
    T3_1Orig => "T3.1-ORIG", Refutable, "bipartite, no isolated vertices, |X| <= |Y|, gamma = |X| => (gamma_it = gamma + 1 <=> every x in X has >= 2 pendant neighbours)";
    T3_3 => "T3.3", Proven, "even n, no isolated vertices => (gamma = n/2 <=> every component is C4 or a corona)";
    C3_4 => "C3.4", Proven, "connected, even n >= 4, gamma = n/2 => gamma_it = n/2";
    T3_5 => "T3.5", Proven, "bipartite, even n, no component of order <= 2, (gamma = n/2) or (gamma = n/2 - 1, |X| = n/2 - 1, pendant condition on X) => gamma_it = n/2";
    T4_1 => "T4.1", Proven, "connected, n >= 3 => gamma_t <= 2n/3";
    Gtt => "GTT", Proven, "no isolated vertices => gamma_tt >= gamma_it";
    Conj1 => "CONJ1", Refutable, "non-complete, connected => gamma_it <= ceil(n/2)";
}

/// Whether a registry entry is an established result or a statement the
/// harness is expected to refute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Proven,
    Refutable,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id `{0}`")]
pub struct UnknownTheorem(pub String);

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Status {
    NotApplicable,
    Holds,
    Violated,
}

/// One recorded value in a verdict witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Datum {
    Flag(bool),
    Count(usize),
    Set(VertexSet),
    Sets(Vec<VertexSet>),
    Text(String),
}

impl From<bool> for Datum {
    fn from(v: bool) -> Self {
        Datum::Flag(v)
    }
}
impl From<usize> for Datum {
    fn from(v: usize) -> Self {
        Datum::Count(v)
    }
}
impl From<VertexSet> for Datum {
    fn from(v: VertexSet) -> Self {
        Datum::Set(v)
    }
}
impl From<Vec<VertexSet>> for Datum {
    fn from(v: Vec<VertexSet>) -> Self {
        Datum::Sets(v)
    }
}
impl From<&str> for Datum {
    fn from(v: &str) -> Self {
        Datum::Text(v.to_string())
    }
}
impl From<String> for Datum {
    fn from(v: String) -> Self {
        Datum::Text(v)
    }
}

/// Named values backing a verdict; keys serialize in sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Witness(BTreeMap<&'static str, Datum>);

impl Witness {
    pub fn set(&mut self, key: &'static str, value: impl Into<Datum>) -> &mut Self {
        self.0.insert(key, value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Datum> {
        self.0.get(key)
    }

    pub fn count(&self, key: &str) -> Option<usize> {
        match self.0.get(key) {
            Some(Datum::Count(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn vertex_set(&self, key: &str) -> Option<VertexSet> {
        match self.0.get(key) {
            Some(Datum::Set(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The outcome of one theorem on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub expected: Expectation,
    pub status: Status,
    pub witness: Witness,
    pub graph6: String,
}

impl TheoremVerdict {
    /// A violation of an entry that is supposed to hold.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Violated && self.expected == Expectation::Proven
    }
}

/// Evaluates one registry entry on `g`.
pub fn check(id: TheoremId, g: &Graph) -> Result<TheoremVerdict, SolverError> {
    check_with(id, &Analysis::new(g))
}

/// Evaluates one registry entry, reusing the invariants cached in `a`.
pub fn check_with(id: TheoremId, a: &Analysis<'_>) -> Result<TheoremVerdict, SolverError> {
    let g = a.graph();
    let graph6 = encode_graph6(g).map_err(|_| SolverError::OrderLimit {
        what: "theorem verdict (graph6 encoding)",
        order: g.order(),
        limit: crate::graph::MAX_GRAPH6_ORDER,
    })?;
    if g.order() == 0 {
        return Err(SolverError::EmptyGraph("theorem check"));
    }
    let mut witness = Witness::default();
    let status = checks::evaluate(id, a, &mut witness)?;
    Ok(TheoremVerdict {
        theorem_id: id,
        expected: id.expectation(),
        status,
        witness,
        graph6,
    })
}

/// Evaluates every entry in `ids` on one graph, sharing one [`Analysis`].
pub fn check_many(ids: &[TheoremId], g: &Graph) -> Result<Vec<TheoremVerdict>, SolverError> {
    let a = Analysis::new(g);
    ids.iter().map(|&id| check_with(id, &a)).collect()
}
