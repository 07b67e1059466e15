//! Exact solvers for `γ`, `τ`, `α`, `h`, `f` and good covers.
//!
//! Every invariant has a branch-and-bound implementation here and a
//! subset-enumeration counterpart in [`oracle`]; the two are kept apart so
//! they can check each other.

mod cover;
mod domination;
mod hvalue;
pub mod oracle;

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vset::VertexSet;

pub use cover::{
    f_value, f_value_with, good_cover, good_cover_with, independence_number, vertex_cover_number,
    vertex_cover_number_with, GoodCover,
};
pub use domination::{
    central_domination_number, domination_number, domination_number_with, exists_gamma_set_within_originals,
};
pub use hvalue::{h_objective, h_value, h_value_with};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("instance too large: {size} exceeds {guard} = {limit}")]
    TooLarge {
        guard: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("time budget of {0} ms exceeded")]
    TimeBudgetExceeded(u128),
    #[error("search node budget of {0} exceeded")]
    NodeBudgetExceeded(u64),
    #[error("invariant undefined on the graph with no vertices")]
    EmptyGraph,
}

/// Size guards and search budgets shared by every solver entry point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Subset-enumeration oracles refuse graphs larger than this.
    pub oracle_max_n: usize,
    /// Largest central graph `C(G)` on which `γ` is computed exactly.
    pub exact_central_max_v: usize,
    /// Largest central graph for the original-vertices γ-set test.
    pub preservation_max_v: usize,
    pub time_budget: Option<Duration>,
    /// Per-search cap on branch-and-bound nodes.
    pub node_budget: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            oracle_max_n: 20,
            exact_central_max_v: 40,
            preservation_max_v: 22,
            time_budget: None,
            node_budget: Some(500_000_000),
        }
    }
}

impl SolverConfig {
    /// No guards and no budgets.
    pub fn unbounded() -> Self {
        SolverConfig {
            oracle_max_n: 63,
            exact_central_max_v: usize::MAX,
            preservation_max_v: usize::MAX,
            time_budget: None,
            node_budget: None,
        }
    }
}

pub(crate) struct Budget {
    deadline: Option<(Instant, Duration)>,
    node_limit: Option<u64>,
    nodes: u64,
}

impl Budget {
    pub(crate) fn new(cfg: &SolverConfig) -> Self {
        Budget {
            deadline: cfg.time_budget.map(|d| (Instant::now() + d, d)),
            node_limit: cfg.node_budget,
            nodes: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolverError> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(SolverError::NodeBudgetExceeded(limit));
            }
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some((at, d)) = self.deadline {
                if Instant::now() > at {
                    return Err(SolverError::TimeBudgetExceeded(d.as_millis()));
                }
            }
        }
        Ok(())
    }
}

/// An invariant value together with a set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantWitness {
    pub value: usize,
    pub witness: VertexSet,
}

impl InvariantWitness {
    pub(crate) fn from_set(witness: VertexSet) -> Self {
        InvariantWitness {
            value: witness.len(),
            witness,
        }
    }
}

/// Every vertex is in `s` or has a neighbour in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| s.contains(v) || g.neighbors(v).intersects(s))
}

/// Every edge has an endpoint in `s`.
pub fn is_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    let rest = s.complement();
    g.edges_within(&rest) == 0
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    g.edges_within(s) == 0
}

/// Greedy maximal matching inside `within`; its size bounds `τ(G[within])`
/// from below.
pub(crate) fn greedy_matching(g: &Graph, within: &VertexSet) -> usize {
    let mut free = within.clone();
    let mut size = 0;
    while let Some(v) = free.first() {
        free.remove(v);
        if let Some(u) = g.neighbors(v).intersection(&free).first() {
            free.remove(u);
            size += 1;
        }
    }
    size
}
