use crate::graph::Graph;
use crate::vset::VertexSet;

use super::{greedy_matching, Budget, InvariantWitness, SolverConfig, SolverError};

/// `|S| + |E(G - S)| + i(N*(S))`.
pub fn h_objective(g: &Graph, s: &VertexSet) -> usize {
    s.len() + g.edges_within(&s.complement()) + g.isolated_count_in_n_star(s)
}

/// Exact `h(G)`; `None` on the graph with no vertices. No budgets.
pub fn h_value(g: &Graph) -> Option<InvariantWitness> {
    match h_value_with(g, &SolverConfig::unbounded()) {
        Ok(w) => Some(w),
        Err(SolverError::EmptyGraph) => None,
        Err(e) => unreachable!("unbounded search failed: {e}"),
    }
}

/// `h(G)` by include/exclude branching in vertex order.
///
/// For a partial assignment, every completion costs at least
/// `|S_in| + |E(S_out)| + ν(G[open])`: edges among excluded vertices survive
/// into `G - S`, and the open part needs a cover of its own edges, either by
/// adding vertices to `S` or by paying for the edge. `ν` is a greedy maximal
/// matching.
pub fn h_value_with(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    let n = g.n();
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let mut search = HSearch {
        g,
        best: initial_incumbent(g),
        budget: Budget::new(cfg),
    };
    search.run(0, VertexSet::new(n), VertexSet::new(n), 0)?;
    Ok(InvariantWitness {
        value: search.best.1,
        witness: search.best.0,
    })
}

/// Cheap starting points: `V`, every singleton, and a greedy maximal-matching
/// cover.
fn initial_incumbent(g: &Graph) -> (VertexSet, usize) {
    let n = g.n();
    let mut candidates = vec![VertexSet::full(n)];
    candidates.extend((0..n).map(|v| VertexSet::from_vertices(n, [v])));
    let mut free = VertexSet::full(n);
    let mut cover = VertexSet::new(n);
    while let Some(v) = free.first() {
        free.remove(v);
        if let Some(u) = g.neighbors(v).intersection(&free).first() {
            free.remove(u);
            cover.insert(u);
            cover.insert(v);
        }
    }
    if !cover.is_empty() {
        candidates.push(cover);
    }
    candidates
        .into_iter()
        .map(|s| {
            let v = h_objective(g, &s);
            (s, v)
        })
        .min_by_key(|(_, v)| *v)
        .unwrap()
}

struct HSearch<'a> {
    g: &'a Graph,
    best: (VertexSet, usize),
    budget: Budget,
}

impl HSearch<'_> {
    fn run(
        &mut self,
        next: usize,
        inside: VertexSet,
        outside: VertexSet,
        outside_edges: usize,
    ) -> Result<(), SolverError> {
        self.budget.tick()?;
        let g = self.g;
        let n = g.n();
        let open = VertexSet::from_vertices(n, next..n);
        if inside.len() + outside_edges + greedy_matching(g, &open) >= self.best.1 {
            return Ok(());
        }
        if next == n {
            if !inside.is_empty() {
                let value = h_objective(g, &inside);
                if value < self.best.1 {
                    self.best = (inside, value);
                }
            }
            return Ok(());
        }
        let mut with = inside.clone();
        with.insert(next);
        self.run(next + 1, with, outside.clone(), outside_edges)?;

        let added = g.neighbors(next).intersection_len(&outside);
        let mut without = outside;
        without.insert(next);
        self.run(next + 1, inside, without, outside_edges + added)
    }
}
