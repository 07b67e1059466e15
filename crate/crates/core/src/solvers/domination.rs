use crate::central::{central, CentralGraph};
use crate::graph::Graph;
use crate::vset::VertexSet;

use super::{is_dominating, Budget, InvariantWitness, SolverConfig, SolverError};

/// Exact `γ(G)` with a γ-set. No guards or budgets.
pub fn domination_number(g: &Graph) -> InvariantWitness {
    domination_number_with(g, &SolverConfig::unbounded()).expect("unbounded search cannot fail")
}

/// Branch and bound over undominated vertices.
///
/// Each node picks the undominated vertex with the fewest admissible
/// dominators and branches on them in turn, forbidding earlier choices in
/// later branches so no dominating set is visited twice. The incumbent starts
/// from the greedy solution; nodes are cut with
/// `⌈undominated / max coverage⌉`.
pub fn domination_number_with(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    let n = g.n();
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut search = DomSearch {
        best: greedy(&closed, n),
        closed: &closed,
        chosen: Vec::new(),
        budget: Budget::new(cfg),
    };
    search.run(VertexSet::full(n), VertexSet::new(n))?;
    Ok(InvariantWitness::from_set(search.best))
}

fn greedy(closed: &[VertexSet], n: usize) -> VertexSet {
    let mut undominated = VertexSet::full(n);
    let mut chosen = VertexSet::new(n);
    while !undominated.is_empty() {
        let u = (0..n)
            .max_by_key(|&u| (closed[u].intersection_len(&undominated), std::cmp::Reverse(u)))
            .unwrap();
        chosen.insert(u);
        undominated.difference_with(&closed[u]);
    }
    chosen
}

struct DomSearch<'a> {
    closed: &'a [VertexSet],
    best: VertexSet,
    chosen: Vec<usize>,
    budget: Budget,
}

impl DomSearch<'_> {
    fn run(&mut self, undominated: VertexSet, forbidden: VertexSet) -> Result<(), SolverError> {
        self.budget.tick()?;
        let depth = self.chosen.len();
        if undominated.is_empty() {
            if depth < self.best.len() {
                self.best = VertexSet::from_vertices(undominated.universe(), self.chosen.iter().copied());
            }
            return Ok(());
        }
        if depth + 1 >= self.best.len() {
            return Ok(());
        }

        let n = undominated.universe();
        let mut coverage = vec![0usize; n];
        let mut max_cover = 0;
        for u in (0..n).filter(|u| !forbidden.contains(*u)) {
            coverage[u] = self.closed[u].intersection_len(&undominated);
            max_cover = max_cover.max(coverage[u]);
        }
        if max_cover == 0 {
            return Ok(());
        }
        let lower = undominated.len().div_ceil(max_cover);
        if depth + lower >= self.best.len() {
            return Ok(());
        }

        let (_, candidates) = undominated
            .iter()
            .map(|v| (v, self.closed[v].difference(&forbidden)))
            .min_by_key(|(v, c)| (c.len(), *v))
            .unwrap();
        if candidates.is_empty() {
            return Ok(());
        }
        let mut order: Vec<usize> = candidates.to_vec();
        order.sort_by_key(|&u| (std::cmp::Reverse(coverage[u]), u));

        let mut forbid = forbidden;
        for u in order {
            self.chosen.push(u);
            self.run(undominated.difference(&self.closed[u]), forbid.clone())?;
            self.chosen.pop();
            forbid.insert(u);
        }
        Ok(())
    }
}

/// Exact `γ(C(G))`, refusing central graphs larger than
/// `cfg.exact_central_max_v`.
pub fn central_domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    let order = g.n() + g.edge_count();
    if order > cfg.exact_central_max_v {
        return Err(SolverError::TooLarge {
            guard: "exact-central-max-v",
            size: order,
            limit: cfg.exact_central_max_v,
        });
    }
    domination_number_with(central(g).graph(), cfg)
}

/// Whether some γ-set of the central graph consists of original vertices only.
///
/// Computes `γ` exactly, then tries every `γ`-subset of the originals.
pub fn exists_gamma_set_within_originals(cg: &CentralGraph, cfg: &SolverConfig) -> Result<bool, SolverError> {
    let c = cg.graph();
    if c.n() > cfg.preservation_max_v {
        return Err(SolverError::TooLarge {
            guard: "preservation-max-v",
            size: c.n(),
            limit: cfg.preservation_max_v,
        });
    }
    let gamma = domination_number_with(c, cfg)?.value;
    let originals: Vec<usize> = (0..cg.origin_count()).collect();
    if gamma > originals.len() {
        return Ok(false);
    }
    let mut budget = Budget::new(cfg);
    let mut idx: Vec<usize> = (0..gamma).collect();
    loop {
        budget.tick()?;
        let s = VertexSet::from_vertices(c.n(), idx.iter().map(|&i| originals[i]));
        if is_dominating(c, &s) {
            return Ok(true);
        }
        // next combination in lexicographic order
        let k = idx.len();
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < originals.len() - k + i) else {
            return Ok(false);
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}
