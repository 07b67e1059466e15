//! Subset-enumeration oracles.
//!
//! Deliberately naive: every candidate set is generated and tested against
//! the defining predicate, smallest cardinality first. They share no search
//! logic with the branch-and-bound solvers and refuse graphs larger than
//! `oracle_max_n`.

use crate::graph::Graph;
use crate::vset::VertexSet;

use super::{h_objective, is_dominating, is_vertex_cover, InvariantWitness, SolverConfig, SolverError};

fn guard(g: &Graph, cfg: &SolverConfig) -> Result<(), SolverError> {
    let limit = cfg.oracle_max_n.min(63);
    if g.n() > limit {
        return Err(SolverError::TooLarge {
            guard: "oracle-max-n",
            size: g.n(),
            limit,
        });
    }
    Ok(())
}

/// All `k`-subsets of `0..n` as bit masks, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64);
    let limit = 1u64 << n;
    let first = if k > n { limit } else { (1u64 << k) - 1 };
    std::iter::successors(Some(first), move |&x| {
        if x == 0 {
            return None;
        }
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x + c;
        Some((((r ^ x) >> 2) / c) | r)
    })
    .take_while(move |&x| x < limit)
    .take(if k == 0 { 1 } else { usize::MAX })
}

fn smallest_satisfying(
    g: &Graph,
    cfg: &SolverConfig,
    pred: impl Fn(&VertexSet) -> bool,
) -> Result<InvariantWitness, SolverError> {
    guard(g, cfg)?;
    let n = g.n();
    for k in 0..=n {
        for mask in k_subsets(n, k) {
            let s = VertexSet::from_mask(n, mask);
            if pred(&s) {
                return Ok(InvariantWitness::from_set(s));
            }
        }
    }
    unreachable!("V satisfies every upward-closed predicate used here")
}

pub fn domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    smallest_satisfying(g, cfg, |s| is_dominating(g, s))
}

pub fn vertex_cover_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    smallest_satisfying(g, cfg, |s| is_vertex_cover(g, s))
}

pub fn f_value(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    if g.n() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let complement = g.complement();
    smallest_satisfying(g, cfg, |s| is_vertex_cover(g, s) && is_dominating(&complement, s))
}

/// Minimum of the `h` objective over all `2^n - 1` nonempty subsets.
pub fn h_value(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    guard(g, cfg)?;
    let n = g.n();
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let mut best: Option<InvariantWitness> = None;
    for mask in 1..(1u64 << n) {
        let s = VertexSet::from_mask(n, mask);
        let value = h_objective(g, &s);
        if best.as_ref().is_none_or(|b| value < b.value) {
            best = Some(InvariantWitness { value, witness: s });
        }
    }
    Ok(best.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn subset_counts() {
        assert_eq!(k_subsets(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(6, 6).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert!(k_subsets(6, 3).all(|m| m.count_ones() == 3));
    }

    #[test]
    fn oracle_values() {
        let cfg = SolverConfig::default();
        let c5 = generators::cycle(5).unwrap();
        assert_eq!(domination_number(&c5, &cfg).unwrap().value, 2);
        assert_eq!(vertex_cover_number(&c5, &cfg).unwrap().value, 3);
        assert_eq!(h_value(&c5, &cfg).unwrap().value, 3);
        assert_eq!(f_value(&generators::path(4), &cfg).unwrap().value, 2);
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        let cfg = SolverConfig::default();
        assert_eq!(
            domination_number(&generators::path(21), &cfg),
            Err(SolverError::TooLarge {
                guard: "oracle-max-n",
                size: 21,
                limit: 20
            })
        );
    }
}
