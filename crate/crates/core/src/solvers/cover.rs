use crate::graph::Graph;
use crate::vset::VertexSet;

use super::{greedy_matching, Budget, InvariantWitness, SolverConfig, SolverError};

/// Exact `τ(G)` with a minimum vertex cover. No budgets.
pub fn vertex_cover_number(g: &Graph) -> InvariantWitness {
    vertex_cover_number_with(g, &SolverConfig::unbounded()).expect("unbounded search cannot fail")
}

/// `α(G) = n - τ(G)`; the witness is the complement of the minimum cover.
pub fn independence_number(g: &Graph) -> InvariantWitness {
    InvariantWitness::from_set(vertex_cover_number(g).witness.complement())
}

/// Branch and bound for minimum vertex cover.
///
/// Degree-0 vertices are dropped and degree-1 vertices force their
/// neighbour. Otherwise the undecided vertex of largest residual degree is
/// either taken, or left out with its whole residual neighbourhood taken.
/// A greedy maximal matching bounds each node from below.
pub fn vertex_cover_number_with(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    let n = g.n();
    let mut search = VcSearch {
        g,
        best: greedy_cover(g),
        budget: Budget::new(cfg),
    };
    search.run(VertexSet::new(n), VertexSet::full(n))?;
    Ok(InvariantWitness::from_set(search.best))
}

fn greedy_cover(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut rest = VertexSet::full(n);
    let mut cover = VertexSet::new(n);
    while let Some((v, d)) = rest
        .iter()
        .map(|v| (v, g.neighbors(v).intersection_len(&rest)))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
    {
        if d == 0 {
            break;
        }
        cover.insert(v);
        rest.remove(v);
    }
    cover
}

/// Vertex of maximum degree inside `und` (lowest index on ties) and that degree.
fn max_residual_degree(g: &Graph, und: &VertexSet) -> (usize, usize) {
    und.iter()
        .map(|v| (v, g.neighbors(v).intersection_len(und)))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .unwrap_or((0, 0))
}

struct VcSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
    budget: Budget,
}

impl VcSearch<'_> {
    fn run(&mut self, mut taken: VertexSet, mut und: VertexSet) -> Result<(), SolverError> {
        self.budget.tick()?;
        let g = self.g;
        loop {
            let mut changed = false;
            for v in und.to_vec() {
                if !und.contains(v) {
                    continue;
                }
                let nb = g.neighbors(v).intersection(&und);
                match nb.len() {
                    0 => {
                        und.remove(v);
                        changed = true;
                    }
                    1 => {
                        let u = nb.first().unwrap();
                        taken.insert(u);
                        und.remove(u);
                        und.remove(v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        if taken.len() >= self.best.len() {
            return Ok(());
        }
        if und.is_empty() {
            self.best = taken;
            return Ok(());
        }
        if taken.len() + greedy_matching(g, &und) >= self.best.len() {
            return Ok(());
        }

        let (v, _) = max_residual_degree(g, &und);
        let nb = g.neighbors(v).intersection(&und);

        let mut with_v = taken.clone();
        with_v.insert(v);
        let mut rest = und.clone();
        rest.remove(v);
        self.run(with_v, rest.clone())?;

        taken.union_with(&nb);
        rest.difference_with(&nb);
        self.run(taken, rest)
    }
}

/// Outcome of the good-cover search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoodCover {
    /// A minimum vertex cover that also dominates the complement.
    Found(InvariantWitness),
    NoneExists,
    /// The search hit a budget before deciding.
    Inconclusive(SolverError),
}

impl GoodCover {
    pub fn witness(&self) -> Option<&InvariantWitness> {
        match self {
            GoodCover::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn exists(&self) -> Option<bool> {
        match self {
            GoodCover::Found(_) => Some(true),
            GoodCover::NoneExists => Some(false),
            GoodCover::Inconclusive(_) => None,
        }
    }
}

pub fn good_cover(g: &Graph) -> GoodCover {
    good_cover_with(g, &SolverConfig::default())
}

/// Searches the vertex covers of size exactly `τ(G)` for one that dominates
/// `Ḡ`, i.e. every vertex outside it has a non-neighbour inside it.
pub fn good_cover_with(g: &Graph, cfg: &SolverConfig) -> GoodCover {
    let tau = match vertex_cover_number_with(g, cfg) {
        Ok(w) => w.value,
        Err(e) => return GoodCover::Inconclusive(e),
    };
    match search_good_cover(g, tau, cfg) {
        Ok(Some(c)) => GoodCover::Found(InvariantWitness::from_set(c)),
        Ok(None) => GoodCover::NoneExists,
        Err(e) => GoodCover::Inconclusive(e),
    }
}

fn search_good_cover(g: &Graph, size: usize, cfg: &SolverConfig) -> Result<Option<VertexSet>, SolverError> {
    let n = g.n();
    // universal vertices are isolated in the complement, so they must be inside
    let forced = VertexSet::from_vertices(n, (0..n).filter(|&v| g.degree(v) + 1 == n));
    let und = forced.complement();
    let mut search = GoodCoverSearch {
        g,
        size,
        budget: Budget::new(cfg),
    };
    search.run(forced, VertexSet::new(n), und)
}

struct GoodCoverSearch<'a> {
    g: &'a Graph,
    size: usize,
    budget: Budget,
}

impl GoodCoverSearch<'_> {
    /// `inside`/`outside` are decided; `und` is open. Outside vertices have all
    /// their neighbours inside.
    fn run(&mut self, inside: VertexSet, outside: VertexSet, und: VertexSet) -> Result<Option<VertexSet>, SolverError> {
        self.budget.tick()?;
        let g = self.g;
        if inside.len() > self.size {
            return Ok(None);
        }
        let reachable = inside.union(&und);
        if outside.iter().any(|x| reachable.is_subset(g.neighbors(x))) {
            return Ok(None);
        }

        let (v, d) = max_residual_degree(g, &und);
        if d == 0 {
            // no edges left: the cover is exactly `inside`
            let dominated = outside.union(&und).iter().all(|x| !inside.is_subset(g.neighbors(x)));
            return Ok(dominated.then_some(inside));
        }
        if inside.len() + greedy_matching(g, &und) > self.size {
            return Ok(None);
        }

        let mut rest = und.clone();
        rest.remove(v);
        let mut with_v = inside.clone();
        with_v.insert(v);
        if let Some(c) = self.run(with_v, outside.clone(), rest.clone())? {
            return Ok(Some(c));
        }

        let nb = g.neighbors(v).intersection(&und);
        let mut without_v = outside;
        without_v.insert(v);
        rest.difference_with(&nb);
        self.run(inside.union(&nb), without_v, rest)
    }
}

/// Exact `f(G)`; `None` on the graph with no vertices. No budgets.
pub fn f_value(g: &Graph) -> Option<InvariantWitness> {
    match f_value_with(g, &SolverConfig::unbounded()) {
        Ok(w) => Some(w),
        Err(SolverError::EmptyGraph) => None,
        Err(e) => unreachable!("unbounded search failed: {e}"),
    }
}

/// `f(G)`: the smallest set that is a vertex cover of `G` and dominates `Ḡ`.
///
/// Such a set is a cover, so `f ≥ τ`; a minimum cover plus any outside vertex
/// always qualifies, so `f ≤ τ + 1`. `f = τ` exactly when a good cover exists.
pub fn f_value_with(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    if g.n() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let cover = vertex_cover_number_with(g, cfg)?;
    if let Some(c) = search_good_cover(g, cover.value, cfg)? {
        return Ok(InvariantWitness::from_set(c));
    }
    let mut s = cover.witness;
    let extra = s
        .complement()
        .first()
        .expect("a minimum cover misses a vertex when n >= 1");
    s.insert(extra);
    Ok(InvariantWitness::from_set(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::solvers::{is_dominating, is_vertex_cover, oracle};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn cover_examples() {
        for n in 1..9 {
            assert_eq!(vertex_cover_number(&generators::complete(n)).value, n - 1);
            assert_eq!(independence_number(&generators::complete(n)).value, 1);
        }
        assert_eq!(vertex_cover_number(&generators::cycle(5).unwrap()).value, 3);
        for k in 1..8 {
            let star = generators::complete_bipartite(1, k).unwrap();
            let w = vertex_cover_number(&star);
            assert_eq!(w.value, 1);
            if k > 1 {
                assert_eq!(w.witness.to_vec(), vec![0]);
            }
        }
    }

    #[test]
    fn good_cover_examples() {
        let p4 = generators::path(4);
        assert_eq!(good_cover(&p4).witness().unwrap().witness, set(4, &[1, 2]));
        let star = generators::complete_bipartite(1, 3).unwrap();
        assert_eq!(good_cover(&star), GoodCover::NoneExists);
        for l in 3..7 {
            for n in l..8 {
                let g = generators::clique_plus_isolates(l, n).unwrap();
                assert_eq!(good_cover(&g), GoodCover::NoneExists);
            }
        }
    }

    #[test]
    fn f_examples() {
        let g = generators::clique_plus_isolates(4, 6).unwrap();
        assert_eq!(f_value(&g).unwrap().value, 4);
        let p4 = f_value(&generators::path(4)).unwrap();
        assert_eq!(p4.value, 2);
        assert_eq!(p4.witness, set(4, &[1, 2]));
        assert_eq!(f_value(&Graph::empty(0)), None);
        assert_eq!(f_value(&Graph::empty(1)).unwrap().value, 1);
    }

    #[test]
    fn agrees_with_oracles_up_to_six() {
        let cfg = SolverConfig::default();
        for n in 0..=6 {
            for g in generators::labeled_graphs(n) {
                let tau = vertex_cover_number(&g);
                assert!(is_vertex_cover(&g, &tau.witness));
                assert_eq!(tau.value, oracle::vertex_cover_number(&g, &cfg).unwrap().value);
                assert_eq!(tau.value + independence_number(&g).value, n);
                if n == 0 {
                    continue;
                }
                let f = f_value(&g).unwrap();
                assert!(is_vertex_cover(&g, &f.witness));
                assert!(is_dominating(&g.complement(), &f.witness));
                assert_eq!(f.value, oracle::f_value(&g, &cfg).unwrap().value, "{g:?}");
                assert!(f.value <= tau.value + 1);
                match good_cover(&g) {
                    GoodCover::Found(c) => {
                        assert_eq!(c.value, tau.value);
                        assert_eq!(f.value, tau.value);
                    }
                    GoodCover::NoneExists => assert_eq!(f.value, tau.value + 1),
                    GoodCover::Inconclusive(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn good_cover_budget_is_reported() {
        let cfg = SolverConfig {
            node_budget: Some(1),
            ..SolverConfig::default()
        };
        let g = generators::cycle(9).unwrap();
        assert!(matches!(good_cover_with(&g, &cfg), GoodCover::Inconclusive(_)));
    }
}
