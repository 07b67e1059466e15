//! The central-graph operator `C(G)` and its complement.
//!
//! `C(G)` subdivides every edge of `G` once and joins every pair of
//! originally non-adjacent vertices. Original vertices keep indices
//! `[0, n)`; the subdivision vertex of the `k`-th edge (lexicographic order)
//! is `n + k`.

use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralGraph {
    graph: Graph,
    origin_count: usize,
    sub_edge: Vec<(usize, usize)>,
}

impl CentralGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Order `n` of the source graph.
    pub fn origin_count(&self) -> usize {
        self.origin_count
    }

    pub fn is_original(&self, v: usize) -> bool {
        v < self.origin_count
    }

    /// Source edge of subdivision vertex `v`, or `None` for original vertices.
    pub fn subdivided_edge(&self, v: usize) -> Option<(usize, usize)> {
        v.checked_sub(self.origin_count)
            .and_then(|k| self.sub_edge.get(k).copied())
    }

    pub fn subdivision_edges(&self) -> &[(usize, usize)] {
        &self.sub_edge
    }

    pub fn originals(&self) -> VertexSet {
        VertexSet::from_vertices(self.graph.n(), 0..self.origin_count)
    }

    pub fn subdivisions(&self) -> VertexSet {
        self.originals().complement()
    }
}

pub fn central(g: &Graph) -> CentralGraph {
    let n = g.n();
    let sub_edge: Vec<(usize, usize)> = g.edges().collect();
    let mut c = Graph::empty(n + sub_edge.len());
    for v in 0..n {
        for u in 0..v {
            if !g.has_edge(u, v) {
                c.add_edge(u, v);
            }
        }
    }
    for (k, &(i, j)) in sub_edge.iter().enumerate() {
        c.add_edge(n + k, i);
        c.add_edge(n + k, j);
    }
    CentralGraph {
        graph: c,
        origin_count: n,
        sub_edge,
    }
}

/// `C̄(G)`, built directly from its edge description: `E(G)` on the originals,
/// `c_ij` joined to every original `v_k` with `k ∉ {i, j}`, and all
/// subdivision vertices pairwise adjacent.
pub fn central_complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let mut c = Graph::empty(n + m);
    for &(u, v) in &edges {
        c.add_edge(u, v);
    }
    for (k, &(i, j)) in edges.iter().enumerate() {
        for v in (0..n).filter(|&v| v != i && v != j) {
            c.add_edge(n + k, v);
        }
        for l in 0..k {
            c.add_edge(n + k, n + l);
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn check_invariants(g: &Graph) {
        let n = g.n();
        let m = g.edge_count();
        let cg = central(g);
        let c = cg.graph();
        assert_eq!(c.n(), n + m);
        assert_eq!(c.edge_count(), n * n.saturating_sub(1) / 2 + m);
        for v in 0..n {
            assert_eq!(c.degree(v), n - 1);
            for u in 0..n {
                if u != v {
                    assert_eq!(c.has_edge(u, v), !g.has_edge(u, v));
                }
            }
        }
        for s in n..n + m {
            let (i, j) = cg.subdivided_edge(s).unwrap();
            assert!(g.has_edge(i, j));
            assert_eq!(c.neighbors(s).to_vec(), vec![i, j]);
        }
    }

    #[test]
    fn central_examples() {
        let p3 = central(&generators::path(3));
        assert_eq!(p3.graph().n(), 5);
        assert_eq!(p3.graph().edge_count(), 5);
        assert_eq!(central(&Graph::empty(4)).into_graph(), generators::complete(4));
        let k3 = central(&generators::complete(3));
        assert_eq!(k3.graph().n(), 6);
        assert_eq!(k3.graph().edge_count(), 6);
        assert!((0..3).all(|v| k3.graph().degree(v) == 2));
        assert_eq!(k3.subdivided_edge(0), None);
        assert_eq!(k3.subdivided_edge(3), Some((0, 1)));
        assert_eq!(k3.subdivided_edge(5), Some((1, 2)));
    }

    #[test]
    fn central_invariants_on_small_graphs() {
        for n in 0..=5 {
            for g in generators::labeled_graphs(n) {
                check_invariants(&g);
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(central_complement(&Graph::empty(3)), Graph::empty(3));
        let p4 = central_complement(&generators::path(4));
        for a in 4..7 {
            for b in 4..7 {
                if a != b {
                    assert!(p4.has_edge(a, b));
                }
            }
        }
        // c-vertex of edge (0,1) in C̄(P_3) sees only original 2.
        let p3 = central_complement(&generators::path(3));
        let c01 = central(&generators::path(3)).subdivisions().first().unwrap();
        let originals = VertexSet::from_vertices(5, 0..3);
        assert_eq!(p3.neighbors(c01).intersection(&originals).to_vec(), vec![2]);
    }

    #[test]
    fn complement_matches_generic_complement() {
        for n in 0..=6 {
            for g in generators::labeled_graphs(n).step_by(7) {
                assert_eq!(central_complement(&g), central(&g).graph().complement());
            }
        }
        assert_eq!(
            central(&generators::wheel(5).unwrap()),
            central(&generators::wheel(5).unwrap())
        );
    }
}
