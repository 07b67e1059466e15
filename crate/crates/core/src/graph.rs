//! Simple undirected graphs and the structural operations the invariants are
//! defined through.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency is one [`VertexSet`] per vertex; symmetry and irreflexivity are
/// enforced by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Repeated edges are merged; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Graph whose edge set is given by the bits of `mask` over the pairs
    /// `(0,1), (0,2), (1,2), (0,3), ...` (the graph6 column order).
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut g = self.clone();
        g.add_edge(u, v);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection_len(s)).sum::<usize>() / 2
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&v| self.adj[v].is_empty()))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph { adj }
    }

    /// Induced subgraph on `V \ s`.
    ///
    /// Returns the subgraph together with `kept`, where `kept[i]` is the
    /// original index of new vertex `i`.
    pub fn delete_vertices(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n()).filter(|v| !s.contains(*v)).collect();
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let mut g = Graph::empty(kept.len());
        for (i, &v) in kept.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = new_index[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        (g, kept)
    }

    /// `N*(S)`: vertices outside `s` adjacent to every member of `s`.
    /// For `s = ∅` this is all of `V`.
    pub fn n_star(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.complement();
        for v in s.iter() {
            out.intersect_with(&self.adj[v]);
        }
        out
    }

    /// `i(N*(S))`: members of `N*(S)` that are isolated in `G - S`.
    pub fn isolated_count_in_n_star(&self, s: &VertexSet) -> usize {
        self.n_star(s).iter().filter(|&x| self.adj[x].is_subset(s)).count()
    }

    /// Connected components ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut frontier = VertexSet::new(n);
            frontier.insert(start);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                let mut next = VertexSet::new(n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.difference_with(&comp);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.adj[v].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest finite distance, or `None` if the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n() == 0 || !self.is_connected() {
            return None;
        }
        (0..self.n())
            .map(|v| self.distances_from(v).into_iter().flatten().max().unwrap_or(0))
            .max()
    }

    /// Proper 2-coloring (`true` = second class), or `None` if the graph has
    /// an odd cycle. The smallest vertex of each component gets `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for w in self.adj[v].iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// If the graph is `K_ℓ ∪ K̄_{n-ℓ}` with `ℓ ≥ 3`, returns `ℓ`.
    pub fn is_clique_plus_isolates(&self) -> Option<usize> {
        let mut nontrivial = self.components().into_iter().filter(|c| c.len() >= 2);
        let comp = nontrivial.next()?;
        if nontrivial.next().is_some() {
            return None;
        }
        let l = comp.len();
        if l < 3 {
            return None;
        }
        comp.iter().all(|v| self.degree(v) == l - 1).then_some(l)
    }

    /// Whether the graph is a (possibly disconnected) subgraph of some double
    /// star.
    ///
    /// Holds iff the graph has no edges, or two vertices `u, v` cover every
    /// edge while no third vertex is adjacent to both.
    pub fn is_double_star_subgraph(&self) -> bool {
        let n = self.n();
        if self.edge_count() == 0 {
            return true;
        }
        if n < 2 {
            return false;
        }
        let all = self.vertices();
        for u in 0..n {
            for v in (u + 1)..n {
                let mut centers = VertexSet::new(n);
                centers.insert(u);
                centers.insert(v);
                let rest = all.difference(&centers);
                if self.edges_within(&rest) == 0 && !self.adj[u].intersection(&self.adj[v]).intersects(&rest) {
                    return true;
                }
            }
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
