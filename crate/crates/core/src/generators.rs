//! Named graph families.
//!
//! Numbering conventions are fixed so witnesses are reproducible:
//! paths and cycles run `0, 1, ..., n-1` in order; `complete_bipartite(m, n)`
//! puts its parts on `[0, m)` and `[m, m+n)`; the wheel hub and the friendship
//! centre are the *last* and *first* vertex respectively.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid parameters for {family}: {reason}")]
pub struct GeneratorError {
    pub family: &'static str,
    pub reason: String,
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GeneratorError {
    GeneratorError {
        family,
        reason: reason.into(),
    }
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(invalid("cycle", format!("need n >= 3, got {n}")));
    }
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 0..n {
        for u in 0..v {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GeneratorError> {
    if m < 1 || n < 1 {
        return Err(invalid("complete_bipartite", format!("need m, n >= 1, got ({m}, {n})")));
    }
    let mut g = Graph::empty(m + n);
    for a in 0..m {
        for b in m..m + n {
            g.add_edge(a, b);
        }
    }
    Ok(g)
}

/// `W_n`: a cycle on `0..n` plus hub `n`. Order `n + 1`.
pub fn wheel(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(invalid("wheel", format!("need n >= 3, got {n}")));
    }
    let c = cycle(n)?;
    let mut g = Graph::empty(n + 1);
    for (u, v) in c.edges() {
        g.add_edge(u, v);
    }
    for v in 0..n {
        g.add_edge(v, n);
    }
    Ok(g)
}

/// `F_n`: `n` triangles sharing vertex 0; triangle `i` is `0, 2i+1, 2i+2`.
pub fn friendship(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(invalid("friendship", "need n >= 1"));
    }
    let mut g = Graph::empty(2 * n + 1);
    for i in 0..n {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    Ok(g)
}

/// Centres 0 and 1; leaves `2..2+l` hang on 0, the next `m` on 1.
pub fn double_star(l: usize, m: usize) -> Result<Graph, GeneratorError> {
    if l < 1 || m < 1 {
        return Err(invalid("double_star", format!("need l, m >= 1, got ({l}, {m})")));
    }
    let mut g = Graph::empty(l + m + 2);
    g.add_edge(0, 1);
    for v in 2..2 + l {
        g.add_edge(0, v);
    }
    for v in 2 + l..2 + l + m {
        g.add_edge(1, v);
    }
    Ok(g)
}

/// `K_ℓ` on `[0, ℓ)` plus `n - ℓ` isolated vertices.
pub fn clique_plus_isolates(l: usize, n: usize) -> Result<Graph, GeneratorError> {
    if l > n {
        return Err(invalid(
            "clique_plus_isolates",
            format!("need l <= n, got l = {l}, n = {n}"),
        ));
    }
    let mut g = Graph::empty(n);
    for v in 0..l {
        for u in 0..v {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `G ∘ P_m`: vertex `v` of `g` gets the private path
/// `n + v*m, ..., n + v*m + m - 1`, attached at its first vertex.
pub fn corona(g: &Graph, m: usize) -> Result<Graph, GeneratorError> {
    if m < 1 {
        return Err(invalid("corona", "need m >= 1"));
    }
    let n = g.n();
    let mut out = Graph::empty((m + 1) * n);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for v in 0..n {
        let base = n + v * m;
        out.add_edge(v, base);
        for k in 1..m {
            out.add_edge(base + k - 1, base + k);
        }
    }
    Ok(out)
}

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them), in pair-mask
/// order. Limited to `n ≤ 11`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "labeled enumeration is limited to n <= 11");
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |mask| Graph::from_pair_mask(n, mask))
}
