use serde::Serialize;

use crate::central::central_complement;
use crate::graph::Graph;
use crate::solvers::{self, InvariantWitness, SolverConfig, SolverError};

use super::ClassifyError;

/// Both sides of the `h(G) = 2` characterization, computed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct H2Check {
    pub h_is_two: bool,
    /// `G = K_3 ∪ K̄_{n-3}` or `G` is a subgraph of a double star.
    pub characterized: bool,
}

impl H2Check {
    pub fn agrees(&self) -> bool {
        self.h_is_two == self.characterized
    }
}

fn require_edges(g: &Graph) -> Result<(), ClassifyError> {
    if g.n() < 3 || g.edge_count() == 0 {
        return Err(ClassifyError::Hypothesis(format!(
            "needs n >= 3 and at least one edge (n = {}, m = {})",
            g.n(),
            g.edge_count()
        )));
    }
    Ok(())
}

fn require_connected(g: &Graph) -> Result<(), ClassifyError> {
    if g.n() < 4 || !g.is_connected() {
        return Err(ClassifyError::Hypothesis(format!(
            "needs a connected graph with n >= 4 (n = {}, connected = {})",
            g.n(),
            g.is_connected()
        )));
    }
    Ok(())
}

pub fn h2_characterization(g: &Graph) -> Result<H2Check, ClassifyError> {
    require_edges(g)?;
    let h = solvers::h_value(g).expect("n >= 3").value;
    Ok(h2_from(g, h))
}

/// Evaluates the characterization against an already computed `h(G)`.
pub fn h2_from(g: &Graph, h: usize) -> H2Check {
    H2Check {
        h_is_two: h == 2,
        characterized: g.is_clique_plus_isolates() == Some(3) || g.is_double_star_subgraph(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementCentralCheck {
    pub gamma: InvariantWitness,
    pub holds: bool,
}

/// Exact `γ(C̄(G))`, subject to the same size guard as `γ(C(G))`.
pub fn complement_central_gamma(g: &Graph, cfg: &SolverConfig) -> Result<InvariantWitness, SolverError> {
    let order = g.n() + g.edge_count();
    if order > cfg.exact_central_max_v {
        return Err(SolverError::TooLarge {
            guard: "exact-central-max-v",
            size: order,
            limit: cfg.exact_central_max_v,
        });
    }
    solvers::domination_number_with(&central_complement(g), cfg)
}

/// `γ(C̄(G)) = 2` for connected `G` on at least four vertices.
pub fn check_complement_central(g: &Graph, cfg: &SolverConfig) -> Result<ComplementCentralCheck, ClassifyError> {
    require_connected(g)?;
    let gamma = complement_central_gamma(g, cfg)?;
    Ok(ComplementCentralCheck {
        holds: gamma.value == 2,
        gamma,
    })
}

/// The three statements that must agree for connected `G`, `n ≥ 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalenceCheck {
    pub gamma_central: usize,
    pub gamma_complement: usize,
    /// `γ(C(G)) = γ(C̄(G))`
    pub equal_to_complement: bool,
    /// `γ(C(G)) = 2`
    pub gamma_is_two: bool,
    /// `G = K_3 ∪ K̄_{n-3}` or a double-star subgraph with an edge.
    pub structural: bool,
}

impl EquivalenceCheck {
    pub fn agree(&self) -> bool {
        self.equal_to_complement == self.gamma_is_two && self.gamma_is_two == self.structural
    }
}

pub fn check_equivalence_corollary(g: &Graph, cfg: &SolverConfig) -> Result<EquivalenceCheck, ClassifyError> {
    require_connected(g)?;
    let gamma_central = solvers::central_domination_number(g, cfg)?.value;
    let gamma_complement = complement_central_gamma(g, cfg)?.value;
    Ok(equivalence_from(g, gamma_central, gamma_complement))
}

pub fn equivalence_from(g: &Graph, gamma_central: usize, gamma_complement: usize) -> EquivalenceCheck {
    EquivalenceCheck {
        gamma_central,
        gamma_complement,
        equal_to_complement: gamma_central == gamma_complement,
        gamma_is_two: gamma_central == 2,
        structural: g.is_clique_plus_isolates() == Some(3) || (g.edge_count() > 0 && g.is_double_star_subgraph()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn h2_examples() {
        let g = generators::clique_plus_isolates(3, 5).unwrap();
        let c = h2_characterization(&g).unwrap();
        assert!(c.h_is_two && c.characterized);
        let c = h2_characterization(&generators::path(4)).unwrap();
        assert!(c.h_is_two && c.characterized);
        let c = h2_characterization(&generators::cycle(5).unwrap()).unwrap();
        assert!(!c.h_is_two && !c.characterized);
        assert!(h2_characterization(&Graph::empty(4)).is_err());
        assert!(h2_characterization(&generators::path(2)).is_err());
    }

    #[test]
    fn complement_central_examples() {
        let cfg = SolverConfig::default();
        for g in [
            generators::path(4),
            generators::complete_bipartite(1, 5).unwrap(),
            generators::cycle(6).unwrap(),
            generators::complete(5),
        ] {
            let c = check_complement_central(&g, &cfg).unwrap();
            assert!(c.holds, "{g:?}");
        }
        assert!(check_complement_central(&generators::path(3), &cfg).is_err());
        let disconnected = generators::clique_plus_isolates(3, 5).unwrap();
        assert!(check_complement_central(&disconnected, &cfg).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let cfg = SolverConfig::default();
        let ds = check_equivalence_corollary(&generators::double_star(2, 2).unwrap(), &cfg).unwrap();
        assert!(ds.agree() && ds.gamma_is_two && ds.structural && ds.equal_to_complement);
        let c5 = check_equivalence_corollary(&generators::cycle(5).unwrap(), &cfg).unwrap();
        assert!(c5.agree());
        assert!(!c5.gamma_is_two && !c5.structural && !c5.equal_to_complement);
        assert_eq!(c5.gamma_central, 3);
        let star = check_equivalence_corollary(&generators::complete_bipartite(1, 4).unwrap(), &cfg).unwrap();
        assert!(star.agree() && star.gamma_is_two);
    }
}
