use std::fmt;

use serde::Serialize;

use crate::generators;
use crate::graph::Graph;

use super::ClassifyError;

/// A named family member with the parameters its closed form is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `P_n`, `n ≥ 3`.
    Path { n: usize },
    /// `C_n`, `n ≥ 3`.
    Cycle { n: usize },
    /// `K_{m,n}`, `n ≥ m ≥ 2`.
    CompleteBipartite { m: usize, n: usize },
    /// `W_n` of order `n + 1`, `n ≥ 3`.
    Wheel { n: usize },
    /// `F_n`, `n ≥ 2`.
    Friendship { n: usize },
    /// `G ∘ P_1` for a connected base graph of order `base_order ≥ 3`.
    Corona1 { base_order: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), ClassifyError> {
        let ok = match *self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Wheel { n } => n >= 3,
            FamilySpec::CompleteBipartite { m, n } => n >= m && m >= 2,
            FamilySpec::Friendship { n } => n >= 2,
            FamilySpec::Corona1 { base_order } => base_order >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(ClassifyError::Hypothesis(format!(
                "{self} is outside the closed form's range"
            )))
        }
    }

    /// The family member itself; `None` for coronas, which need a base graph.
    pub fn graph(&self) -> Result<Option<Graph>, ClassifyError> {
        self.validate()?;
        let build = || -> Result<Option<Graph>, generators::GeneratorError> {
            Ok(Some(match *self {
                FamilySpec::Path { n } => generators::path(n),
                FamilySpec::Cycle { n } => generators::cycle(n)?,
                FamilySpec::CompleteBipartite { m, n } => generators::complete_bipartite(m, n)?,
                FamilySpec::Wheel { n } => generators::wheel(n)?,
                FamilySpec::Friendship { n } => generators::friendship(n)?,
                FamilySpec::Corona1 { .. } => return Ok(None),
            }))
        };
        build().map_err(|e| ClassifyError::Hypothesis(e.to_string()))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::CompleteBipartite { m, n } => write!(f, "K_{{{m},{n}}}"),
            FamilySpec::Wheel { n } => write!(f, "W_{n}"),
            FamilySpec::Friendship { n } => write!(f, "F_{n}"),
            FamilySpec::Corona1 { base_order } => write!(f, "G o P_1 (|G| = {base_order})"),
        }
    }
}

/// Closed form of `γ(C(G))` for a family member.
pub fn formula_gamma_central(spec: &FamilySpec) -> Result<usize, ClassifyError> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Path { n } if n <= 5 => n.div_ceil(2),
        FamilySpec::Path { n } => n / 2,
        FamilySpec::Cycle { n } if n <= 4 => n - 1,
        FamilySpec::Cycle { n } => n.div_ceil(2),
        FamilySpec::CompleteBipartite { m, .. } => m + 1,
        FamilySpec::Wheel { n: 4 } => 4,
        FamilySpec::Wheel { n } => n.div_ceil(2) + 1,
        FamilySpec::Friendship { n } => n + 1,
        FamilySpec::Corona1 { base_order } => base_order,
    })
}
