//! Bounds on `γ(C(G))` in terms of `τ`, `α`, bipartitions and components.
//!
//! Each bound carries an "equality only if" clause; those are checked as
//! implications: when the bound is tight, the stated condition must hold.

use serde::Serialize;

use crate::graph::Graph;
use crate::solvers::{vertex_cover_number_with, Budget, SolverConfig, SolverError};
use crate::vset::VertexSet;

use super::{CheckStatus, ClassifyError, Invariants};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    #[serde(flatten)]
    pub status: CheckStatus,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub gamma_central: Option<usize>,
    pub tight: bool,
    /// The equality condition, evaluated only when the bound is tight.
    pub equality_condition: Option<bool>,
}

impl BoundCheck {
    fn skipped(reason: impl Into<String>) -> Self {
        BoundCheck {
            status: CheckStatus::Skipped(reason.into()),
            lower: None,
            upper: None,
            gamma_central: None,
            tight: false,
            equality_condition: None,
        }
    }
}

/// One bipartition `(A, B)` with `|A| ≤ |B|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteBound {
    pub a: VertexSet,
    pub b: VertexSet,
    pub holds: bool,
    pub tight: bool,
    pub equality_condition: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// `τ(G) ≤ γ(C(G))`; tight only if `G` has a good cover.
    pub tau_lower: BoundCheck,
    /// `γ(C(G)) ≤ α(G) + 1`; tight only if every maximum independent set `S`
    /// meets `N*(V - S)`.
    pub alpha_upper: BoundCheck,
    /// `γ(C(G)) ≤ |B| + 1` over bipartitions; tight only if `B ∩ N*(A) ≠ ∅`.
    pub bipartite: BoundCheck,
    /// The bipartition from BFS 2-coloring, smaller class as `A`.
    pub bipartite_canonical: Option<BipartiteBound>,
    /// The bipartition minimising `|B|`.
    pub bipartite_tightest: Option<BipartiteBound>,
    pub bipartitions_checked: usize,
    /// `Σ τ(G_i) ≤ γ(C(G)) ≤ n - ω` for graphs without isolated vertices and
    /// `ω ≥ 2` components.
    pub disconnected: BoundCheck,
}

impl BoundReport {
    pub fn checks(&self) -> [(&'static str, &BoundCheck); 4] {
        [
            ("tau-lower", &self.tau_lower),
            ("alpha-upper", &self.alpha_upper),
            ("bipartite", &self.bipartite),
            ("disconnected", &self.disconnected),
        ]
    }

    pub fn any_failed(&self) -> bool {
        self.checks().iter().any(|(_, c)| c.status.is_fail())
    }
}

pub fn check_bounds(g: &Graph) -> Result<BoundReport, ClassifyError> {
    let cfg = SolverConfig::default();
    let inv = Invariants::compute(g, &cfg)?;
    Ok(check_bounds_with(g, &inv, &cfg)?)
}

pub fn check_bounds_with(g: &Graph, inv: &Invariants, cfg: &SolverConfig) -> Result<BoundReport, SolverError> {
    let gamma = match &inv.gamma_central {
        Ok(w) => w.value,
        Err(e) => {
            let status = CheckStatus::Inconclusive(format!("exact gamma(C(G)) unavailable: {e}"));
            let c = BoundCheck {
                status,
                ..BoundCheck::skipped("")
            };
            return Ok(BoundReport {
                tau_lower: c.clone(),
                alpha_upper: c.clone(),
                bipartite: c.clone(),
                bipartite_canonical: None,
                bipartite_tightest: None,
                bipartitions_checked: 0,
                disconnected: c,
            });
        }
    };

    let tau_lower = tau_lower_bound(inv, gamma);
    let alpha_upper = alpha_upper_bound(g, inv, gamma, cfg)?;
    let (bipartite, canonical, tightest, checked) = bipartite_bound(g, gamma);
    let disconnected = disconnected_bound(g, gamma, cfg)?;
    Ok(BoundReport {
        tau_lower,
        alpha_upper,
        bipartite,
        bipartite_canonical: canonical,
        bipartite_tightest: tightest,
        bipartitions_checked: checked,
        disconnected,
    })
}

fn tau_lower_bound(inv: &Invariants, gamma: usize) -> BoundCheck {
    if !inv.in_hypothesis() {
        return BoundCheck::skipped("needs n >= 3 and at least one edge");
    }
    let tau = inv.tau.value;
    let tight = gamma == tau;
    let condition = tight.then_some(inv.good_cover.is_some());
    let status = if tau > gamma {
        CheckStatus::Fail(format!("tau = {tau} > gamma(C(G)) = {gamma}"))
    } else if condition == Some(false) {
        CheckStatus::Fail(format!("gamma(C(G)) = tau = {tau} but no good cover exists"))
    } else {
        CheckStatus::Pass
    };
    BoundCheck {
        status,
        lower: Some(tau),
        upper: None,
        gamma_central: Some(gamma),
        tight,
        equality_condition: condition,
    }
}

fn alpha_upper_bound(g: &Graph, inv: &Invariants, gamma: usize, cfg: &SolverConfig) -> Result<BoundCheck, SolverError> {
    if inv.n == 0 {
        return Ok(BoundCheck::skipped("graph has no vertices"));
    }
    let alpha = inv.alpha.value;
    let tight = gamma == alpha + 1;
    let condition = if tight {
        let sets = maximum_independent_sets(g, alpha, cfg)?;
        Some(sets.iter().all(|s| s.intersects(&g.n_star(&s.complement()))))
    } else {
        None
    };
    let status = if gamma > alpha + 1 {
        CheckStatus::Fail(format!("gamma(C(G)) = {gamma} > alpha + 1 = {}", alpha + 1))
    } else if condition == Some(false) {
        CheckStatus::Fail(format!(
            "gamma(C(G)) = alpha + 1 = {gamma} but some maximum independent set S misses N*(V - S)"
        ))
    } else {
        CheckStatus::Pass
    };
    Ok(BoundCheck {
        status,
        lower: None,
        upper: Some(alpha + 1),
        gamma_central: Some(gamma),
        tight,
        equality_condition: condition,
    })
}

/// All independent sets of size `size`, in lexicographic order.
pub fn maximum_independent_sets(g: &Graph, size: usize, cfg: &SolverConfig) -> Result<Vec<VertexSet>, SolverError> {
    fn extend(
        g: &Graph,
        size: usize,
        chosen: &mut Vec<usize>,
        allowed: VertexSet,
        out: &mut Vec<VertexSet>,
        budget: &mut Budget,
    ) -> Result<(), SolverError> {
        budget.tick()?;
        if chosen.len() == size {
            out.push(VertexSet::from_vertices(g.n(), chosen.iter().copied()));
            return Ok(());
        }
        if chosen.len() + allowed.len() < size {
            return Ok(());
        }
        let mut rest = allowed;
        while let Some(v) = rest.first() {
            rest.remove(v);
            chosen.push(v);
            extend(g, size, chosen, rest.difference(g.neighbors(v)), out, budget)?;
            chosen.pop();
            if chosen.len() + rest.len() < size {
                break;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut budget = Budget::new(cfg);
    extend(g, size, &mut Vec::new(), g.vertices(), &mut out, &mut budget)?;
    Ok(out)
}

fn evaluate_bipartition(g: &Graph, a: VertexSet, b: VertexSet, gamma: usize) -> BipartiteBound {
    let tight = gamma == b.len() + 1;
    BipartiteBound {
        holds: gamma <= b.len() + 1,
        tight,
        equality_condition: tight.then(|| b.intersects(&g.n_star(&a))),
        a,
        b,
    }
}

/// Up to this many components every bipartition is enumerated; beyond it
/// only the canonical and the tightest ones are checked.
const MAX_ENUMERATED_COMPONENTS: usize = 16;

fn bipartite_bound(g: &Graph, gamma: usize) -> (BoundCheck, Option<BipartiteBound>, Option<BipartiteBound>, usize) {
    if g.edge_count() == 0 {
        return (BoundCheck::skipped("needs at least one edge"), None, None, 0);
    }
    let Some(color) = g.two_coloring() else {
        return (BoundCheck::skipped("not bipartite"), None, None, 0);
    };
    let n = g.n();
    let comps = g.components();
    // per component: (class coloured false, class coloured true)
    let sides: Vec<(VertexSet, VertexSet)> = comps
        .iter()
        .map(|c| {
            let t = VertexSet::from_vertices(n, c.iter().filter(|&v| color[v]));
            (c.difference(&t), t)
        })
        .collect();
    let orient = |a: VertexSet, b: VertexSet| if a.len() <= b.len() { (a, b) } else { (b, a) };
    let assemble = |flips: &dyn Fn(usize) -> bool| {
        let mut x = VertexSet::new(n);
        let mut y = VertexSet::new(n);
        for (i, (p, q)) in sides.iter().enumerate() {
            let (p, q) = if flips(i) { (q, p) } else { (p, q) };
            x.union_with(p);
            y.union_with(q);
        }
        orient(x, y)
    };

    let (ca, cb) = assemble(&|_| false);
    let canonical = evaluate_bipartition(g, ca, cb, gamma);

    let mut all: Vec<BipartiteBound> = Vec::new();
    if sides.len() <= MAX_ENUMERATED_COMPONENTS {
        for flips in 0u32..(1 << sides.len()) {
            let (a, b) = assemble(&|i| flips >> i & 1 == 1);
            all.push(evaluate_bipartition(g, a, b, gamma));
        }
    } else {
        // subset-sum over component sizes for the most balanced split;
        // layers[i][s] records the flip that first reached side-sum s
        let mut layers: Vec<Vec<Option<bool>>> = Vec::with_capacity(sides.len());
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for (p, q) in &sides {
            let mut next = vec![false; n + 1];
            let mut layer = vec![None; n + 1];
            for s in (0..=n).filter(|&s| reach[s]) {
                for (w, flip) in [(p.len(), false), (q.len(), true)] {
                    if s + w <= n && layer[s + w].is_none() {
                        layer[s + w] = Some(flip);
                        next[s + w] = true;
                    }
                }
            }
            layers.push(layer);
            reach = next;
        }
        let mut s = (0..=n / 2).rev().find(|&s| reach[s]).unwrap();
        let mut flips = vec![false; sides.len()];
        for i in (0..sides.len()).rev() {
            let flip = layers[i][s].unwrap();
            flips[i] = flip;
            s -= if flip { sides[i].1.len() } else { sides[i].0.len() };
        }
        let (a, b) = assemble(&|i| flips[i]);
        all.push(evaluate_bipartition(g, a, b, gamma));
        all.push(canonical.clone());
    }
    let tightest = all.iter().min_by_key(|p| (p.b.len(), p.b.to_vec())).cloned();
    let checked = all.len();
    let failures: Vec<&BipartiteBound> = all
        .iter()
        .filter(|p| !p.holds || p.equality_condition == Some(false))
        .collect();
    let status = match failures.first() {
        None => CheckStatus::Pass,
        Some(p) => CheckStatus::Fail(format!(
            "{} of {checked} bipartitions fail (canonical {}), e.g. A = {:?}, B = {:?}, gamma(C(G)) = {gamma}",
            failures.len(),
            if canonical.holds && canonical.equality_condition != Some(false) {
                "passes"
            } else {
                "fails"
            },
            p.a,
            p.b
        )),
    };
    let tb = tightest.as_ref().unwrap();
    let check = BoundCheck {
        status,
        lower: None,
        upper: Some(tb.b.len() + 1),
        gamma_central: Some(gamma),
        tight: tb.tight,
        equality_condition: tb.equality_condition,
    };
    (check, Some(canonical), tightest, checked)
}

fn disconnected_bound(g: &Graph, gamma: usize, cfg: &SolverConfig) -> Result<BoundCheck, SolverError> {
    let n = g.n();
    if n < 3 {
        return Ok(BoundCheck::skipped("needs n >= 3"));
    }
    if !g.isolated_vertices().is_empty() {
        return Ok(BoundCheck::skipped("has an isolated vertex"));
    }
    let comps = g.components();
    if comps.len() < 2 {
        return Ok(BoundCheck::skipped("connected"));
    }
    let mut lower = 0;
    for c in &comps {
        let (sub, _) = g.delete_vertices(&c.complement());
        lower += vertex_cover_number_with(&sub, cfg)?.value;
    }
    let upper = n - comps.len();
    Ok(BoundCheck {
        status: CheckStatus::from_bool(lower <= gamma && gamma <= upper, || {
            format!("expected {lower} <= gamma(C(G)) = {gamma} <= {upper}")
        }),
        lower: Some(lower),
        upper: Some(upper),
        gamma_central: Some(gamma),
        tight: gamma == lower || gamma == upper,
        equality_condition: None,
    })
}
