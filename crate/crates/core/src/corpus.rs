//! Theorem checks over graph6 corpora.
//!
//! Every input line yields exactly one [`CorpusResult`]. Graphs are evaluated
//! in parallel and returned in input order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::central::central;
use crate::classify::{self, CheckStatus, Invariants};
use crate::format::{graph6_lines, parse_graph6, write_graph6};
use crate::generators;
use crate::graph::Graph;
use crate::solvers::{self, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `h(G) = f(G)` off the exceptional family.
    HEqualsF,
    /// `γ(C(G)) = h(G)` off the exceptional family.
    GammaEqualsH,
    /// Class prediction matches `γ(C(G)) ∈ {τ, τ+1}`.
    Trichotomy,
    /// `h ≤ f ≤ τ + 1`.
    Chain,
    /// The four bounds with their equality clauses.
    Bounds,
    /// `h(G) = 2` characterization.
    H2,
    /// Some γ-set of `C(G)` avoids subdivision vertices iff `G` is not exceptional.
    Preservation,
    /// `γ(C̄(G)) = 2`.
    ComplementCentral,
    /// The three equivalent statements about `γ(C(G)) = 2`.
    Equivalence,
    /// `γ(C(G ∘ P_1)) = |V(G)|`.
    Corona,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::HEqualsF,
        Check::GammaEqualsH,
        Check::Trichotomy,
        Check::Chain,
        Check::Bounds,
        Check::H2,
        Check::Preservation,
        Check::ComplementCentral,
        Check::Equivalence,
        Check::Corona,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::HEqualsF => "h=f",
            Check::GammaEqualsH => "gamma=h",
            Check::Trichotomy => "trichotomy",
            Check::Chain => "chain",
            Check::Bounds => "bounds",
            Check::H2 => "h2",
            Check::Preservation => "preservation",
            Check::ComplementCentral => "complement-central",
            Check::Equivalence => "equivalence",
            Check::Corona => "corona",
        }
    }

    fn needs_invariants(self) -> bool {
        !matches!(self, Check::ComplementCentral | Check::Corona)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Parses a comma-separated selector. `all` selects every check and `core`
/// the six per-graph theorem checks (`h=f,gamma=h,trichotomy,chain,bounds,h2`).
pub fn parse_checks(selector: &str) -> Result<Vec<Check>, String> {
    let mut out = Vec::new();
    for token in selector.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token {
            "all" => out.extend(Check::ALL),
            "core" => out.extend(&Check::ALL[..6]),
            other => out.push(other.parse()?),
        }
    }
    if out.is_empty() {
        return Err("no checks selected".to_string());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    #[serde(flatten)]
    pub status: CheckStatus,
}

/// The numbers a failing record carries so it can be replayed with `analyze`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Panel {
    pub order: usize,
    pub size: usize,
    pub tau: usize,
    pub alpha: usize,
    pub h: Option<usize>,
    pub f: Option<usize>,
    pub good_cover_exists: bool,
    pub gamma_central: Option<usize>,
}

impl Panel {
    fn from_invariants(inv: &Invariants) -> Self {
        Panel {
            order: inv.n,
            size: inv.m,
            tau: inv.tau.value,
            alpha: inv.alpha.value,
            h: inv.h.as_ref().map(|w| w.value),
            f: inv.f.as_ref().map(|w| w.value),
            good_cover_exists: inv.good_cover.is_some(),
            gamma_central: inv.exact_gamma(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusResult {
    pub line: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parse_error: Option<String>,
    pub checks: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Panel>,
}

impl CorpusResult {
    pub fn failed(&self) -> bool {
        self.parse_error.is_some() || self.checks.iter().any(|c| c.status.is_fail())
    }

    pub fn inconclusive(&self) -> bool {
        self.checks
            .iter()
            .any(|c| matches!(c.status, CheckStatus::Inconclusive(_)))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub parse_failures: usize,
    pub failed_graphs: usize,
    pub inconclusive_graphs: usize,
    pub per_check: BTreeMap<Check, CheckCounts>,
}

impl Summary {
    pub fn from_results(checks: &[Check], results: &[CorpusResult]) -> Self {
        let mut per_check: BTreeMap<Check, CheckCounts> = checks.iter().map(|&c| (c, CheckCounts::default())).collect();
        let mut s = Summary {
            graphs: results.len(),
            ..Summary::default()
        };
        for r in results {
            s.parse_failures += usize::from(r.parse_error.is_some());
            s.failed_graphs += usize::from(r.failed());
            s.inconclusive_graphs += usize::from(r.inconclusive());
            for o in &r.checks {
                let Some(counts) = per_check.get_mut(&o.check) else {
                    continue;
                };
                match o.status {
                    CheckStatus::Pass => counts.pass += 1,
                    CheckStatus::Fail(_) => counts.fail += 1,
                    CheckStatus::Skipped(_) => counts.skipped += 1,
                    CheckStatus::Inconclusive(_) => counts.inconclusive += 1,
                }
            }
        }
        s.per_check = per_check;
        s
    }

    pub fn failures(&self) -> usize {
        self.failed_graphs
    }

    /// 0 when everything passed, 1 on any failure, 3 when only budgets
    /// prevented a verdict.
    pub fn exit_code(&self) -> i32 {
        if self.failed_graphs > 0 {
            1
        } else if self.inconclusive_graphs > 0 {
            3
        } else {
            0
        }
    }
}

/// Evaluates every line of a graph6 corpus.
pub fn scan(text: &str, checks: &[Check], cfg: &SolverConfig) -> Vec<CorpusResult> {
    let lines: Vec<(usize, &str)> = graph6_lines(text).collect();
    lines
        .par_iter()
        .map(|&(line, g6)| match parse_graph6(g6) {
            Ok(g) => {
                let (checks, counterexample) = evaluate(&g, checks, cfg);
                CorpusResult {
                    line,
                    graph6: g6.to_string(),
                    parse_error: None,
                    checks,
                    counterexample,
                }
            }
            Err(e) => CorpusResult {
                line,
                graph6: g6.to_string(),
                parse_error: Some(e.to_string()),
                checks: Vec::new(),
                counterexample: None,
            },
        })
        .collect()
}

/// Runs the selected checks on one graph. The panel is returned when a
/// check failed.
pub fn evaluate(g: &Graph, checks: &[Check], cfg: &SolverConfig) -> (Vec<CheckOutcome>, Option<Panel>) {
    let inv = if checks.iter().any(|c| c.needs_invariants()) {
        Some(Invariants::compute(g, cfg))
    } else {
        None
    };
    let outcomes: Vec<CheckOutcome> = checks
        .iter()
        .map(|&check| {
            let status = match (&inv, check.needs_invariants()) {
                (Some(Err(e)), true) => CheckStatus::Inconclusive(format!("invariants unavailable: {e}")),
                (Some(Ok(inv)), true) => run_with_invariants(g, inv, check, cfg),
                _ => run_standalone(g, check, cfg),
            };
            CheckOutcome { check, status }
        })
        .collect();
    let panel = match &inv {
        Some(Ok(inv)) if outcomes.iter().any(|o| o.status.is_fail()) => Some(Panel::from_invariants(inv)),
        _ => None,
    };
    (outcomes, panel)
}

fn skipped(reason: &str) -> CheckStatus {
    CheckStatus::Skipped(reason.to_string())
}

fn unavailable(e: &impl fmt::Display) -> CheckStatus {
    CheckStatus::Inconclusive(e.to_string())
}

const OUT_OF_HYPOTHESIS: &str = "needs n >= 3 and at least one edge";
const EXCEPTIONAL: &str = "G is a clique plus isolated vertices";
const NOT_CONNECTED_4: &str = "needs a connected graph with n >= 4";

fn run_with_invariants(g: &Graph, inv: &Invariants, check: Check, cfg: &SolverConfig) -> CheckStatus {
    let h = inv.h.as_ref().map(|w| w.value);
    let f = inv.f.as_ref().map(|w| w.value);
    let tau = inv.tau.value;
    match check {
        Check::HEqualsF | Check::GammaEqualsH if !inv.in_hypothesis() => skipped(OUT_OF_HYPOTHESIS),
        Check::HEqualsF | Check::GammaEqualsH if inv.is_exceptional() => skipped(EXCEPTIONAL),
        Check::HEqualsF => CheckStatus::from_bool(h == f, || format!("h = {h:?}, f = {f:?}")),
        Check::GammaEqualsH => match &inv.gamma_central {
            Ok(w) => CheckStatus::from_bool(Some(w.value) == h, || format!("gamma(C(G)) = {}, h = {h:?}", w.value)),
            Err(e) => unavailable(e),
        },
        Check::Trichotomy => {
            if inv.n == 0 {
                return skipped("graph has no vertices");
            }
            let Some(gamma) = inv.exact_gamma() else {
                return unavailable(inv.gamma_central.as_ref().unwrap_err());
            };
            let predicted = inv.predicted_gamma();
            let in_range = gamma == tau || gamma == tau + 1;
            let matches_class = predicted.is_none_or(|p| p == gamma);
            CheckStatus::from_bool(in_range && matches_class, || {
                format!(
                    "class {:?}, tau = {tau}, gamma(C(G)) = {gamma}, predicted {predicted:?}",
                    inv.class()
                )
            })
        }
        Check::Chain => match (h, f) {
            (Some(h), Some(f)) => CheckStatus::from_bool(h <= f && f <= tau + 1, || {
                format!("h = {h}, f = {f}, tau + 1 = {}", tau + 1)
            }),
            _ => skipped("graph has no vertices"),
        },
        Check::Bounds => match classify::check_bounds_with(g, inv, cfg) {
            Ok(report) => {
                let fails: Vec<String> = report
                    .checks()
                    .iter()
                    .filter_map(|(name, c)| match &c.status {
                        CheckStatus::Fail(d) => Some(format!("{name}: {d}")),
                        _ => None,
                    })
                    .collect();
                let checks = report.checks();
                if !fails.is_empty() {
                    CheckStatus::Fail(fails.join("; "))
                } else if let Some((name, c)) = checks
                    .iter()
                    .find(|(_, c)| matches!(c.status, CheckStatus::Inconclusive(_)))
                {
                    CheckStatus::Inconclusive(format!("{name}: {:?}", c.status))
                } else {
                    CheckStatus::Pass
                }
            }
            Err(e) => unavailable(&e),
        },
        Check::H2 => {
            if !inv.in_hypothesis() {
                return skipped(OUT_OF_HYPOTHESIS);
            }
            let c = classify::h2_from(g, h.expect("n >= 3"));
            CheckStatus::from_bool(c.agrees(), || {
                format!("h = {h:?}, structural side = {}", c.characterized)
            })
        }
        Check::Preservation => {
            if !inv.in_hypothesis() {
                return skipped(OUT_OF_HYPOTHESIS);
            }
            match solvers::exists_gamma_set_within_originals(&central(g), cfg) {
                Ok(within) => CheckStatus::from_bool(within != inv.is_exceptional(), || {
                    format!(
                        "gamma-set within originals = {within}, exceptional = {}",
                        inv.is_exceptional()
                    )
                }),
                Err(e) => unavailable(&e),
            }
        }
        Check::Equivalence => {
            if inv.n < 4 || !g.is_connected() {
                return skipped(NOT_CONNECTED_4);
            }
            let Some(gamma) = inv.exact_gamma() else {
                return unavailable(inv.gamma_central.as_ref().unwrap_err());
            };
            match classify::complement_central_gamma(g, cfg) {
                Ok(w) => {
                    let e = classify::equivalence_from(g, gamma, w.value);
                    CheckStatus::from_bool(e.agree(), || format!("{e:?}"))
                }
                Err(e) => unavailable(&e),
            }
        }
        Check::ComplementCentral | Check::Corona => run_standalone(g, check, cfg),
    }
}

fn run_standalone(g: &Graph, check: Check, cfg: &SolverConfig) -> CheckStatus {
    match check {
        Check::ComplementCentral => match classify::check_complement_central(g, cfg) {
            Ok(c) => CheckStatus::from_bool(c.holds, || format!("gamma(complement of C(G)) = {}", c.gamma.value)),
            Err(classify::ClassifyError::Hypothesis(_)) => skipped(NOT_CONNECTED_4),
            Err(e) => unavailable(&e),
        },
        Check::Corona => {
            if g.n() < 3 || !g.is_connected() {
                return skipped("needs a connected graph with n >= 3");
            }
            let corona = generators::corona(g, 1).expect("m = 1 is valid");
            match solvers::central_domination_number(&corona, cfg) {
                Ok(w) => CheckStatus::from_bool(w.value == g.n(), || {
                    format!("gamma(C(G o P_1)) = {}, n = {}", w.value, g.n())
                }),
                Err(e) => unavailable(&e),
            }
        }
        other => unreachable!("{other} needs the invariant panel"),
    }
}

/// Rewrites a graph as its graph6 line for counterexample output.
pub fn graph_id(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|e| format!("<{e}>"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_parsing() {
        assert_eq!(parse_checks("all").unwrap(), Check::ALL.to_vec());
        assert_eq!(parse_checks("core").unwrap().len(), 6);
        assert_eq!(parse_checks("h2, h=f,h2").unwrap(), vec![Check::HEqualsF, Check::H2]);
        assert!(parse_checks("nope").is_err());
        assert!(parse_checks(" , ").is_err());
    }

    #[test]
    fn exceptional_graph_skips_h_equals_f() {
        let k4_k1 = write_graph6(&generators::clique_plus_isolates(4, 5).unwrap()).unwrap();
        let results = scan(&k4_k1, &[Check::HEqualsF], &SolverConfig::default());
        assert_eq!(results.len(), 1);
        assert!(matches!(results[0].checks[0].status, CheckStatus::Skipped(_)));
        assert_eq!(Summary::from_results(&[Check::HEqualsF], &results).exit_code(), 0);
    }

    #[test]
    fn malformed_line_is_recorded() {
        let text = format!("{}\nC!\nD?{{\n", write_graph6(&generators::path(4)).unwrap());
        let checks = parse_checks("all").unwrap();
        let results = scan(&text, &checks, &SolverConfig::default());
        assert_eq!(results.len(), 3);
        assert_eq!(results[1].line, 2);
        assert!(results[1].parse_error.is_some());
        let summary = Summary::from_results(&checks, &results);
        assert_eq!(summary.parse_failures, 1);
        assert_eq!(summary.failed_graphs, 1);
        assert_eq!(summary.exit_code(), 1);
    }

    #[test]
    fn small_graphs_fail_only_on_clique_bounds() {
        let checks = parse_checks("all").unwrap();
        for n in 1..=4 {
            for g in generators::labeled_graphs(n) {
                let (outcomes, panel) = evaluate(&g, &checks, &SolverConfig::default());
                let exceptional = g.is_clique_plus_isolates().is_some();
                assert_eq!(panel.is_some(), exceptional, "{} {outcomes:?}", graph_id(&g));
                for o in &outcomes {
                    match o.status {
                        CheckStatus::Inconclusive(_) => panic!("{} {o:?}", graph_id(&g)),
                        CheckStatus::Fail(_) => assert_eq!(o.check, Check::Bounds),
                        _ => {}
                    }
                }
            }
        }
    }
}
