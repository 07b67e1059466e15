use anyhow::Context;
use central_domination::classify::{
    check_bounds_with, complement_central_gamma, equivalence_from, h2_from, report_from, BoundReport, CheckStatus,
    ClassificationReport, ClassifyError, ClassifyOptions, EquivalenceCheck, H2Check, Invariants,
};
use central_domination::format::write_graph6;
use central_domination::{central, Graph, InvariantWitness, SolverConfig};
use serde::Serialize;

use crate::args::AnalyzeArgs;
use crate::{parse_single, print_json, read_input, render_graph, CliError, CliResult, SCHEMA};

#[derive(Debug, Serialize)]
struct Evaluated<T> {
    #[serde(flatten)]
    status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<T>,
}

impl<T> Evaluated<T> {
    fn skipped(reason: &str) -> Self {
        Evaluated {
            status: CheckStatus::Skipped(reason.to_string()),
            result: None,
        }
    }

    fn inconclusive(detail: String) -> Self {
        Evaluated {
            status: CheckStatus::Inconclusive(detail),
            result: None,
        }
    }
}

#[derive(Debug, Serialize)]
struct Checks {
    /// Class prediction against the exact γ(C(G)).
    classification: CheckStatus,
    h2: Evaluated<H2Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    complement_central: Option<Evaluated<InvariantWitness>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equivalence: Option<Evaluated<EquivalenceCheck>>,
}

impl Checks {
    fn statuses(&self) -> Vec<(&'static str, &CheckStatus)> {
        let mut out = vec![("classification", &self.classification), ("h2", &self.h2.status)];
        if let Some(c) = &self.complement_central {
            out.push(("complement-central", &c.status));
        }
        if let Some(e) = &self.equivalence {
            out.push(("equivalence", &e.status));
        }
        out
    }
}

#[derive(Debug, Serialize)]
struct Output {
    schema: u32,
    graph6: Option<String>,
    #[serde(flatten)]
    report: ClassificationReport,
    bounds: BoundReport,
    checks: Checks,
    /// Names of the failed checks and bounds.
    failed: Vec<String>,
}

pub fn run(args: &AnalyzeArgs) -> CliResult {
    let text = read_input(args.input.as_deref())?;
    let g = parse_single(&text, args.format).context("invalid input graph")?;
    if let Some(path) = &args.emit_central {
        let body = render_graph(central(&g).graph(), args.format).context("cannot encode the central graph")?;
        std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let cfg = args.budget.config();
    let opts = ClassifyOptions {
        solver: cfg.clone(),
        require_exact: args.require_exact,
    };
    let out = analyze(&g, &cfg, &opts)?;
    if args.pretty {
        print_pretty(&out);
    } else {
        print_json(&out)?;
    }
    let inconclusive = out
        .checks
        .statuses()
        .into_iter()
        .chain(out.bounds.checks().map(|(name, c)| (name, &c.status)))
        .any(|(_, s)| matches!(s, CheckStatus::Inconclusive(_)));
    Ok(
        if out.checks.classification.is_fail() || (args.strict && !out.failed.is_empty()) {
            1
        } else if args.require_exact && inconclusive {
            3
        } else {
            0
        },
    )
}

fn analyze(g: &Graph, cfg: &SolverConfig, opts: &ClassifyOptions) -> Result<Output, CliError> {
    let inv = Invariants::compute(g, cfg)?;
    let (report, classification) = match report_from(g, &inv, opts) {
        Ok(r) => (r, CheckStatus::Pass),
        Err(ClassifyError::TheoremViolation { message, report }) => (*report, CheckStatus::Fail(message)),
        Err(ClassifyError::Solver(e)) => return Err(e.into()),
        Err(e @ ClassifyError::Hypothesis(_)) => return Err(CliError::Input(e.into())),
    };
    let classification = if report.class == central_domination::ClassTag::Unsupported {
        CheckStatus::Skipped("needs n >= 3 and at least one edge".to_string())
    } else if inv.exact_gamma().is_none() {
        CheckStatus::Inconclusive("exact gamma(C(G)) unavailable".to_string())
    } else {
        classification
    };
    let bounds = check_bounds_with(g, &inv, cfg)?;

    let h2 = match inv.h.as_ref().filter(|_| inv.in_hypothesis()) {
        Some(h) => {
            let c = h2_from(g, h.value);
            Evaluated {
                status: CheckStatus::from_bool(c.agrees(), || {
                    format!("h = {}, structural side = {}", h.value, c.characterized)
                }),
                result: Some(c),
            }
        }
        None => Evaluated::skipped("needs n >= 3 and at least one edge"),
    };

    let (complement_central, equivalence) = if g.n() >= 4 && g.is_connected() {
        match complement_central_gamma(g, cfg) {
            Ok(w) => {
                let cc = Evaluated {
                    status: CheckStatus::from_bool(w.value == 2, || format!("gamma(complement of C(G)) = {}", w.value)),
                    result: Some(w.clone()),
                };
                let eq = match inv.exact_gamma() {
                    Some(gamma) => {
                        let e = equivalence_from(g, gamma, w.value);
                        Evaluated {
                            status: CheckStatus::from_bool(e.agree(), || "the three statements disagree".to_string()),
                            result: Some(e),
                        }
                    }
                    None => Evaluated::inconclusive("exact gamma(C(G)) unavailable".to_string()),
                };
                (Some(cc), Some(eq))
            }
            Err(e) => (
                Some(Evaluated::inconclusive(e.to_string())),
                Some(Evaluated::inconclusive(e.to_string())),
            ),
        }
    } else {
        (None, None)
    };

    let checks = Checks {
        classification,
        h2,
        complement_central,
        equivalence,
    };
    let failed = bounds
        .checks()
        .iter()
        .map(|(name, c)| (*name, &c.status))
        .chain(checks.statuses())
        .filter(|(_, s)| s.is_fail())
        .map(|(name, _)| name.to_string())
        .collect();
    Ok(Output {
        schema: SCHEMA,
        graph6: write_graph6(g).ok(),
        report,
        bounds,
        checks,
        failed,
    })
}

fn status_text(s: &CheckStatus) -> String {
    match s {
        CheckStatus::Pass => "pass".to_string(),
        CheckStatus::Fail(d) => format!("FAIL ({d})"),
        CheckStatus::Skipped(d) => format!("skipped ({d})"),
        CheckStatus::Inconclusive(d) => format!("inconclusive ({d})"),
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".to_string(), |v| v.to_string())
}

fn print_pretty(out: &Output) {
    let r = &out.report;
    println!(
        "graph               {} (n = {}, m = {})",
        out.graph6.as_deref().unwrap_or("-"),
        r.order,
        r.size
    );
    println!(
        "class               {}",
        serde_json::to_value(r.class).unwrap().as_str().unwrap_or("?")
    );
    println!("tau, alpha          {}, {}", r.tau, r.alpha);
    println!("h, f                {}, {}", opt(r.h), opt(r.f));
    match &r.gamma_central {
        Some(g) => println!(
            "gamma(C(G))         {} ({})",
            g.value,
            serde_json::to_value(g.source).unwrap().as_str().unwrap_or("?")
        ),
        None => println!("gamma(C(G))         -"),
    }
    match &r.witnesses.good_cover {
        Some(w) => println!("good cover          {:?}", w.witness),
        None => println!("good cover          none"),
    }
    for (name, c) in out.bounds.checks() {
        println!("{name:<20}{}", status_text(&c.status));
    }
    for (name, s) in out.checks.statuses() {
        println!("{name:<20}{}", status_text(s));
    }
    for note in &r.notes {
        println!("note                {note}");
    }
}
