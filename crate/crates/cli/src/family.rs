use anyhow::{bail, Context};
use central_domination::classify::{formula_gamma_central, CheckStatus, FamilySpec};
use central_domination::format::{graph6_lines, parse_graph6};
use central_domination::solvers::{central_domination_number, f_value_with};
use central_domination::{generators, Graph, SolverConfig};
use serde::Serialize;

use crate::args::{FamilyArgs, FamilyName, Mode};
use crate::{print_json, read_input, CliResult, SCHEMA};

#[derive(Debug, Serialize)]
struct Row {
    label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph6: Option<String>,
    params: FamilySpec,
    formula: usize,
    computed: Option<usize>,
    #[serde(flatten)]
    status: CheckStatus,
}

#[derive(Debug, Default, Serialize)]
struct Totals {
    rows: usize,
    matched: usize,
    mismatched: usize,
    inconclusive: usize,
}

#[derive(Debug, Serialize)]
struct Output {
    schema: u32,
    mode: &'static str,
    rows: Vec<Row>,
    summary: Totals,
}

pub fn run(args: &FamilyArgs) -> CliResult {
    let members = members(args)?;
    let cfg = args.budget.config();
    let rows: Vec<Row> = members
        .into_iter()
        .map(|(spec, g, graph6)| evaluate(spec, &g, graph6, args.mode, &cfg))
        .collect::<anyhow::Result<_>>()?;
    let mut summary = Totals {
        rows: rows.len(),
        ..Totals::default()
    };
    for r in &rows {
        match r.status {
            CheckStatus::Pass => summary.matched += 1,
            CheckStatus::Fail(_) => summary.mismatched += 1,
            _ => summary.inconclusive += 1,
        }
    }
    let out = Output {
        schema: SCHEMA,
        mode: match args.mode {
            Mode::Exact => "exact",
            Mode::FDerived => "f-derived",
        },
        rows,
        summary,
    };
    if args.pretty {
        print_pretty(&out);
    } else {
        print_json(&out)?;
    }
    Ok(if out.summary.mismatched > 0 {
        1
    } else if out.summary.inconclusive > 0 {
        3
    } else {
        0
    })
}

/// Every requested family member, validated before anything is computed.
fn members(args: &FamilyArgs) -> anyhow::Result<Vec<(FamilySpec, Graph, Option<String>)>> {
    let mut specs = Vec::new();
    let mut out = Vec::new();
    if args.family == FamilyName::Corona {
        let Some(path) = &args.base else {
            bail!("corona needs --base FILE with connected base graphs");
        };
        let text = read_input(Some(path))?;
        for (line, g6) in graph6_lines(&text) {
            let base = parse_graph6(g6).with_context(|| format!("line {line} of {}", path.display()))?;
            if base.n() < 3 || !base.is_connected() {
                bail!("line {line}: base graph {g6} must be connected with at least 3 vertices");
            }
            let spec = FamilySpec::Corona1 { base_order: base.n() };
            let g = generators::corona(&base, 1)?;
            out.push((spec, g, Some(g6.to_string())));
        }
        if out.is_empty() {
            bail!("no base graphs in {}", path.display());
        }
        return Ok(out);
    }
    let Some(ns) = args.n.clone() else {
        bail!("--n is required for {:?}", args.family);
    };
    for n in ns {
        match args.family {
            FamilyName::Path => specs.push(FamilySpec::Path { n }),
            FamilyName::Cycle => specs.push(FamilySpec::Cycle { n }),
            FamilyName::Wheel => specs.push(FamilySpec::Wheel { n }),
            FamilyName::Friendship => specs.push(FamilySpec::Friendship { n }),
            FamilyName::CompleteBipartite => {
                let Some(ms) = args.m.clone() else {
                    bail!("--m is required for complete_bipartite");
                };
                specs.extend(ms.filter(|&m| m <= n).map(|m| FamilySpec::CompleteBipartite { m, n }));
            }
            FamilyName::Corona => unreachable!(),
        }
    }
    if specs.is_empty() {
        bail!("the parameter ranges select no family member");
    }
    for spec in &specs {
        spec.validate()?;
    }
    for spec in specs {
        let g = spec.graph()?.expect("non-corona families build their graph");
        out.push((spec, g, None));
    }
    Ok(out)
}

fn evaluate(
    spec: FamilySpec,
    g: &Graph,
    graph6: Option<String>,
    mode: Mode,
    cfg: &SolverConfig,
) -> anyhow::Result<Row> {
    let formula = formula_gamma_central(&spec)?;
    let computed = match mode {
        Mode::Exact => central_domination_number(g, cfg),
        Mode::FDerived => f_value_with(g, cfg),
    };
    let (computed, status) = match computed {
        Ok(w) => (
            Some(w.value),
            CheckStatus::from_bool(w.value == formula, || {
                format!("formula {formula}, computed {}", w.value)
            }),
        ),
        Err(e) => (None, CheckStatus::Inconclusive(e.to_string())),
    };
    Ok(Row {
        label: spec.to_string(),
        graph6,
        params: spec,
        formula,
        computed,
        status,
    })
}

fn print_pretty(out: &Output) {
    println!("{:<28}{:>9}{:>10}  status", "member", "formula", "computed");
    for r in &out.rows {
        let label = match &r.graph6 {
            Some(g6) => format!("{} {g6}", r.label),
            None => r.label.clone(),
        };
        let computed = r.computed.map_or("-".to_string(), |c| c.to_string());
        let status = match &r.status {
            CheckStatus::Pass => "match".to_string(),
            CheckStatus::Fail(_) => "MISMATCH".to_string(),
            CheckStatus::Inconclusive(d) | CheckStatus::Skipped(d) => format!("inconclusive ({d})"),
        };
        println!("{label:<28}{:>9}{computed:>10}  {status}", r.formula);
    }
    let s = &out.summary;
    println!(
        "{} rows ({} mode): {} match, {} mismatch, {} inconclusive",
        s.rows, out.mode, s.matched, s.mismatched, s.inconclusive
    );
}
