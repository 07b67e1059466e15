use anyhow::anyhow;
use central_domination::classify::CheckStatus;
use central_domination::corpus::{parse_checks, scan, Check, CorpusResult, Summary};
use serde::Serialize;

use crate::args::CorpusArgs;
use crate::{print_json, read_input, CliResult, SCHEMA};

#[derive(Debug, Serialize)]
struct Output<'a> {
    schema: u32,
    checks: &'a [Check],
    summary: &'a Summary,
    /// Failing, unparsable and inconclusive records, or every record with
    /// `--all-records`.
    records: Vec<&'a CorpusResult>,
}

pub fn run(args: &CorpusArgs) -> CliResult {
    let checks = parse_checks(&args.checks).map_err(|e| anyhow!(e))?;
    let text = read_input(Some(&args.file))?;
    let results = scan(&text, &checks, &args.budget.config());
    let summary = Summary::from_results(&checks, &results);
    let records: Vec<&CorpusResult> = results
        .iter()
        .filter(|r| args.all_records || r.failed() || r.inconclusive())
        .collect();
    if args.pretty {
        print_pretty(&summary, &records);
    } else {
        print_json(&Output {
            schema: SCHEMA,
            checks: &checks,
            summary: &summary,
            records,
        })?;
    }
    Ok(summary.exit_code() as u8)
}

fn print_pretty(summary: &Summary, records: &[&CorpusResult]) {
    println!(
        "{} graphs, {} failed, {} inconclusive, {} parse failures",
        summary.graphs, summary.failed_graphs, summary.inconclusive_graphs, summary.parse_failures
    );
    println!(
        "{:<20}{:>8}{:>8}{:>9}{:>14}",
        "check", "pass", "fail", "skipped", "inconclusive"
    );
    for (check, c) in &summary.per_check {
        println!(
            "{:<20}{:>8}{:>8}{:>9}{:>14}",
            check.name(),
            c.pass,
            c.fail,
            c.skipped,
            c.inconclusive
        );
    }
    for r in records {
        if let Some(e) = &r.parse_error {
            println!("line {}: {:?} parse error: {e}", r.line, r.graph6);
            continue;
        }
        for o in &r.checks {
            match &o.status {
                CheckStatus::Fail(d) => println!("line {}: {} {} FAIL: {d}", r.line, r.graph6, o.check),
                CheckStatus::Inconclusive(d) => {
                    println!("line {}: {} {} inconclusive: {d}", r.line, r.graph6, o.check)
                }
                _ => {}
            }
        }
    }
}
