use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use central_domination::SolverConfig;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cdom", version, about = "Domination in central graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one graph and evaluate every check on it
    Analyze(AnalyzeArgs),
    /// Run theorem checks over a graph6 file
    Corpus(CorpusArgs),
    /// Compare closed forms with computed values across a parameter range
    Family(FamilyArgs),
    /// Print a member of a named family
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    #[value(alias = "edge-list")]
    Edgelist,
}

#[derive(Debug, Args)]
pub struct Budget {
    /// Largest graph the subset-enumeration oracles accept
    #[arg(long, default_value_t = SolverConfig::default().oracle_max_n)]
    pub oracle_max_n: usize,
    /// Largest central graph on which gamma is computed exactly
    #[arg(long, default_value_t = SolverConfig::default().exact_central_max_v)]
    pub exact_central_max_v: usize,
    /// Largest central graph for the gamma-set preservation check
    #[arg(long, default_value_t = SolverConfig::default().preservation_max_v)]
    pub preservation_max_v: usize,
    /// Wall-clock limit per search, in milliseconds
    #[arg(long)]
    pub time_budget_ms: Option<u64>,
    /// Branch-and-bound node limit per search (0 = unlimited)
    #[arg(long, default_value_t = SolverConfig::default().node_budget.unwrap_or(0))]
    pub node_budget: u64,
}

impl Budget {
    pub fn config(&self) -> SolverConfig {
        SolverConfig {
            oracle_max_n: self.oracle_max_n,
            exact_central_max_v: self.exact_central_max_v,
            preservation_max_v: self.preservation_max_v,
            time_budget: self.time_budget_ms.map(Duration::from_millis),
            node_budget: (self.node_budget > 0).then_some(self.node_budget),
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Input file; `-` or absent reads stdin
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,
    /// Also write the central graph C(G) to this file, in the input format
    #[arg(long, value_name = "FILE")]
    pub emit_central: Option<PathBuf>,
    /// Human-readable summary instead of JSON
    #[arg(long)]
    pub pretty: bool,
    /// Fail with exit code 3 instead of deriving gamma(C(G)) from the class
    #[arg(long)]
    pub require_exact: bool,
    /// Exit with code 1 when any check fails
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub budget: Budget,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// graph6 file, one graph per line; `-` reads stdin
    pub file: PathBuf,
    /// Comma-separated checks: all, core, h=f, gamma=h, trichotomy, chain,
    /// bounds, h2, preservation, complement-central, equivalence, corona
    #[arg(long, default_value = "all")]
    pub checks: String,
    /// Include passing records in the output
    #[arg(long)]
    pub all_records: bool,
    /// Human-readable summary instead of JSON
    #[arg(long)]
    pub pretty: bool,
    #[command(flatten)]
    pub budget: Budget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    Wheel,
    Friendship,
    Corona,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    #[value(name = "f-derived")]
    FDerived,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub family: FamilyName,
    /// Main parameter range, `a..b` (inclusive) or a single value
    #[arg(long, value_parser = parse_range)]
    pub n: Option<RangeInclusive<usize>>,
    /// Smaller side range for complete_bipartite
    #[arg(long, value_parser = parse_range)]
    pub m: Option<RangeInclusive<usize>>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// graph6 file of connected base graphs for corona
    #[arg(long, value_name = "FILE")]
    pub base: Option<PathBuf>,
    /// Human-readable table instead of JSON
    #[arg(long)]
    pub pretty: bool,
    #[command(flatten)]
    pub budget: Budget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Path,
    Cycle,
    Complete,
    Empty,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    Wheel,
    Friendship,
    #[value(name = "double_star", alias = "double-star")]
    DoubleStar,
    #[value(name = "clique_plus_isolates", alias = "clique-plus-isolates")]
    CliquePlusIsolates,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: GenFamily,
    /// Integer parameters of the family
    pub params: Vec<usize>,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let number = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (number(a)?, number(b)?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let a = number(s)?;
            Ok(a..=a)
        }
    }
}
