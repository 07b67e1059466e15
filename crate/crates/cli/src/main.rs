mod analyze;
mod args;
mod corpus;
mod family;
mod gen;

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use anyhow::Context;
use central_domination::format::{parse_edge_list, write_edge_list, write_graph6};
use central_domination::{Graph, SolverError};
use clap::Parser;

use args::{Cli, Command, InputFormat};

/// Exit codes: 0 success, 1 check failures, 2 input errors, 3 budget exceeded.
pub enum CliError {
    Input(anyhow::Error),
    Budget(SolverError),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Input(e)
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        CliError::Budget(e)
    }
}

pub type CliResult = Result<u8, CliError>;

pub const SCHEMA: u32 = 1;

pub fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("cannot read stdin")?;
            Ok(text)
        }
    }
}

pub fn render_graph(g: &Graph, format: InputFormat) -> anyhow::Result<String> {
    Ok(match format {
        InputFormat::Graph6 => write_graph6(g)? + "\n",
        InputFormat::Edgelist => write_edge_list(g),
    })
}

pub fn parse_single(text: &str, format: InputFormat) -> anyhow::Result<Graph> {
    match format {
        InputFormat::Graph6 => {
            let lines: Vec<_> = central_domination::format::graph6_lines(text).collect();
            match lines.as_slice() {
                [(_, line)] => Ok(central_domination::format::parse_graph6(line)?),
                [] => anyhow::bail!("no graph6 line in input"),
                _ => anyhow::bail!("expected one graph, found {} graph6 lines", lines.len()),
            }
        }
        InputFormat::Edgelist => Ok(parse_edge_list(text)?),
    }
}

pub fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => analyze::run(&a),
        Command::Corpus(a) => corpus::run(&a),
        Command::Family(a) => family::run(&a),
        Command::Gen(a) => gen::run(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
