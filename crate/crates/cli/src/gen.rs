use anyhow::{bail, Context};
use central_domination::{generators, Graph};

use crate::args::{GenArgs, GenFamily};
use crate::{render_graph, CliResult};

pub fn run(args: &GenArgs) -> CliResult {
    let g = build(args.family, &args.params)?;
    print!("{}", render_graph(&g, args.format).context("cannot encode the graph")?);
    Ok(0)
}

fn build(family: GenFamily, p: &[usize]) -> anyhow::Result<Graph> {
    let arity = match family {
        GenFamily::CompleteBipartite | GenFamily::DoubleStar | GenFamily::CliquePlusIsolates => 2,
        _ => 1,
    };
    if p.len() != arity {
        bail!("{family:?} takes {arity} parameter(s), got {}", p.len());
    }
    Ok(match family {
        GenFamily::Path => generators::path(p[0]),
        GenFamily::Cycle => generators::cycle(p[0])?,
        GenFamily::Complete => generators::complete(p[0]),
        GenFamily::Empty => generators::empty(p[0]),
        GenFamily::CompleteBipartite => generators::complete_bipartite(p[0], p[1])?,
        GenFamily::Wheel => generators::wheel(p[0])?,
        GenFamily::Friendship => generators::friendship(p[0])?,
        GenFamily::DoubleStar => generators::double_star(p[0], p[1])?,
        GenFamily::CliquePlusIsolates => generators::clique_plus_isolates(p[0], p[1])?,
    })
}
