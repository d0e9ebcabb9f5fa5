use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand};
use polyrec_cli::formats::{read_input, GraphFile, IncidenceFile, InputFile, ParseError};
use polyrec_cli::suites::Suite;
use polyrec_core::catalogue::{self, fixture, fixtures};
use polyrec_core::reconstruct::DEFAULT_BUDGET;
use polyrec_core::structure::pyramid_decompose;
use polyrec_core::{
    are_equivalent, balinski_check, build_lattice, graphs_isomorphic, reconstruct_with, skeletons_isomorphic, stats,
    vertex_connectivity, Error, Graph, Outcome, ReconstructOptions, VertexFacetIncidence,
};

/// Combinatorial polytopes: face lattices, graphs and reconstruction.
#[derive(Parser)]
#[command(name = "polyrec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarise a graph or incidence file.
    Info {
        path: PathBuf,
        /// Dimension, overriding the one stored in a graph file.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Rebuild the facets of a polytope from its graph.
    Reconstruct {
        path: PathBuf,
        #[arg(long)]
        d: Option<usize>,
        /// Cap on search states; each state is one subset of vertices.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        max_orientations: u64,
    },
    /// Compare two polytopes by graph, k-skeleton or face lattice.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// graph, lattice or skeleton:K
        #[arg(long, default_value = "lattice", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Run property checks over the fixture catalogue.
    Verify {
        #[arg(long, value_parser = suite_names())]
        suite: String,
    },
    /// Print a catalogue polytope; `list` shows the named fixtures.
    Catalogue {
        name: String,
        params: Vec<usize>,
        /// Take an r-fold pyramid over the result.
        #[arg(long, default_value_t = 0)]
        pyramids: usize,
        /// Print the graph instead of the facets.
        #[arg(long)]
        graph: bool,
    },
}

#[derive(Clone, Copy, Debug)]
enum Mode {
    Graph,
    Skeleton(usize),
    Lattice,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "graph" => Ok(Mode::Graph),
        "lattice" => Ok(Mode::Lattice),
        _ => s
            .strip_prefix("skeleton:")
            .and_then(|k| k.parse().ok())
            .map(Mode::Skeleton)
            .ok_or_else(|| format!("unknown mode {s:?}; expected graph, lattice or skeleton:K")),
    }
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&'static str> = Suite::ALL.iter().map(|s| s.name()).collect();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<ParseError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 5,
        Some(
            Error::InternalValidationFailed(_)
            | Error::ValidationFailed(_)
            | Error::NotBalinski { .. }
            | Error::NotPolytopal(_),
        ) => 4,
        _ => 2,
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("POLYREC_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| ParseError(format!("POLYREC_THREADS={value:?} is not a thread count")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Info { path, d } => info(&path, d),
        Command::Reconstruct {
            path,
            d,
            max_orientations,
        } => reconstruct_cmd(&path, d, max_orientations),
        Command::Compare { a, b, mode } => compare(&a, &b, mode),
        Command::Verify { suite } => verify(&suite),
        Command::Catalogue {
            name,
            params,
            pyramids,
            graph,
        } => catalogue_cmd(&name, &params, pyramids, graph),
    }
}

/// The graph of the input and its dimension.
fn graph_and_dim(input: &InputFile, d: Option<usize>) -> Result<(Graph, usize)> {
    match input {
        InputFile::Graph(file) => {
            let d = d.or(file.d).ok_or_else(|| ParseError("graph file has no \"d\"; pass --d".into()))?;
            Ok((file.to_graph()?, d))
        }
        InputFile::Incidence(file) => {
            let p = file.to_incidence()?;
            Ok((build_lattice(&p)?.graph(), d.unwrap_or(p.dim())))
        }
    }
}

fn incidence(input: &InputFile, path: &Path) -> Result<VertexFacetIncidence> {
    match input {
        InputFile::Incidence(file) => Ok(file.to_incidence()?),
        InputFile::Graph(_) => Err(ParseError(format!("{}: an incidence file is needed", path.display())).into()),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn info(path: &Path, d: Option<usize>) -> Result<u8> {
    let input = read_input(path)?;
    let (g, d) = graph_and_dim(&input, d)?;
    let s = stats(&g, d)?;
    let mut lines = Vec::new();
    match &input {
        InputFile::Incidence(file) => {
            let p = file.to_incidence()?;
            let lattice = build_lattice(&p)?;
            lines.push(format!(
                "f₀={}, facets={}, ξ={}, nonsimple={}",
                g.num_vertices(),
                p.num_facets(),
                s.xi,
                s.nonsimple
            ));
            lines.push(format!("d={d}"));
            lines.push(format!("f-vector=({})", join(lattice.f_vector())));
            let dec = pyramid_decompose(&p);
            lines.push(format!("pyramid fold={} apexes=[{}]", dec.fold(), join(&dec.apexes)));
        }
        InputFile::Graph(_) => {
            lines.push(format!(
                "f₀={}, edges={}, ξ={}, nonsimple={}",
                g.num_vertices(),
                g.num_edges(),
                s.xi,
                s.nonsimple
            ));
            lines.push(format!("d={d}"));
            lines.push(format!("universal vertices={}", g.universal_vertices()));
        }
    }
    lines.push(format!("degrees=({})", join(s.degree_sequence())));
    let verdict = if balinski_check(&g, d) { "pass" } else { "fail" };
    lines.push(format!("balinski={verdict} (connectivity {})", vertex_connectivity(&g)));
    println!("{}", lines.join("\n"));
    Ok(0)
}

fn reconstruct_cmd(path: &Path, d: Option<usize>, budget: u64) -> Result<u8> {
    let input = read_input(path)?;
    let (g, d) = graph_and_dim(&input, d)?;
    let opts = ReconstructOptions { budget, threads: 0 };
    match reconstruct_with(&g, d, &opts)? {
        Outcome::Reconstructed(r) => {
            let p = r.incidence(d, g.num_vertices());
            print!("{}", IncidenceFile::from_incidence(&p).to_canonical_json());
            Ok(0)
        }
        Outcome::NotCovered(v) => {
            println!("{}", serde_json::json!({ "covered": v.covered, "reason": v.reason }));
            Ok(3)
        }
    }
}

fn compare(a: &Path, b: &Path, mode: Mode) -> Result<u8> {
    let (ia, ib) = (read_input(a)?, read_input(b)?);
    let same = match mode {
        Mode::Graph => {
            let (ga, _) = graph_and_dim(&ia, Some(0))?;
            let (gb, _) = graph_and_dim(&ib, Some(0))?;
            graphs_isomorphic(&ga, &gb).is_some()
        }
        Mode::Skeleton(k) => {
            let la = build_lattice(&incidence(&ia, a)?)?;
            let lb = build_lattice(&incidence(&ib, b)?)?;
            skeletons_isomorphic(&la.skeleton(k)?, &lb.skeleton(k)?)?
        }
        Mode::Lattice => are_equivalent(&incidence(&ia, a)?, &incidence(&ib, b)?).is_some(),
    };
    println!("{}", if same { "same" } else { "different" });
    Ok(if same { 0 } else { 1 })
}

fn verify(name: &str) -> Result<u8> {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(name).ok_or_else(|| anyhow!("unknown suite {name:?}"))?]
    };
    let mut failed = 0;
    let mut total = 0;
    for suite in suites {
        for check in suite.run() {
            total += 1;
            if !check.passed {
                failed += 1;
            }
            println!("[{}] {check}", suite.name());
        }
    }
    println!("{total} checks, {failed} failed");
    Ok(if failed == 0 { 0 } else { 1 })
}

fn catalogue_cmd(name: &str, params: &[usize], pyramids: usize, as_graph: bool) -> Result<u8> {
    if name == "list" {
        for rec in fixtures() {
            println!("{:<24} d={} n={} {}", rec.name, rec.vfi.dim(), rec.vfi.num_vertices(), rec.provenance.as_str());
        }
        return Ok(0);
    }
    let base = build_fixture(name, params)?;
    let p = catalogue::pyramid_fold(&base, pyramids)?;
    if as_graph {
        let g = build_lattice(&p)?.graph();
        print!("{}", GraphFile::from_graph(&g, Some(p.dim())).to_canonical_json());
    } else {
        print!("{}", IncidenceFile::from_incidence(&p).to_canonical_json());
    }
    Ok(0)
}

fn build_fixture(name: &str, params: &[usize]) -> Result<VertexFacetIncidence> {
    let one = || -> Result<usize> {
        match params {
            [x] => Ok(*x),
            _ => bail!(ParseError(format!("{name} takes exactly one parameter"))),
        }
    };
    let p = match name {
        "simplex" => catalogue::simplex(one()?)?,
        "prism" => catalogue::simplicial_prism(one()?)?,
        "polygon" => catalogue::polygon(one()?)?,
        "cube" => catalogue::cube(one()?)?,
        "bipyramid" => catalogue::bipyramid_over_simplex(one()?)?,
        "pyramid-bipyramid" => catalogue::pyramid_over_bipyramid(one()?)?,
        "pentasm" => catalogue::pentasm(one()?)?,
        "table1" => catalogue::table1(one()?)?,
        "seven-vertex" => {
            let i = one()?;
            let list = catalogue::seven_vertex_3polytopes();
            i.checked_sub(1)
                .and_then(|j| list.get(j).cloned())
                .ok_or(Error::BadIndex(i))?
        }
        "antiwedge" if params.is_empty() => catalogue::tetragonal_antiwedge(),
        _ if params.is_empty() => fixture(name)
            .map(|r| r.vfi)
            .ok_or_else(|| ParseError(format!("unknown fixture {name:?}; try `polyrec catalogue list`")))?,
        _ => bail!(ParseError(format!("unknown fixture {name:?} with parameters"))),
    };
    Ok(p)
}
