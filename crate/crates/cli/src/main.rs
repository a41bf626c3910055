use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use strong_edge::io::{read_coloring, read_graph, write_coloring, write_edge_list, GraphFormat};
use strong_edge::oracle::DEFAULT_NODE_BUDGET;
use strong_edge::{
    exact_chi_s, lower_bound, strong_color_with, verify_strong, Branch, ColoringError,
    GeneratorSpec, Graph, OracleError,
};

/// Strong edge-coloring of bounded-degree graphs.
///
/// Graphs are read as edge lists (`u v` per line, optional `p n m` header,
/// `#` comments) or as JSON (`{"n":..,"edges":[{"u":..,"v":..}]}`) when the
/// file name ends in `.json`. A path of `-` reads an edge list from stdin.
#[derive(Parser)]
#[command(name = "strong-edge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph and write the coloring as JSON.
    Color {
        input: PathBuf,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// `auto` or a branch name: trivial, greedy-general, low-degree,
        /// regular-girth5, delta5-girth3, delta5-girth4.
        #[arg(long, default_value = "auto")]
        branch: String,
    },
    /// Check a coloring JSON file against a graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Accept colorings that leave some edges uncolored.
        #[arg(long)]
        partial: bool,
    },
    /// Compute the strong chromatic index exactly.
    Exact {
        input: PathBuf,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Write the optimal coloring as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a graph: petersen, cycle:N, c5_blowup:D,
    /// random_regular:N,D,G or random_max_degree:N,D.
    Gen {
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print degree, girth and component statistics.
    Stats { input: PathBuf },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Color { input, out, branch } => color(&input, out.as_deref(), &branch),
        Command::Verify {
            graph,
            coloring,
            partial,
        } => verify(&graph, &coloring, partial),
        Command::Exact { input, budget, out } => exact(&input, budget, out.as_deref()),
        Command::Gen { spec, seed, out } => gen(&spec, seed, out.as_deref()),
        Command::Stats { input } => stats(&input),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let graph = if path == Path::new("-") {
        read_graph(io::stdin().lock(), GraphFormat::EdgeList)
    } else {
        let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
        read_graph(BufReader::new(file), GraphFormat::from_path(path))
    };
    graph.with_context(|| format!("cannot read graph {}", path.display()))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn color(input: &Path, out: Option<&Path>, branch: &str) -> Result<ExitCode> {
    let forced = match branch {
        "auto" => None,
        name => Some(name.parse::<Branch>().map_err(anyhow::Error::msg)?),
    };
    let g = load_graph(input)?;
    let (c, report) = match strong_color_with(&g, forced) {
        Ok(done) => done,
        Err(err @ (ColoringError::Infeasible { .. } | ColoringError::PaletteExhausted { .. })) => {
            eprintln!("coloring failed: {err}");
            return Ok(ExitCode::from(1));
        }
        Err(err) => return Err(err).context("branch preconditions not met"),
    };
    if let Err(v) = verify_strong(&g, &c) {
        let (a, b) = (g.endpoints(v.first), g.endpoints(v.second));
        eprintln!(
            "internal error: produced violation {a:?} {b:?} color {}",
            v.color
        );
        return Ok(ExitCode::from(1));
    }
    let label = report.branch_label();
    let mut w = output(out)?;
    write_coloring(&g, &c, report.bound_claimed, &label, &mut w)?;
    w.flush()?;
    eprintln!(
        "branch {label}: {} colors (bound {}){}",
        report.colors_used,
        report.bound_claimed,
        if report.fallback_invoked {
            ", fallback used"
        } else {
            ""
        }
    );
    Ok(ExitCode::SUCCESS)
}

fn verify(graph: &Path, coloring: &Path, partial: bool) -> Result<ExitCode> {
    let g = load_graph(graph)?;
    let file =
        File::open(coloring).with_context(|| format!("cannot open {}", coloring.display()))?;
    let doc = read_coloring(BufReader::new(file))
        .with_context(|| format!("cannot read coloring {}", coloring.display()))?;
    let c = doc.coloring_for(&g)?;
    if let Err(v) = verify_strong(&g, &c) {
        let (a, b) = (g.endpoints(v.first), g.endpoints(v.second));
        println!(
            "invalid: edges ({}, {}) and ({}, {}) both have color {}: {}",
            a.0, a.1, b.0, b.1, v.color, v.reason
        );
        return Ok(ExitCode::from(1));
    }
    let missing = c.uncolored_edges();
    if !partial && !missing.is_empty() {
        let (u, v) = g.endpoints(missing[0]);
        println!(
            "invalid: {} edges uncolored, first ({u}, {v})",
            missing.len()
        );
        return Ok(ExitCode::from(1));
    }
    if doc.num_colors != 0 && doc.num_colors != c.colors_used() {
        println!(
            "invalid: num_colors is {} but the largest color is {}",
            doc.num_colors,
            c.colors_used()
        );
        return Ok(ExitCode::from(1));
    }
    println!(
        "valid: {} edges, {} colors ({} distinct)",
        c.colored_count(),
        c.colors_used(),
        c.distinct_colors()
    );
    Ok(ExitCode::SUCCESS)
}

fn exact(input: &Path, budget: u64, out: Option<&Path>) -> Result<ExitCode> {
    let g = load_graph(input)?;
    match exact_chi_s(&g, budget) {
        Ok(res) => {
            println!("chi_s {}", res.chi_s);
            println!("lower_bound {}", lower_bound(&g));
            println!("nodes {}", res.nodes_explored);
            if let Some(path) = out {
                let mut w = output(Some(path))?;
                write_coloring(&g, &res.witness, res.chi_s, "exact", &mut w)?;
                w.flush()?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(OracleError::BudgetExceeded {
            lower,
            upper,
            nodes,
        }) => {
            println!("budget exceeded after {nodes} nodes: chi_s in [{lower}, {upper}]");
            Ok(ExitCode::from(1))
        }
    }
}

fn gen(spec: &str, seed: u64, out: Option<&Path>) -> Result<ExitCode> {
    let spec: GeneratorSpec = spec.parse()?;
    let g = spec.generate(seed)?;
    let mut w = output(out)?;
    write_edge_list(&g, &mut w)?;
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn stats(input: &Path) -> Result<ExitCode> {
    let g = load_graph(input)?;
    let s = g.stats();
    println!("vertices {}", s.vertices);
    println!("edges {}", s.edges);
    println!("max_degree {}", s.max_degree);
    println!("min_degree {}", s.min_degree);
    println!("girth {}", s.girth);
    println!("regular {}", s.is_regular);
    println!("components {}", s.components);
    Ok(ExitCode::SUCCESS)
}
