mod batch;
mod document;
mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use spectral_tsp::bounds::report_with_tol;
use spectral_tsp::graph::{adjacency_screen_with_tol, distance_screen_with_tol, is_regular, is_transmission_regular};
use spectral_tsp::matrix::DECISION_TOL;
use spectral_tsp::solvers::{brute_force, held_karp, two_opt};
use thiserror::Error;

use document::{BoundDocument, GraphDocument, GraphInfo, InstanceInfo, SolveDocument, SCHEMA_VERSION};
use input::{GraphFamily, GraphFormat, LoadedInstance, TspFamily};

const TOL_ENV: &str = "SPECTRAL_TSP_TOL";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Numeric(String),
    #[error("{0} of {1} batch rows failed")]
    BatchFailed(usize, usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::BatchFailed(..) => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "spectral-tsp",
    version,
    about = "Spectral lower bounds for the TSP and Hamiltonicity screens"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Add wall-clock `timing_ms` to every document.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every lower bound for one instance.
    Bound(InstanceArgs),
    /// Solve one instance exactly or heuristically.
    Solve(SolveArgs),
    /// Run the Hamiltonicity screens on a graph.
    CheckGraph(GraphArgs),
    /// Bound every instance in a manifest, one JSON line per row.
    Batch(BatchArgs),
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// TSPLIB problem file.
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Built-in instance family instead of a file.
    #[arg(long, value_enum)]
    family: Option<TspFamily>,
    /// Family size parameter (two-cluster builds 2n cities).
    #[arg(long)]
    n: Option<usize>,
    /// Seed for random families and 2-opt tie-breaking.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Dimension for random-euclidean.
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Sidecar with the published optimum (`optimum: <integer>`).
    #[arg(long, requires = "input")]
    sidecar: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    HeldKarp,
    TwoOpt,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum, default_value_t = Method::HeldKarp)]
    method: Method,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Graph file (edge list or adjacency matrix).
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
    format: GraphFormat,
    /// Vertex count for edge lists with isolated trailing vertices.
    #[arg(long)]
    vertices: Option<usize>,
    #[arg(long, value_enum)]
    family: Option<GraphFamily>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// Manifest with one `problem[,sidecar]` per line.
    manifest: PathBuf,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Also print a summary table to stderr.
    #[arg(long)]
    pretty: bool,
}

fn tolerance() -> Result<f64, CliError> {
    match std::env::var(TOL_ENV) {
        Err(_) => Ok(DECISION_TOL),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(CliError::Usage(format!(
                "{TOL_ENV}={raw:?} is not a non-negative number"
            ))),
        },
    }
}

fn load(args: &InstanceArgs) -> Result<LoadedInstance, CliError> {
    match (&args.input, args.family) {
        (Some(path), _) => input::tsp_file(path, args.sidecar.as_deref()),
        (None, Some(family)) => input::tsp_family(family, args.n, args.seed, args.dim),
        (None, None) => Err(CliError::Usage("give an input file or --family".into())),
    }
}

fn emit<T: Serialize>(out: &mut impl Write, doc: &T) -> Result<(), CliError> {
    let line = serde_json::to_string(doc).map_err(|e| CliError::Numeric(e.to_string()))?;
    writeln!(out, "{line}").map_err(|e| CliError::Numeric(e.to_string()))
}

fn elapsed_ms(start: Instant, timing: bool) -> Option<f64> {
    timing.then(|| start.elapsed().as_secs_f64() * 1e3)
}

fn cmd_bound(args: &InstanceArgs, tol: f64, timing: bool) -> Result<BoundDocument, CliError> {
    let start = Instant::now();
    let inst = load(args)?;
    let bounds = report_with_tol(&inst.distances, tol).map_err(|e| CliError::Numeric(e.to_string()))?;
    let ratio = inst.optimum.map(|opt| bounds.best() / opt as f64);
    Ok(BoundDocument {
        schema_version: SCHEMA_VERSION,
        command: "bound",
        instance: InstanceInfo::from(&inst),
        bounds,
        ratio,
        timing_ms: elapsed_ms(start, timing),
    })
}

fn cmd_solve(args: &SolveArgs, timing: bool) -> Result<SolveDocument, CliError> {
    let start = Instant::now();
    let inst = load(&args.instance)?;
    let d = &inst.distances;
    let (method, tour) = match args.method {
        Method::Brute => ("brute", brute_force(d)),
        Method::HeldKarp => ("held-karp", held_karp(d)),
        Method::TwoOpt => ("two-opt", two_opt(d, args.instance.seed)),
    };
    let tour = tour.map_err(|e| CliError::Numeric(e.to_string()))?;
    Ok(SolveDocument {
        schema_version: SCHEMA_VERSION,
        command: "solve",
        instance: InstanceInfo::from(&inst),
        method,
        seed: (args.method == Method::TwoOpt).then_some(args.instance.seed),
        tour,
        timing_ms: elapsed_ms(start, timing),
    })
}

fn cmd_check_graph(args: &GraphArgs, tol: f64, timing: bool) -> Result<GraphDocument, CliError> {
    let start = Instant::now();
    let (source, g) = match (&args.input, args.family) {
        (Some(path), _) => input::graph_file(path, args.format, args.vertices)?,
        (None, Some(family)) => input::graph_family(family, args.n, args.m)?,
        (None, None) => return Err(CliError::Usage("give an input file or --family".into())),
    };
    let numeric = |e: spectral_tsp::graph::GraphError| CliError::Numeric(e.to_string());
    let connected = g.is_connected();
    let mut skipped = Vec::new();
    let adjacency = if g.n() >= 3 {
        Some(adjacency_screen_with_tol(&g, tol).map_err(numeric)?)
    } else {
        skipped.push("adjacency: needs at least 3 vertices".to_string());
        None
    };
    let distance = if !connected {
        skipped.push("distance: graph is disconnected".to_string());
        None
    } else if g.n() < 2 {
        skipped.push("distance: needs at least 2 vertices".to_string());
        None
    } else {
        Some(distance_screen_with_tol(&g, tol).map_err(numeric)?)
    };
    let transmission_regular = if connected {
        Some(is_transmission_regular(&g).map_err(numeric)?)
    } else {
        None
    };
    Ok(GraphDocument {
        schema_version: SCHEMA_VERSION,
        command: "check-graph",
        graph: GraphInfo {
            source,
            n: g.n(),
            edges: g.edge_count(),
            connected,
            regular: is_regular(&g),
            transmission_regular,
        },
        adjacency,
        distance,
        skipped,
        timing_ms: elapsed_ms(start, timing),
    })
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let tol = tolerance()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Bound(args) => emit(&mut out, &cmd_bound(args, tol, cli.timing)?),
        Command::Solve(args) => emit(&mut out, &cmd_solve(args, cli.timing)?),
        Command::CheckGraph(args) => emit(&mut out, &cmd_check_graph(args, tol, cli.timing)?),
        Command::Batch(args) => {
            let rows = batch::run(&args.manifest, args.jobs, tol, cli.timing)?;
            for row in &rows {
                emit(&mut out, row)?;
            }
            if args.pretty {
                eprint!("{}", batch::pretty_table(&rows));
            }
            let failed = rows.iter().filter(|r| r.error.is_some()).count();
            if failed > 0 {
                return Err(CliError::BatchFailed(failed, rows.len()));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
