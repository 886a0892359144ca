use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use extraconn::extraconn::{full_report, ExtraConnError, ExtraConnReport};
use extraconn::families::FamilySpec;
use extraconn::io::{self, Format};
use extraconn::persistence::{rho_h_with, PersistenceError, PersistenceResult, RhoConfig};
use extraconn::theorems::corpus::{builtin_corpus, Builtin};
use extraconn::theorems::{run_corpus, select_checks, CheckConfig, CheckError, RunOptions};
use extraconn::{Budget, Graph};

const ANALYSIS_SCHEMA: &str = "extraconn.analysis/1";
const RHO_SCHEMA: &str = "extraconn.rho/1";

#[derive(Parser)]
#[command(name = "extraconn", version)]
#[command(about = "Extra edge-connectivity, super-connectivity and edge-fault persistence of graphs")]
struct Cli {
    /// Worker threads for the parallel searches
    #[arg(long, global = true, env = "EXTRACONN_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    /// Edge list with an "n m" header
    El,
    /// graph6
    G6,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family spec such as hypercube:4 or cartesian:K4,K4
    Gen {
        spec: String,
        /// Output file; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Output format; inferred from the file extension when omitted
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Report degrees, girth, λ^(h), ξ_h, optimality and super flags
    Analyze {
        /// Graph file (edge list or graph6) or family spec
        input: String,
        /// Highest h to report
        #[arg(long, default_value_t = 2)]
        h: usize,
        /// Also compute ρ^(h) at every super level
        #[arg(long)]
        rho: bool,
        /// Time limit in seconds
        #[arg(long)]
        budget: Option<f64>,
        /// Include wall times
        #[arg(long)]
        timings: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Persistence ρ^(h) with a smallest breaking fault set
    Rho {
        /// Graph file (edge list or graph6) or family spec
        input: String,
        #[arg(long, default_value_t = 1)]
        h: usize,
        /// Settle every fault set by the full definition check
        #[arg(long)]
        oracle: bool,
        /// Disable the fault-bound filter
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        timings: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the check registry over a corpus; exits 4 on any failure
    Verify {
        /// Builtin corpus: paper-exact, small8, cubic or torus
        #[arg(long)]
        builtin: Option<String>,
        /// graph6 corpus file, one graph per line
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Family specs to check
        specs: Vec<String>,
        /// Comma-separated check ids; all checks when omitted
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = CheckConfig::default().seed)]
        seed: u64,
        /// Samples per graph for the sampled checks
        #[arg(long, default_value_t = CheckConfig::default().samples)]
        samples: usize,
        /// Time limit in seconds per graph
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        timings: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("time budget exceeded")]
    Budget,
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Internal(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget => 5,
        }
    }
}

impl From<ExtraConnError> for CliError {
    fn from(e: ExtraConnError) -> Self {
        match e {
            ExtraConnError::Budget(_) => CliError::Budget,
            ExtraConnError::Disconnected(_) | ExtraConnError::NotExtraConnected(_) => {
                CliError::Precondition(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<PersistenceError> for CliError {
    fn from(e: PersistenceError) -> Self {
        match e {
            PersistenceError::Budget(_) => CliError::Budget,
            PersistenceError::InternalInconsistency(m) => CliError::Internal(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::Budget(_) => CliError::Budget,
            CheckError::BadCheckId(_) | CheckError::Generation(_) => CliError::Parse(e.to_string()),
            CheckError::Engine(m) => CliError::Internal(m),
        }
    }
}

fn budget(secs: Option<f64>) -> Budget {
    secs.map_or_else(Budget::unlimited, Budget::seconds)
}

/// A graph named on the command line: an existing file, else a family spec.
struct Input {
    name: String,
    graph: Graph,
}

fn read_input(arg: &str) -> Result<Input, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{arg}: {e}")))?;
        let graph = io::read_graph(&text).map_err(|e| CliError::Parse(format!("{arg}: {e}")))?;
        return Ok(Input {
            name: arg.to_string(),
            graph,
        });
    }
    match arg.parse::<FamilySpec>() {
        Ok(spec) => {
            let graph = spec.build().map_err(|e| CliError::Parse(format!("{arg}: {e}")))?;
            Ok(Input {
                name: spec.to_string(),
                graph,
            })
        }
        Err(_) if arg.contains(['/', '.']) => Err(CliError::Io(format!("{arg}: no such file"))),
        Err(e) => Err(CliError::Parse(e.to_string())),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(value: &T, output: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    text.push('\n');
    emit(&text, output)
}

fn cmd_gen(spec: &str, output: Option<&Path>, format: Option<FormatArg>) -> Result<(), CliError> {
    let spec: FamilySpec = spec.parse().map_err(|e: extraconn::families::SpecParseError| CliError::Parse(e.to_string()))?;
    let g = spec.build().map_err(|e| CliError::Parse(format!("{spec}: {e}")))?;
    let by_ext = output
        .and_then(|p| p.extension())
        .is_some_and(|e| e == "g6");
    let format = match format {
        Some(FormatArg::G6) => Format::Graph6,
        Some(FormatArg::El) => Format::EdgeList,
        None if by_ext => Format::Graph6,
        None => Format::EdgeList,
    };
    emit(&io::write_graph(&g, format), output)
}

#[derive(Serialize)]
struct Degrees {
    min: usize,
    max: usize,
}

#[derive(Serialize)]
struct Analysis {
    schema: &'static str,
    graph: String,
    order: usize,
    size: usize,
    degrees: Degrees,
    regular: Option<usize>,
    girth: Option<usize>,
    xi: Option<usize>,
    eta: Option<usize>,
    edge_regular: bool,
    edge_connectivity: usize,
    vertex_connectivity: usize,
    xi_h: Vec<Option<usize>>,
    lambda_h: Vec<Option<usize>>,
    optimal: Vec<bool>,
    #[serde(rename = "super")]
    is_super: Vec<bool>,
    levels: Vec<ExtraConnReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho: Option<Vec<Option<PersistenceResult>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    millis: Option<u64>,
}

fn cmd_analyze(
    input: &str,
    h_max: usize,
    with_rho: bool,
    secs: Option<f64>,
    timings: bool,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let start = Instant::now();
    let Input { name, graph: g, .. } = read_input(input)?;
    let budget = budget(secs);
    let levels = full_report(&g, h_max, &budget)?;
    let rho = if with_rho {
        let cfg = RhoConfig {
            budget: budget.clone(),
            ..RhoConfig::default()
        };
        let mut out = Vec::with_capacity(levels.len());
        for l in &levels {
            out.push(if l.is_super { Some(rho_h_with(&g, l.h, &cfg)?) } else { None });
        }
        Some(out)
    } else {
        None
    };
    let analysis = Analysis {
        schema: ANALYSIS_SCHEMA,
        graph: name,
        order: g.order(),
        size: g.size(),
        degrees: Degrees {
            min: g.min_degree(),
            max: g.max_degree(),
        },
        regular: g.regular_degree(),
        girth: g.girth(),
        xi: g.xi().ok(),
        eta: g.eta().ok(),
        edge_regular: g.is_edge_regular().unwrap_or(false),
        edge_connectivity: g.edge_connectivity(),
        vertex_connectivity: g.vertex_connectivity(),
        xi_h: levels.iter().map(|l| l.xi_h).collect(),
        lambda_h: levels.iter().map(|l| l.lambda_h).collect(),
        optimal: levels.iter().map(|l| l.optimal).collect(),
        is_super: levels.iter().map(|l| l.is_super).collect(),
        levels,
        rho,
        millis: timings.then(|| start.elapsed().as_millis() as u64),
    };
    emit_json(&analysis, output)
}

#[derive(Serialize)]
struct RhoOutput {
    schema: &'static str,
    graph: String,
    method: &'static str,
    #[serde(flatten)]
    result: PersistenceResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    millis: Option<u64>,
}

fn cmd_rho(
    input: &str,
    h: usize,
    oracle: bool,
    no_prune: bool,
    secs: Option<f64>,
    timings: bool,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let start = Instant::now();
    let Input { name, graph: g, .. } = read_input(input)?;
    let mut cfg = if oracle { RhoConfig::exhaustive() } else { RhoConfig::default() };
    if no_prune {
        cfg.prune = false;
    }
    cfg.budget = budget(secs);
    let result = rho_h_with(&g, h, &cfg)?;
    let out = RhoOutput {
        schema: RHO_SCHEMA,
        graph: name,
        method: if oracle {
            "definition"
        } else if no_prune {
            "search"
        } else {
            "search+bound"
        },
        result,
        millis: timings.then(|| start.elapsed().as_millis() as u64),
    };
    emit_json(&out, output)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    builtin: Option<&str>,
    corpus_file: Option<&Path>,
    specs: &[String],
    checks: &[String],
    seed: u64,
    samples: usize,
    secs: Option<f64>,
    timings: bool,
    output: Option<&Path>,
) -> Result<bool, CliError> {
    let checks = if checks.is_empty() {
        select_checks(&["all"])?
    } else {
        select_checks(checks)?
    };
    let mut corpus: Vec<FamilySpec> = Vec::new();
    if let Some(path) = corpus_file {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let graphs = io::read_graphs(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        corpus.extend(graphs.iter().map(|g| FamilySpec::Graph6(io::graph6::encode(g))));
    } else if let Some(tag) = builtin {
        let tag: Builtin = tag.parse().map_err(CliError::Parse)?;
        corpus.extend(builtin_corpus(tag, seed));
    }
    for s in specs {
        corpus.push(s.parse().map_err(|e: extraconn::families::SpecParseError| CliError::Parse(e.to_string()))?);
    }
    if corpus.is_empty() {
        corpus = builtin_corpus(Builtin::PaperExact, seed);
    }
    let opts = RunOptions {
        config: CheckConfig {
            seed,
            samples,
            ..CheckConfig::default()
        },
        budget_secs: secs,
        timings,
    };
    let report = run_corpus(&corpus, &checks, &opts);
    emit_json(&report, output)?;
    let s = &report.summary;
    eprintln!(
        "{} graphs, {} cells: {} pass, {} vacuous, {} fail, {} budget exceeded, {} errors",
        s.graphs, s.cells, s.pass, s.vacuous_pass, s.fail, s.budget_exceeded, s.errors
    );
    Ok(s.fail == 0)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    match cli.command {
        Command::Gen { spec, output, format } => cmd_gen(&spec, output.as_deref(), format).map(|_| true),
        Command::Analyze {
            input,
            h,
            rho,
            budget,
            timings,
            output,
        } => cmd_analyze(&input, h, rho, budget, timings, output.as_deref()).map(|_| true),
        Command::Rho {
            input,
            h,
            oracle,
            no_prune,
            budget,
            timings,
            output,
        } => cmd_rho(&input, h, oracle, no_prune, budget, timings, output.as_deref()).map(|_| true),
        Command::Verify {
            builtin,
            corpus,
            specs,
            checks,
            seed,
            samples,
            budget,
            timings,
            output,
        } => cmd_verify(
            builtin.as_deref(),
            corpus.as_deref(),
            &specs,
            &checks,
            seed,
            samples,
            budget,
            timings,
            output.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(4),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
