use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use szcactus::extremal::{
    build_c0, enumerate_cacti, verify_theorem, ExtremalError, Scope, DEFAULT_CEILING,
};
use szcactus::io::{
    index_csv, parse_edge_list, parse_graph6, report_json, trace_json, verification_csv,
    write_graph6, EdgeListError, GraphReport,
};
use szcactus::transform::{normalize_to_extremal, TransformError};
use szcactus::{compute_indices, Graph, GraphError};

/// Environment variable holding the worker thread count.
const THREADS_ENV: &str = "SZCACTUS_THREADS";

#[derive(Parser)]
#[command(
    name = "szcactus",
    version,
    about = "Szeged-type indices of graphs and extremal cacti"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Wiener, Szeged, edge-Szeged and doubled edge-vertex-Szeged indices.
    Index {
        #[command(flatten)]
        input: Input,
        /// One JSON object per graph (the default).
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// CSV table with one row per graph.
        #[arg(long)]
        csv: bool,
    },
    /// Print the bundle C0(n, k) as graph6.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Rewrite a cactus into C0(n, k), printing the result as graph6.
    Transform {
        #[command(flatten)]
        input: Input,
        /// Write the step trace as JSON to this file ("-" for stdout).
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
    },
    /// List every cactus of order n with k cycles up to isomorphism, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        ceiling: Ceiling,
    },
    /// Check the lower bounds and the unique minimiser for one (n, k).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Full reports as JSON lines instead of the CSV table.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        ceiling: Ceiling,
    },
    /// Verify every (n, k) with n_min <= n <= n_max and k_min <= k <= k_max.
    Sweep {
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        k_min: usize,
        /// Defaults to the largest feasible k for each n.
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        ceiling: Ceiling,
    },
}

#[derive(Args)]
struct Input {
    /// Input file, or "-" for standard input.
    path: PathBuf,
    /// Input format; guessed from a .g6 extension or the content when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct Ceiling {
    /// Allow enumeration above the default order limit.
    #[arg(long, value_name = "N")]
    unsafe_ceiling: Option<usize>,
}

impl Ceiling {
    fn value(&self) -> usize {
        self.unsafe_ceiling.unwrap_or(DEFAULT_CEILING)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

/// A failure carrying its process exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    const IO: u8 = 1;
    const PARSE: u8 = 2;
    const INVALID: u8 = 3;
    const INFEASIBLE: u8 = 4;
    const VERIFICATION: u8 = 5;

    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::new(Failure::INVALID, e)
    }
}

impl From<ExtremalError> for Failure {
    fn from(e: ExtremalError) -> Self {
        let code = match e {
            ExtremalError::Graph(_) => Failure::INVALID,
            _ => Failure::INFEASIBLE,
        };
        Failure::new(code, e)
    }
}

impl From<TransformError> for Failure {
    fn from(e: TransformError) -> Self {
        Failure::new(Failure::INVALID, e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(Failure::IO, e)
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| {
            Failure::new(
                Failure::IO,
                anyhow::Error::new(e).context(path.display().to_string()),
            )
        })
    }
}

fn guess_format(path: &Path, text: &str) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => Format::Graph6,
        Some("txt" | "edges" | "el") => Format::Edgelist,
        _ => {
            let looks_g6 = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .all(|l| !l.contains(char::is_whitespace) && !l.starts_with('#'));
            let has_digits_only = text
                .chars()
                .all(|c| c.is_ascii_digit() || c.is_whitespace());
            if looks_g6 && !has_digits_only {
                Format::Graph6
            } else {
                Format::Edgelist
            }
        }
    }
}

/// Every graph in the input: one per non-empty line for graph6, exactly one
/// for an edge list.
fn load_graphs(input: &Input) -> Result<Vec<Graph>, Failure> {
    let text = read_input(&input.path)?;
    match input
        .format
        .unwrap_or_else(|| guess_format(&input.path, &text))
    {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                parse_graph6(l.trim().as_bytes()).map_err(|e| {
                    Failure::new(Failure::PARSE, anyhow::anyhow!("line {}: {e}", i + 1))
                })
            })
            .collect(),
        Format::Edgelist => parse_edge_list(&text).map(|g| vec![g]).map_err(|e| {
            let code = match e {
                EdgeListError::Syntax { .. } => Failure::PARSE,
                EdgeListError::Invalid { .. } => Failure::INVALID,
            };
            Failure::new(code, e)
        }),
    }
}

fn load_one(input: &Input) -> Result<Graph, Failure> {
    let mut graphs = load_graphs(input)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        found => Err(Failure::new(
            Failure::PARSE,
            anyhow::anyhow!("expected exactly one graph, found {found}"),
        )),
    }
}

fn graph6(g: &Graph) -> Result<String, Failure> {
    write_graph6(g).map_err(|e| Failure::new(Failure::INVALID, e))
}

fn emit(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn verification_output(
    reports: &[szcactus::extremal::VerificationReport],
    json: bool,
) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    if json {
        for r in reports {
            emit(
                &mut out,
                &serde_json::to_string(r).expect("report serialises"),
            )?;
        }
    } else {
        emit(&mut out, &verification_csv(reports))?;
    }
    out.flush()?;
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| r.scope != Scope::BelowOrderFive && !r.passed())
        .map(|r| format!("({}, {})", r.n, r.k))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(
            Failure::VERIFICATION,
            anyhow::anyhow!("verification failed for {}", failed.join(", ")),
        ))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Index {
            input,
            json: _,
            csv,
        } => {
            let graphs = load_graphs(&input)?;
            let reports = graphs
                .iter()
                .map(|g| {
                    GraphReport::new(g, compute_indices(g)?)
                        .map_err(|e| Failure::new(Failure::INVALID, e))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            if csv {
                emit(&mut out, &index_csv(&reports))?;
            } else {
                for r in &reports {
                    emit(&mut out, &report_json(r))?;
                }
            }
        }
        Command::Generate { n, k } => emit(&mut out, &graph6(&build_c0(n, k)?)?)?,
        Command::Transform { input, trace } => {
            let g = load_one(&input)?;
            let result = normalize_to_extremal(&g)?;
            let steps = trace_json(&result.steps);
            match trace.as_deref() {
                Some(p) if p == Path::new("-") => emit(&mut out, &steps)?,
                Some(p) => fs::write(p, format!("{steps}\n")).map_err(|e| {
                    Failure::new(
                        Failure::IO,
                        anyhow::Error::new(e).context(p.display().to_string()),
                    )
                })?,
                None => {}
            }
            emit(&mut out, &graph6(&result.graph)?)?;
        }
        Command::Enumerate { n, k, ceiling } => {
            if n < 2 * k + 1 {
                return Err(ExtremalError::InfeasibleParameters { n, k }.into());
            }
            for form in enumerate_cacti(n, k, ceiling.value())? {
                emit(&mut out, &form.graph6())?;
            }
        }
        Command::Verify {
            n,
            k,
            json,
            ceiling,
        } => {
            let report = verify_theorem(n, k, ceiling.value())?;
            drop(out);
            return verification_output(&[report], json);
        }
        Command::Sweep {
            n_min,
            n_max,
            k_min,
            k_max,
            json,
            ceiling,
        } => {
            let cells: Vec<(usize, usize)> = (n_min.max(1)..=n_max)
                .flat_map(|n| {
                    let top = k_max.unwrap_or(usize::MAX).min((n - 1) / 2);
                    (k_min..=top).map(move |k| (n, k))
                })
                .collect();
            let reports = cells
                .par_iter()
                .map(|&(n, k)| verify_theorem(n, k, ceiling.value()))
                .collect::<Result<Vec<_>, _>>()?;
            drop(out);
            return verification_output(&reports, json);
        }
    }
    out.flush()?;
    Ok(())
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| {
        Failure::new(
            Failure::PARSE,
            anyhow::anyhow!("{THREADS_ENV}={raw} is not a thread count"),
        )
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::new(Failure::IO, e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            // A closed stdout pipe is not worth a message.
            let broken_pipe = f
                .error
                .downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe);
            if !broken_pipe {
                eprintln!("error: {:#}", f.error);
            }
            ExitCode::from(f.code)
        }
    }
}
