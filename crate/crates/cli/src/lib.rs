//! The `gpvar` command-line tool.
//!
//! Exit codes: 0 success, 1 a law check failed, 2 bad arguments or input,
//! 3 disconnected or empty graph, 4 graph too large for the requested
//! exhaustive computation.

pub mod edge_list;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use gpvar::generators::{generate, join, product, FamilySpec, ProductKind};
use gpvar::laws::{run_suite, Counterexample, LawReport, Suite};
use gpvar::position::{brute_force, Solver, DEFAULT_MAX_N};
use gpvar::srg::strong_resolving_graph;
use gpvar::{Certificate, Graph, Variant};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use edge_list::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Graph(#[from] gpvar::Error),
    #[error("{0} law check(s) failed")]
    LawFailures(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::LawFailures(_) => 1,
            CliError::Graph(gpvar::Error::Disconnected | gpvar::Error::EmptyGraph) => 3,
            CliError::Graph(gpvar::Error::Size { .. }) => 4,
            _ => 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "gpvar", version, about = "General position invariants of connected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list
    #[command(group(ArgGroup::new("mode").required(true).args(["family", "product", "join"])))]
    Gen {
        /// Family spec such as `theta:2,3,3` or `chain_cycles:2,5`
        #[arg(long)]
        family: Option<String>,
        /// Product of A and B: cartesian, direct or strong
        #[arg(long, requires_all = ["a", "b"])]
        product: Option<String>,
        /// Join of A and B
        #[arg(long, requires_all = ["a", "b"])]
        join: bool,
        /// First factor: an edge-list file, or a family spec
        #[arg(short)]
        a: Option<String>,
        /// Second factor: an edge-list file, or a family spec
        #[arg(short)]
        b: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute invariants with witnesses
    Compute {
        #[arg(long, value_enum)]
        invariant: Invariant,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
        /// Print values only
        #[arg(long)]
        quiet: bool,
    },
    /// Write the strong resolving graph as an edge list
    Srg {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive computation straight from the definitions
    Oracle {
        #[arg(long, value_enum)]
        invariant: Invariant,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        quiet: bool,
    },
    /// Run a suite of law checks
    Check {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Gp,
    Total,
    Outer,
    Dual,
    All,
}

impl Invariant {
    fn variants(self) -> Vec<Variant> {
        match self {
            Invariant::Gp => vec![Variant::Gp],
            Invariant::Total => vec![Variant::Total],
            Invariant::Outer => vec![Variant::Outer],
            Invariant::Dual => vec![Variant::Dual],
            Invariant::All => Variant::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Structural,
    Sufficient,
    Products,
    Families,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Structural => Suite::Structural,
            SuiteArg::Sufficient => Suite::Sufficient,
            SuiteArg::Products => Suite::Products,
            SuiteArg::Families => Suite::Families,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    edge_list::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(io_err(path)),
        None => out
            .write_all(text.as_bytes())
            .map_err(io_err(Path::new("<stdout>"))),
    }
}

/// A factor argument names a file when one exists at that path, and is a
/// family spec otherwise.
fn load_factor(arg: &str) -> Result<Graph, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return read_graph(path);
    }
    let spec: FamilySpec = arg.parse()?;
    Ok(generate(&spec)?.0)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Gen {
            family,
            product: kind,
            join: joined,
            a,
            b,
            output,
        } => {
            let text = if let Some(family) = family {
                let spec: FamilySpec = family.parse()?;
                let (g, labels) = generate(&spec)?;
                let comments: Vec<String> = std::iter::once(spec.to_string())
                    .chain(labels.iter().map(|(name, v)| format!("{name} = {v}")))
                    .collect();
                edge_list::write_with_comments(&g, &comments)
            } else {
                let (a, b) = (a.expect("required by clap"), b.expect("required by clap"));
                let (ga, gb) = (load_factor(&a)?, load_factor(&b)?);
                if joined {
                    edge_list::write(&join(&ga, &gb))
                } else {
                    let kind: ProductKind = kind.expect("required by clap").parse()?;
                    edge_list::write(&product(&ga, &gb, kind))
                }
            };
            emit(&text, output.as_deref(), out)
        }
        Command::Compute {
            invariant,
            input,
            json,
            quiet,
        } => {
            let g = read_graph(&input)?;
            let mut solver = Solver::new(&g)?;
            let results = timed(invariant.variants(), |v| Ok(solver.solve(v)))?;
            print_results(&g, invariant, &results, json, quiet, out)
        }
        Command::Oracle {
            invariant,
            input,
            max_n,
            json,
            quiet,
        } => {
            let g = read_graph(&input)?;
            let results = timed(invariant.variants(), |v| brute_force(&g, v, max_n))?;
            print_results(&g, invariant, &results, json, quiet, out)
        }
        Command::Srg { input, output } => {
            let g = read_graph(&input)?;
            let sr = strong_resolving_graph(&g)?;
            emit(&edge_list::write(&sr), output.as_deref(), out)
        }
        Command::Check { suite, seed, json } => {
            let reports = run_suite(suite.into(), seed)?;
            print_reports(&reports, json, out)?;
            match reports.iter().filter(|r| !r.passed).count() {
                0 => Ok(()),
                failed => Err(CliError::LawFailures(failed)),
            }
        }
    }
}

fn timed(
    variants: Vec<Variant>,
    mut f: impl FnMut(Variant) -> gpvar::Result<Certificate>,
) -> Result<Vec<(Certificate, f64)>, CliError> {
    variants
        .into_iter()
        .map(|v| {
            let start = Instant::now();
            let cert = f(v)?;
            Ok((cert, start.elapsed().as_secs_f64() * 1e3))
        })
        .collect()
}

#[derive(Serialize)]
struct GraphInfo {
    n: usize,
    m: usize,
}

#[derive(Serialize)]
struct ResultJson {
    graph: GraphInfo,
    invariant: Variant,
    value: usize,
    witness: Vec<usize>,
    method: gpvar::Method,
    elapsed_ms: f64,
}

impl ResultJson {
    fn new(g: &Graph, cert: &Certificate, elapsed_ms: f64) -> ResultJson {
        ResultJson {
            graph: GraphInfo {
                n: g.order(),
                m: g.size(),
            },
            invariant: cert.variant,
            value: cert.value,
            witness: cert.witness.to_vec(),
            method: cert.method,
            elapsed_ms,
        }
    }
}

fn write_line(out: &mut dyn Write, line: &str) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(io_err(Path::new("<stdout>")))
}

fn print_results(
    g: &Graph,
    invariant: Invariant,
    results: &[(Certificate, f64)],
    json: bool,
    quiet: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if json {
        let value = match (invariant, results) {
            (Invariant::All, _) => {
                let mut obj = serde_json::Map::new();
                obj.insert("graph".into(), json!({ "n": g.order(), "m": g.size() }));
                for (cert, _) in results {
                    obj.insert(cert.variant.name().into(), json!(cert.value));
                }
                let rows: Vec<ResultJson> = results.iter().map(|(c, t)| ResultJson::new(g, c, *t)).collect();
                obj.insert("results".into(), serde_json::to_value(rows).expect("serializable"));
                Value::Object(obj)
            }
            (_, [(cert, t)]) => serde_json::to_value(ResultJson::new(g, cert, *t)).expect("serializable"),
            _ => unreachable!("one result per single invariant"),
        };
        return write_line(out, &value.to_string());
    }
    for (cert, elapsed) in results {
        let line = match (quiet, invariant) {
            (true, Invariant::All) => format!("{} {}", cert.variant, cert.value),
            (true, _) => cert.value.to_string(),
            (false, _) => {
                let witness: Vec<String> = cert.witness.iter().map(|v| v.to_string()).collect();
                format!(
                    "{}: {} witness [{}] method {} ({elapsed:.3} ms)",
                    cert.variant,
                    cert.value,
                    witness.join(", "),
                    cert.method.name()
                )
            }
        };
        write_line(out, &line)?;
    }
    Ok(())
}

/// The counterexample as an edge list, ready to save and pass to `-i`.
pub fn counterexample_edge_list(ce: &Counterexample) -> String {
    let sets: Vec<String> = ce
        .sets
        .iter()
        .map(|s| format!("set {:?}", s))
        .collect();
    edge_list::write_with_comments(&ce.graph(), &sets)
}

fn print_reports(reports: &[LawReport], json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let failed = reports.iter().filter(|r| !r.passed).count();
    if json {
        let value = json!({
            "checked": reports.len(),
            "failed": failed,
            "reports": reports,
        });
        return write_line(out, &value.to_string());
    }
    for r in reports {
        write_line(out, &r.to_string())?;
        if let (false, Some(ce)) = (r.passed, &r.counterexample) {
            for line in counterexample_edge_list(ce).lines() {
                write_line(out, &format!("    {line}"))?;
            }
        }
    }
    write_line(out, &format!("{} checks, {failed} failed", reports.len()))
}
