use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bimatroid::graphs::{commutation_check, figure1_scenario, figure2_scenario, splitting_lemma_check};
use bimatroid::theorems::{
    check_matroid, scan, Arguments, CheckOptions, EnumerationSpec, Filter, Params, ScanSummary, Statement,
    TwoCircuitReading,
};
use bimatroid::{
    parse_graph, parse_matroid, split_graph, split_graph_at, split_pair, split_set, write_graph, write_matroid,
    BinaryMatroid, CheckReport, Error, MultiGraph, Verdict,
};

/// Binary matroids over GF(2), the splitting operation, and checks of
/// statements about it.
#[derive(Parser)]
#[command(name = "bimatroid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of the matroid, or of a subset with --set.
    Rank {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
    },
    /// Circuits, one per line.
    Circuits { file: PathBuf },
    /// Cocircuits, one per line.
    Cocircuits { file: PathBuf },
    /// Connected components, one per line.
    Components { file: PathBuf },
    /// Connectedness, Tutte and vertical connectivity.
    Connectivity { file: PathBuf },
    /// Split on a set (-x a,b,c) or a pair (--x a --y b).
    Split {
        file: PathBuf,
        #[arg(short = 'x', value_delimiter = ',', conflicts_with_all = ["x", "y"])]
        set: Option<Vec<String>>,
        #[arg(long, requires = "y")]
        x: Option<String>,
        #[arg(long, requires = "x")]
        y: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the original and split matroids with a header line.
        #[arg(long)]
        full: bool,
    },
    /// Split a vertex of a graph, detaching edges --x and --y.
    GraphSplit {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Common vertex to split; defaults to the smallest shared one.
        #[arg(long)]
        v: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check one statement on one instance.
    Check {
        statement: String,
        /// Matroid or graph file; graph files become cycle matroids for
        /// matroid statements. Not needed for figure-1 and figure-2.
        file: Option<PathBuf>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        z: Option<String>,
        #[arg(long)]
        v: Option<String>,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
        /// Connectivity order.
        #[arg(long)]
        n: Option<usize>,
        /// Print the report as one JSON line.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        flags: CheckFlags,
    },
    /// Enumerate binary matroids on n elements, optionally checking a statement.
    Enum {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        check: Option<String>,
        /// Write JSON-line reports here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        flags: CheckFlags,
    },
    /// Report only the failures of a statement over an enumerated space.
    Search {
        statement: String,
        /// Ground size for matroid statements, maximum edges for graph ones.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        flags: CheckFlags,
    },
}

#[derive(Args)]
struct Space {
    /// connected, disconnected, loopless, coloopless, girth>=G, cogirth>=C,
    /// N-connected, vertically-N-connected; repeatable.
    #[arg(long)]
    filter: Vec<String>,
    #[arg(long)]
    rank_min: Option<usize>,
    #[arg(long)]
    rank_max: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reading {
    Subset,
    Meets,
}

#[derive(Args)]
struct CheckFlags {
    /// Evaluate conclusions even when hypotheses fail.
    #[arg(long)]
    lenient: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Do not treat "loopless and coloopless" as a hypothesis.
    #[arg(long)]
    no_global_assumption: bool,
    /// Reading of the 2-circuit clause of thm-1.10.
    #[arg(long, value_enum, default_value_t = Reading::Subset)]
    reading: Reading,
    /// Add "X is not a cocycle" to the hypotheses of thm-1.11.
    #[arg(long)]
    require_noncocycle_x: bool,
    /// Subsets sampled by subset-quantified checks on more than 7 elements.
    #[arg(long, default_value_t = 256)]
    samples: usize,
    /// Orders tried by enum and search for lemma-1.8 and thm-1.11.
    #[arg(long, value_delimiter = ',')]
    orders: Option<Vec<usize>>,
}

impl CheckFlags {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            lenient: self.lenient,
            assume_loopless_coloopless: !self.no_global_assumption,
            seed: self.seed,
            two_circuit_reading: match self.reading {
                Reading::Subset => TwoCircuitReading::Subset,
                Reading::Meets => TwoCircuitReading::Meets,
            },
            subset_sample: self.samples,
            require_noncocycle_x: self.require_noncocycle_x,
            orders: self.orders.clone(),
        }
    }
}

enum CliError {
    /// Standard output was closed by the reader; stop quietly.
    BrokenPipe,
    Usage(String),
    Lib(Error),
    Io(PathBuf, io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::BrokenPipe => f.write_str("broken pipe"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn stdout_error(e: io::Error) -> CliError {
    if e.kind() == io::ErrorKind::BrokenPipe {
        CliError::BrokenPipe
    } else {
        CliError::Io("<stdout>".into(), e)
    }
}

fn say(text: impl std::fmt::Display) -> CliResult<()> {
    writeln!(io::stdout().lock(), "{text}").map_err(stdout_error)
}

#[allow(clippy::large_enum_variant)]
enum Input {
    Matroid(BinaryMatroid),
    Graph(MultiGraph),
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> CliResult<Input> {
    let text = read(path)?;
    let name = path.display().to_string();
    let is_graph = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| l.trim() == "graph");
    Ok(if is_graph {
        Input::Graph(parse_graph(&text).map_err(|e| e.in_file(&name))?)
    } else {
        Input::Matroid(parse_matroid(&text).map_err(|e| e.in_file(&name))?)
    })
}

fn load_matroid(path: &Path) -> CliResult<BinaryMatroid> {
    match load(path)? {
        Input::Matroid(m) => Ok(m),
        Input::Graph(g) => Ok(g.cycle_matroid()?),
    }
}

fn load_graph(path: &Path) -> CliResult<MultiGraph> {
    match load(path)? {
        Input::Graph(g) => Ok(g),
        Input::Matroid(_) => Err(CliError::Usage(format!("{}: expected a graph file", path.display()))),
    }
}

fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(p.to_path_buf(), e)),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(stdout_error),
    }
}

fn statement(id: &str) -> CliResult<Statement> {
    Ok(id.parse::<Statement>()?)
}

/// 0 when nothing failed and something passed (or nothing was judged),
/// 1 on any failure, 3 when every check had unmet hypotheses.
fn exit_for(s: &ScanSummary) -> ExitCode {
    if s.fail > 0 {
        ExitCode::from(1)
    } else if s.pass == 0 && s.unmet > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn exit_for_report(r: &CheckReport) -> ExitCode {
    match r.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(1),
        Verdict::PreconditionUnmet => ExitCode::from(3),
    }
}

fn print_family(m: &BinaryMatroid, family: &[bimatroid::ElementSet]) -> CliResult<()> {
    for s in m.sorted_family(family) {
        say(s)?;
    }
    Ok(())
}

fn spec_of(n: usize, space: &Space) -> CliResult<EnumerationSpec> {
    let filters = space
        .filter
        .iter()
        .map(|f| f.parse::<Filter>())
        .collect::<Result<Vec<_>, _>>()?;
    let rank_range = match (space.rank_min, space.rank_max) {
        (None, None) => None,
        (lo, hi) => Some((lo.unwrap_or(0), hi.unwrap_or(n))),
    };
    Ok(EnumerationSpec {
        ground_size: n,
        rank_range,
        filters,
    })
}

fn report_sink(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::Io(p.to_path_buf(), e))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn run_scan(
    st: Statement,
    spec: &EnumerationSpec,
    opts: &CheckOptions,
    report: Option<&Path>,
    fails_only: bool,
) -> CliResult<ExitCode> {
    let mut out = report_sink(report)?;
    let mut write_error = None;
    let summary = scan(st, spec, opts, |r| {
        if (!fails_only || r.is_fail()) && write_error.is_none() {
            if let Err(e) = writeln!(out, "{}", r.to_json_line()) {
                write_error = Some(e);
            }
        }
    })?;
    let flushed = out.flush();
    if let Some(e) = write_error.or(flushed.err()) {
        return Err(match report {
            Some(p) => CliError::Io(p.to_path_buf(), e),
            None => stdout_error(e),
        });
    }
    let line = format!("{st} {summary} seed={}", opts.seed);
    if report.is_some() {
        say(line)?;
    } else {
        eprintln!("{line}");
    }
    Ok(exit_for(&summary))
}

fn need<'a>(v: &'a Option<String>, st: Statement, flag: &str) -> CliResult<&'a str> {
    v.as_deref()
        .ok_or_else(|| CliError::Usage(format!("{st} needs --{flag}")))
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Rank { file, set } => {
            let m = load_matroid(&file)?;
            let r = match set {
                Some(labels) => m.rank_of_labels(&labels)?,
                None => m.rank(),
            };
            say(r)?;
        }
        Command::Circuits { file } => {
            let m = load_matroid(&file)?;
            print_family(&m, m.circuits()?)?;
        }
        Command::Cocircuits { file } => {
            let m = load_matroid(&file)?;
            print_family(&m, m.cocircuits()?)?;
        }
        Command::Components { file } => {
            let m = load_matroid(&file)?;
            print_family(&m, &m.components())?;
        }
        Command::Connectivity { file } => {
            let m = load_matroid(&file)?;
            let show = |k: Option<usize>| k.map_or("infinite".to_string(), |k| k.to_string());
            let (tutte, vertical) = (m.connectivity()?, m.vertical_connectivity()?);
            say(format!("connected: {}", m.is_connected()))?;
            say(format!("connectivity: {}", show(tutte)))?;
            say(format!("vertical-connectivity: {}", show(vertical)))?;
        }
        Command::Split {
            file,
            set,
            x,
            y,
            output,
            full,
        } => {
            let m = load_matroid(&file)?;
            let result = match (set, x, y) {
                (Some(labels), None, None) => split_set(&m, m.set_of(&labels)?),
                (None, Some(x), Some(y)) => split_pair(&m, &x, &y)?,
                _ => return Err(CliError::Usage("split needs -x a,b,.. or --x a --y b".into())),
            };
            let text = if full {
                result.to_text()
            } else {
                write_matroid(&result.split)
            };
            emit(output.as_deref(), &text)?;
        }
        Command::GraphSplit { file, x, y, v, output } => {
            let g = load_graph(&file)?;
            let split = match v {
                Some(v) => split_graph_at(&g, &v, &x, &y)?,
                None => split_graph(&g, &x, &y)?,
            };
            emit(output.as_deref(), &write_graph(&split))?;
        }
        Command::Check {
            statement: id,
            file,
            x,
            y,
            z,
            v,
            set,
            n,
            json,
            flags,
        } => {
            let st = statement(&id)?;
            let opts = flags.options();
            let need_file = || {
                file.as_deref()
                    .ok_or_else(|| CliError::Usage(format!("{st} needs an input file")))
            };
            let report = match st.params() {
                Params::Fixed => match st {
                    Statement::Figure1 => figure1_scenario(),
                    _ => figure2_scenario(),
                },
                Params::GraphVertexTriple => {
                    let g = load_graph(need_file()?)?;
                    splitting_lemma_check(
                        &g,
                        need(&v, st, "v")?,
                        need(&x, st, "x")?,
                        need(&y, st, "y")?,
                        need(&z, st, "z")?,
                    )?
                }
                Params::GraphPair => {
                    let g = load_graph(need_file()?)?;
                    commutation_check(&g, need(&x, st, "x")?, need(&y, st, "y")?)?
                }
                _ => {
                    let m = load_matroid(need_file()?)?;
                    let args = Arguments { x, y, x_set: set, n };
                    check_matroid(st, &m, &args, &opts)?
                }
            };
            if json {
                say(report.to_json_line())?;
            } else {
                say(&report)?;
            }
            return Ok(exit_for_report(&report));
        }
        Command::Enum {
            n,
            space,
            check,
            report,
            flags,
        } => {
            let spec = spec_of(n, &space)?;
            match check {
                None => {
                    let count = bimatroid::theorems::enumerate_binary_matroids(&spec)?.count();
                    say(format!("{count} matroids scanned"))?;
                }
                Some(id) => {
                    return run_scan(statement(&id)?, &spec, &flags.options(), report.as_deref(), false);
                }
            }
        }
        Command::Search {
            statement: id,
            n,
            space,
            report,
            flags,
        } => {
            let spec = spec_of(n, &space)?;
            return run_scan(statement(&id)?, &spec, &flags.options(), report.as_deref(), true);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(CliError::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
