//! `korient` command-line front end.
//!
//! ```text
//! korient enumerate --mode korient --k 1 graph.txt
//! korient count --mode alpha --alpha 1,1,1,1 graph.txt
//! korient bench --mode odseq --k 2 graph.txt
//! ```
//!
//! Exit status: 0 on success (including an empty enumeration), 1 when an
//! input file cannot be read or parsed, 2 for invalid parameters.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use korient::oracle::{oracle_alpha, oracle_k_connected, oracle_sequences};
use korient::{
    enumerate_alpha_metered, enumerate_connected_sequences, enumerate_k_connected_from,
    enumerate_k_connected_metered, enumerate_outdegree_sequences_metered, DegreeSequence, DelayMeter, Error,
    Multigraph, OpCounts, Orientation,
};

/// Enumeration threads get a large stack: recursion depth grows with the
/// number of edges.
const STACK_BYTES: usize = 512 << 20;

#[derive(Parser)]
#[command(
    name = "korient",
    version,
    about = "Enumerate constrained orientations of a multigraph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every solution, one per line, then `# count=<N>`.
    Enumerate(Params),
    /// Print only `# count=<N>`.
    Count(Params),
    /// Report operation counts between consecutive solutions.
    Bench(Params),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Orientations with the outdegrees given by `--alpha`.
    Alpha,
    /// Outdegree sequences of k-arc-connected orientations.
    Odseq,
    /// k-arc-connected orientations.
    Korient,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Alpha => "alpha",
            Mode::Odseq => "odseq",
            Mode::Korient => "korient",
        }
    }
}

#[derive(Args)]
struct Params {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Arc-connectivity, at least 1 (odseq and korient).
    #[arg(long)]
    k: Option<usize>,
    /// Outdegree per vertex, comma separated (alpha).
    #[arg(long)]
    alpha: Option<String>,
    /// Use the brute-force reference implementation.
    #[arg(long)]
    oracle: bool,
    /// File holding a k-arc-connected starting orientation as a `+`/`-` line.
    #[arg(long, value_name = "FILE")]
    seed_orientation: Option<PathBuf>,
    /// Write to this file instead of standard output.
    #[arg(long, short, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Edge-list file (`n m` header, then one `u v` line per edge); `-` reads
    /// standard input.
    graph: PathBuf,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Params(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Params(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Params(m) => m,
        }
    }
}

/// Library errors raised while running: malformed file contents are input
/// failures, everything else is a bad parameter.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::OrientationFormat(_) => Failure::Input(e.to_string()),
            other => Failure::Params(other.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// The validated problem, independent of the subcommand.
enum Problem {
    Alpha(DegreeSequence),
    Odseq(usize),
    Korient(usize),
}

impl Problem {
    fn from_params(p: &Params) -> Outcome<Self> {
        match p.mode {
            Mode::Alpha => {
                if p.k.is_some() {
                    return Err(Failure::Params("--k does not apply to --mode alpha".into()));
                }
                if p.seed_orientation.is_some() {
                    return Err(Failure::Params(
                        "--seed-orientation does not apply to --mode alpha".into(),
                    ));
                }
                let text = p
                    .alpha
                    .as_deref()
                    .ok_or_else(|| Failure::Params("--mode alpha needs --alpha".into()))?;
                let alpha = text
                    .parse::<DegreeSequence>()
                    .map_err(|e| Failure::Params(format!("--alpha: {e}")))?;
                Ok(Problem::Alpha(alpha))
            }
            Mode::Odseq | Mode::Korient => {
                if p.alpha.is_some() {
                    return Err(Failure::Params(format!(
                        "--alpha does not apply to --mode {}",
                        p.mode.name()
                    )));
                }
                let k =
                    p.k.ok_or_else(|| Failure::Params(format!("--mode {} needs --k", p.mode.name())))?;
                if k == 0 {
                    return Err(Failure::Params("--k must be at least 1".into()));
                }
                if p.oracle && p.seed_orientation.is_some() {
                    return Err(Failure::Params(
                        "--seed-orientation cannot be combined with --oracle".into(),
                    ));
                }
                Ok(if p.mode == Mode::Odseq {
                    Problem::Odseq(k)
                } else {
                    Problem::Korient(k)
                })
            }
        }
    }

    fn k(&self) -> Option<usize> {
        match self {
            Problem::Alpha(_) => None,
            Problem::Odseq(k) | Problem::Korient(k) => Some(*k),
        }
    }
}

fn read_input(path: &Path) -> Outcome<String> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)
    } else {
        File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    };
    result.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load_graph(path: &Path) -> Outcome<Multigraph> {
    let text = read_input(path)?;
    Multigraph::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_seed<'g>(g: &'g Multigraph, path: &Path) -> Outcome<Orientation<'g>> {
    let text = read_input(path)?;
    Orientation::parse(g, &text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Line-oriented output that flushes after every line and remembers the
/// first write error instead of aborting the enumeration mid-callback.
struct Sink {
    out: Box<dyn Write>,
    error: Option<io::Error>,
}

impl Sink {
    fn open(target: Option<&Path>) -> Outcome<Self> {
        let out: Box<dyn Write> = match target {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).map_err(|e| Failure::Params(format!("{}: {e}", path.display())))?,
            )),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Self { out, error: None })
    }

    fn line(&mut self, text: &dyn std::fmt::Display) {
        if self.error.is_none() {
            if let Err(e) = writeln!(self.out, "{text}").and_then(|_| self.out.flush()) {
                self.error = Some(e);
            }
        }
    }

    fn close(mut self) -> Outcome<()> {
        if self.error.is_none() {
            if let Err(e) = self.out.flush() {
                self.error = Some(e);
            }
        }
        match self.error {
            Some(e) => Err(Failure::Input(format!("write failed: {e}"))),
            None => Ok(()),
        }
    }
}

/// Runs the fast enumerator, handing each solution's serialization to
/// `emit`. Returns the number of solutions.
fn run_fast(
    g: &Multigraph,
    problem: &Problem,
    seed: Option<&Path>,
    meter: &mut DelayMeter,
    emit: &mut dyn FnMut(&dyn std::fmt::Display),
) -> Outcome<u64> {
    let count = match problem {
        Problem::Alpha(alpha) => enumerate_alpha_metered(g, alpha, meter, |d| emit(d))?,
        Problem::Odseq(k) => match seed {
            Some(path) => {
                let seed = load_seed(g, path)?;
                enumerate_outdegree_sequences_metered(g, *k, &seed, meter, |s, _| emit(s))?
            }
            None => enumerate_connected_sequences(g, *k, meter, |s, _| emit(s))?,
        },
        Problem::Korient(k) => match seed {
            Some(path) => {
                let seed = load_seed(g, path)?;
                enumerate_k_connected_from(g, *k, &seed, meter, |d| emit(d))?
            }
            None => enumerate_k_connected_metered(g, *k, meter, |d| emit(d))?,
        },
    };
    Ok(count)
}

/// Runs the brute-force reference. Output is in lexicographic order.
fn run_oracle(
    g: &Multigraph,
    problem: &Problem,
    emit: &mut dyn FnMut(&dyn std::fmt::Display),
) -> Outcome<u64> {
    let lines: Vec<String> = match problem {
        Problem::Alpha(alpha) => {
            if alpha.len() != g.vertex_count() {
                return Err(Error::LengthMismatch {
                    what: "outdegree sequence",
                    expected: g.vertex_count(),
                    found: alpha.len(),
                }
                .into());
            }
            oracle_alpha(g, alpha)?.into_iter().collect()
        }
        Problem::Odseq(k) => oracle_sequences(g, *k)?
            .into_iter()
            .map(|s| s.to_string())
            .collect(),
        Problem::Korient(k) => oracle_k_connected(g, *k)?.into_iter().collect(),
    };
    for line in &lines {
        emit(line);
    }
    Ok(lines.len() as u64)
}

fn cmd_listing(p: &Params, print_solutions: bool) -> Outcome<()> {
    let problem = Problem::from_params(p)?;
    let g = load_graph(&p.graph)?;
    let mut sink = Sink::open(p.output.as_deref())?;
    let count = {
        let mut emit = |x: &dyn std::fmt::Display| {
            if print_solutions {
                sink.line(x);
            }
        };
        if p.oracle {
            run_oracle(&g, &problem, &mut emit)?
        } else {
            run_fast(
                &g,
                &problem,
                p.seed_orientation.as_deref(),
                &mut DelayMeter::new(),
                &mut emit,
            )?
        }
    };
    sink.line(&format_args!("# count={count}"));
    sink.close()
}

fn counts(c: &OpCounts) -> String {
    format!(
        "ops={} path_searches={} arc_touches={} flip_tests={}",
        c.ops(),
        c.path_searches,
        c.arc_touches,
        c.flip_tests
    )
}

fn cmd_bench(p: &Params) -> Outcome<()> {
    if p.oracle {
        return Err(Failure::Params(
            "bench measures the fast enumerators; drop --oracle".into(),
        ));
    }
    let problem = Problem::from_params(p)?;
    let g = load_graph(&p.graph)?;
    let mut meter = DelayMeter::with_log();
    let count = run_fast(
        &g,
        &problem,
        p.seed_orientation.as_deref(),
        &mut meter,
        &mut |_| {},
    )?;

    let mut header = format!(
        "mode={} n={} m={}",
        p.mode.name(),
        g.vertex_count(),
        g.edge_count()
    );
    if let Some(k) = problem.k() {
        header.push_str(&format!(" k={k}"));
    }

    let mut sink = Sink::open(p.output.as_deref())?;
    if count == 0 {
        let gap = meter.total();
        sink.line(&format_args!("no_solution {header} delay_{}", counts(&gap)));
        return sink.close();
    }
    let gaps = meter.gaps().expect("meter keeps a log");
    for (i, gap) in gaps.iter().enumerate() {
        // Gap i ends with solution i; the last one runs to termination.
        let kind = if i < gaps.len() - 1 { "gap" } else { "tail" };
        sink.line(&format_args!("{kind} index={i} {}", counts(gap)));
    }
    let max = meter.max_gap();
    sink.line(&format_args!(
        "summary {header} solutions={count} max_ops={} max_path_searches={} max_arc_touches={} \
         max_flip_tests={} mean_ops={:.4} total_ops={}",
        meter.max_gap_ops(),
        max.path_searches,
        max.arc_touches,
        max.flip_tests,
        meter.amortized_ops().expect("at least one solution"),
        meter.total().ops()
    ));
    sink.close()
}

fn run(cli: Cli) -> Outcome<()> {
    match &cli.command {
        Command::Enumerate(p) => cmd_listing(p, true),
        Command::Count(p) => cmd_listing(p, false),
        Command::Bench(p) => cmd_bench(p),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let worker = std::thread::Builder::new()
        .name("enumerate".into())
        .stack_size(STACK_BYTES)
        .spawn(move || run(cli))
        .expect("spawn enumeration thread");
    match worker.join().expect("enumeration thread panicked") {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("korient: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
