//! Command-line surface. The `uclique` binary is a one-line wrapper around
//! [`run`]; everything it does lives here so the same entry points stay
//! callable from tests.
//!
//! Exit codes are stable: 0 success, 1 usage error, 2 domain error,
//! 3 verification failure (which should never happen; it is the tripwire a
//! script watches for).

use std::ffi::OsString;
use std::ops::ControlFlow;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::clique::{
    clique_count_bruteforce, clique_count_formula, enumerate_cliques, ENUMERATION_VERTEX_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{cayley_dot, crt_decode, product_dot, ProductGraphSpec, DOT_VERTEX_CAP};
use crate::report::{Counterexample, RunReport, SuiteVerdict};
use crate::spectrum::spectrum;
use crate::verify;

/// Environment variable overriding the enumeration vertex cap (the `--cap`
/// flag still wins over it).
pub const VERTEX_CAP_ENV: &str = "UCLIQUE_VERTEX_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "uclique",
    version,
    about = "Exact clique counts for unitary Cayley graphs and direct products of balanced complete multipartite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

/// Graph selector shared by most subcommands: a unitary Cayley modulus or an
/// explicit product spec.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// Modulus n of a unitary Cayley graph (n >= 2).
    #[arg(long)]
    pub n: Option<u64>,

    /// Product spec as comma-separated AxB factors, e.g. "2x3,1x2" for
    /// K[2,3] x K[1,2]. Whitespace-insensitive.
    #[arg(long)]
    pub spec: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form count of order-m cliques.
    Count {
        #[command(flatten)]
        target: Target,

        /// Clique order m (m >= 1).
        #[arg(long)]
        m: u64,

        /// Also count by brute-force enumeration and compare.
        #[arg(long)]
        oracle: bool,

        /// Vertex cap for enumeration (default 4096; UCLIQUE_VERTEX_CAP overrides).
        #[arg(long)]
        cap: Option<u64>,
    },

    /// Run verification sweeps pairing closed forms with independent oracles.
    Verify {
        /// Which sweep to run.
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,

        /// Upper end of the modulus range (suite-specific default).
        #[arg(long)]
        n_max: Option<u64>,

        /// Largest clique order in the clique-count sweep (default 5).
        #[arg(long)]
        m_max: Option<u64>,

        /// Largest totient order in the Schemmel sweep (default 6).
        #[arg(long)]
        r_max: Option<u64>,

        /// Seed for the randomized parts (default fixed, for reproducible runs).
        #[arg(long)]
        seed: Option<u64>,

        /// Vertex cap for enumeration (default 4096; UCLIQUE_VERTEX_CAP overrides).
        #[arg(long)]
        cap: Option<u64>,
    },

    /// Eigenvalues of the unitary Cayley graph, from Ramanujan sums.
    Spectrum {
        /// Modulus n (n >= 2).
        #[arg(long)]
        n: u64,
    },

    /// Graphviz DOT export.
    Dot {
        #[command(flatten)]
        target: Target,

        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<std::path::PathBuf>,

        /// Vertex cap for export (default 512).
        #[arg(long)]
        cap: Option<u64>,
    },

    /// Stream order-m cliques in lexicographic order.
    Enumerate {
        #[command(flatten)]
        target: Target,

        /// Clique order m (m >= 1).
        #[arg(long)]
        m: u64,

        /// Stop after this many cliques.
        #[arg(long)]
        limit: Option<u64>,

        /// Vertex cap for enumeration (default 4096; UCLIQUE_VERTEX_CAP overrides).
        #[arg(long)]
        cap: Option<u64>,
    },

    /// Time the closed form against brute-force enumeration.
    Bench {
        #[command(flatten)]
        target: Target,

        /// Clique order m (m >= 1).
        #[arg(long)]
        m: u64,

        /// Repetitions per measurement (the minimum is reported).
        #[arg(long, default_value_t = 5)]
        reps: u32,

        /// Vertex cap for enumeration (default 4096; UCLIQUE_VERTEX_CAP overrides).
        #[arg(long)]
        cap: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Crt,
    Edges,
    Schemmel,
    Spectrum,
    Theorem,
    Triangles,
    All,
}

/// A resolved graph target. Cayley targets remember `n` so output can be
/// phrased in residues.
enum Graph {
    Cayley(u64, ProductGraphSpec),
    Product(ProductGraphSpec),
}

impl Graph {
    fn resolve(target: &Target) -> Result<Self> {
        match (target.n, &target.spec) {
            (Some(n), None) => Ok(Graph::Cayley(n, ProductGraphSpec::unitary_cayley(n)?)),
            (None, Some(s)) => Ok(Graph::Product(s.parse()?)),
            // clap's group constraint keeps this unreachable.
            _ => Err(Error::BadConfig {
                name: "target".into(),
                reason: "exactly one of --n / --spec is required".into(),
            }),
        }
    }

    fn spec(&self) -> &ProductGraphSpec {
        match self {
            Graph::Cayley(_, spec) | Graph::Product(spec) => spec,
        }
    }

    fn echo_into(&self, report: &mut RunReport) {
        match self {
            Graph::Cayley(n, _) => report.input("n", n),
            Graph::Product(spec) => report.input("spec", spec),
        };
    }
}

fn effective_cap(flag: Option<u64>, default: u64) -> Result<u64> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(VERTEX_CAP_ENV) {
        Ok(raw) => raw.trim().parse().map_err(|_| Error::BadConfig {
            name: VERTEX_CAP_ENV.into(),
            reason: format!("cannot parse {raw:?} as a vertex count"),
        }),
        Err(_) => Ok(default),
    }
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn cmd_count(target: &Target, m: u64, oracle: bool, cap: Option<u64>) -> Result<RunReport> {
    let graph = Graph::resolve(target)?;
    let mut report = RunReport::new("count");
    graph.echo_into(&mut report);
    report.input("m", m);

    let started = Instant::now();
    let count = clique_count_formula(graph.spec(), m)?;
    report.timing("formula", ms_since(started));
    report.result("count", &count);

    if oracle {
        let cap = effective_cap(cap, ENUMERATION_VERTEX_CAP)?;
        let started = Instant::now();
        let counted = clique_count_bruteforce(graph.spec(), m, cap)?;
        report.timing("enumeration", ms_since(started));
        if counted == count {
            report.verdict(SuiteVerdict::pass("oracle", 1));
        } else {
            report.verdict(SuiteVerdict::fail(
                "oracle",
                1,
                Counterexample {
                    instance: match &graph {
                        Graph::Cayley(n, _) => format!("n={n}"),
                        Graph::Product(spec) => format!("spec={spec}"),
                    },
                    m: Some(m),
                    expected: count.to_string(),
                    actual: counted.to_string(),
                },
            ));
        }
    }
    Ok(report)
}

fn cmd_verify(
    suite: Suite,
    n_max: Option<u64>,
    m_max: Option<u64>,
    r_max: Option<u64>,
    seed: Option<u64>,
    cap: Option<u64>,
) -> Result<RunReport> {
    let mut report = RunReport::new("verify");
    let cap = effective_cap(cap, ENUMERATION_VERTEX_CAP)?;
    let seed = seed.unwrap_or(verify::DEFAULT_SEED);
    report.input("suite", format!("{suite:?}").to_lowercase());
    if let Some(n) = n_max {
        report.input("n_max", n);
    }

    let wants = |s: Suite| suite == s || suite == Suite::All;
    // Fixed name order, independent of completion order.
    if wants(Suite::Crt) {
        let started = Instant::now();
        report.verdict(verify::verify_crt(
            n_max.map_or(100, |n| n.min(100)),
            n_max.unwrap_or(2000),
            10_000,
            seed,
        ));
        report.timing("crt", ms_since(started));
    }
    if wants(Suite::Edges) {
        let started = Instant::now();
        let n_max = n_max.unwrap_or(1000);
        report.verdict(verify::verify_edges(n_max.min(300), n_max));
        report.timing("edges", ms_since(started));
    }
    if wants(Suite::Schemmel) {
        let started = Instant::now();
        report.verdict(verify::verify_schemmel(
            n_max.unwrap_or(2000),
            r_max.unwrap_or(6),
        ));
        report.timing("schemmel", ms_since(started));
    }
    if wants(Suite::Spectrum) {
        let started = Instant::now();
        report.verdict(verify::verify_spectrum(n_max.unwrap_or(200)));
        report.timing("spectrum", ms_since(started));
    }
    if wants(Suite::Theorem) {
        let started = Instant::now();
        report.verdict(verify::verify_theorem(&verify::TheoremSweep {
            n_max: n_max.unwrap_or(60),
            m_max: m_max.unwrap_or(5),
            seed,
            cap,
            ..verify::TheoremSweep::default()
        }));
        report.timing("theorem", ms_since(started));
    }
    if wants(Suite::Triangles) {
        let started = Instant::now();
        report.verdict(verify::verify_triangles(n_max.unwrap_or(300)));
        report.timing("triangles", ms_since(started));
    }
    Ok(report)
}

fn cmd_spectrum(n: u64) -> Result<RunReport> {
    let mut report = RunReport::new("spectrum");
    report.input("n", n);
    let started = Instant::now();
    let table = spectrum(n)?;
    report.timing("total", ms_since(started));
    let rendered: Vec<String> = table.eigenvalues().iter().map(|e| e.to_string()).collect();
    let width = rendered.iter().map(|s| s.len()).max().unwrap_or(1);
    let aligned = rendered
        .iter()
        .map(|s| format!("{s:>width$}"))
        .collect::<Vec<_>>()
        .join(" ");
    report.result("eigenvalues", aligned.trim_start());
    report.result("degree", table.eigenvalues()[0].to_string());
    Ok(report)
}

fn cmd_dot(target: &Target, output: Option<&std::path::Path>, cap: Option<u64>) -> Result<RunReport> {
    let graph = Graph::resolve(target)?;
    let cap = cap.unwrap_or(DOT_VERTEX_CAP);
    let mut report = RunReport::new("dot");
    graph.echo_into(&mut report);
    let started = Instant::now();
    let text = match &graph {
        Graph::Cayley(n, _) => cayley_dot(*n, cap)?,
        Graph::Product(spec) => product_dot(spec, cap)?,
    };
    report.timing("total", ms_since(started));
    report.result("nodes", graph.spec().vertex_count());
    report.result("edges", text.matches(" -- ").count());
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Error::BadConfig {
                name: "output".into(),
                reason: format!("cannot write {}: {e}", path.display()),
            })?;
            report.result("path", path.display());
        }
        None => {
            report.result("dot", text);
        }
    }
    Ok(report)
}

fn cmd_enumerate(target: &Target, m: u64, limit: Option<u64>, cap: Option<u64>) -> Result<RunReport> {
    let graph = Graph::resolve(target)?;
    let cap = effective_cap(cap, ENUMERATION_VERTEX_CAP)?;
    let limit = limit.unwrap_or(u64::MAX);
    let mut report = RunReport::new("enumerate");
    graph.echo_into(&mut report);
    report.input("m", m);
    if limit != u64::MAX {
        report.input("limit", limit);
    }

    let mut lines: Vec<String> = Vec::new();
    let started = Instant::now();
    let emitted = if limit == 0 {
        0
    } else {
        enumerate_cliques(graph.spec(), m, cap, |clique| {
            let members: Vec<String> = match &graph {
                Graph::Cayley(n, _) => {
                    let mut residues: Vec<u64> = clique
                        .vertices()
                        .iter()
                        .map(|v| crt_decode(*n, v).expect("vertex from this spec"))
                        .collect();
                    residues.sort_unstable();
                    residues.iter().map(|r| r.to_string()).collect()
                }
                Graph::Product(_) => clique.vertices().iter().map(|v| v.to_string()).collect(),
            };
            lines.push(format!("{{{}}}", members.join(", ")));
            if lines.len() as u64 >= limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?
    };
    report.timing("total", ms_since(started));
    report.result("emitted", emitted);
    report.result("cliques", lines.join("\n"));
    Ok(report)
}

fn cmd_bench(target: &Target, m: u64, reps: u32, cap: Option<u64>) -> Result<RunReport> {
    let graph = Graph::resolve(target)?;
    let cap = effective_cap(cap, ENUMERATION_VERTEX_CAP)?;
    let reps = reps.max(1);
    let mut report = RunReport::new("bench");
    graph.echo_into(&mut report);
    report.input("m", m);
    report.input("reps", reps);

    let mut formula_best = f64::INFINITY;
    let mut count = None;
    for _ in 0..reps {
        let started = Instant::now();
        count = Some(clique_count_formula(graph.spec(), m)?);
        formula_best = formula_best.min(ms_since(started));
    }
    let count = count.expect("reps >= 1");
    report.result("count", &count);
    report.timing("formula", formula_best);

    let mut enumeration_best = f64::INFINITY;
    let mut enumerated = None;
    for _ in 0..reps {
        let started = Instant::now();
        match clique_count_bruteforce(graph.spec(), m, cap) {
            Ok(c) => enumerated = Some(c),
            Err(err) => {
                report.result("enumeration", format!("skipped: {err}"));
                return Ok(report);
            }
        }
        enumeration_best = enumeration_best.min(ms_since(started));
    }
    report.timing("enumeration", enumeration_best);
    let enumerated = enumerated.expect("reps >= 1");
    if enumerated == count {
        report.verdict(SuiteVerdict::pass("oracle", 1));
    } else {
        report.verdict(SuiteVerdict::fail(
            "oracle",
            1,
            Counterexample {
                instance: match &graph {
                    Graph::Cayley(n, _) => format!("n={n}"),
                    Graph::Product(spec) => format!("spec={spec}"),
                },
                m: Some(m),
                expected: count.to_string(),
                actual: enumerated.to_string(),
            },
        ));
    }
    Ok(report)
}

fn dispatch(cli: &Cli) -> Result<RunReport> {
    match &cli.command {
        Command::Count {
            target,
            m,
            oracle,
            cap,
        } => cmd_count(target, *m, *oracle, *cap),
        Command::Verify {
            suite,
            n_max,
            m_max,
            r_max,
            seed,
            cap,
        } => cmd_verify(*suite, *n_max, *m_max, *r_max, *seed, *cap),
        Command::Spectrum { n } => cmd_spectrum(*n),
        Command::Dot {
            target,
            output,
            cap,
        } => cmd_dot(target, output.as_deref(), *cap),
        Command::Enumerate {
            target,
            m,
            limit,
            cap,
        } => cmd_enumerate(target, *m, *limit, *cap),
        Command::Bench {
            target,
            m,
            reps,
            cap,
        } => cmd_bench(target, *m, *reps, *cap),
    }
}

fn emit(cli: &Cli, report: &RunReport) {
    if cli.json {
        println!("{}", report.to_json());
        return;
    }
    // Bare `dot` output stays pipeable into Graphviz.
    if let Some(text) = report.results.get("dot") {
        print!("{text}");
        return;
    }
    print!("{}", report.render_human());
}

/// Parses `args` and runs one command, returning the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version arrive here too; they are not usage errors.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            emit(&cli, &report);
            if report.all_passed() {
                0
            } else {
                3
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}
