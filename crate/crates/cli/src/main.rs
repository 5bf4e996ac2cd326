//! `extremal`: command-line front end for the toolkit.

mod output;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use extremal_core::ap::{self, Family};
use extremal_core::constructions::{self as cons, ConstructionReport};
use extremal_core::graph::{io, named};
use extremal_core::kst::{self, PrefixStream};
use extremal_core::matching::{self, AuxMode};
use extremal_core::multiplicity::{self as mult, EdgeColoring};
use extremal_core::ramsey::{self, Symmetry};
use extremal_core::report::{Outcome, SearchReport};
use extremal_core::verify::{self, Suite};
use extremal_core::{Error, Graph};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "extremal", version, about = "Exact certificates for small extremal-combinatorics statements")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Print the machine-readable JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// With --json, omit wall-clock timing so reruns are byte-identical.
    #[arg(long, global = true)]
    stable: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Node budget for exhaustive searches (default depends on the search).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Largest n tried by Ramsey searches.
    #[arg(long, global = true, default_value_t = ramsey::DEFAULT_CAP)]
    cap: usize,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write the witness alone (colouring JSON, graph or certificate) here.
    #[arg(long, global = true)]
    witness: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build an extremal construction and check its counts.
    Construct {
        #[command(subcommand)]
        which: Construct,
    },
    /// Arithmetic progressions: independent members, sub-Ramsey numbers.
    Ap {
        #[command(subcommand)]
        op: ApOp,
    },
    /// Monochromatic copies in edge colourings.
    Mult {
        #[command(subcommand)]
        op: MultOp,
    },
    /// Small Ramsey numbers.
    Ramsey {
        #[command(subcommand)]
        op: RamseyOp,
    },
    /// s-connected matchings.
    Match {
        #[command(subcommand)]
        op: MatchOp,
    },
    /// K_{s,t}-free prefix statistics.
    Kst {
        #[command(subcommand)]
        op: KstOp,
    },
    /// Run the acceptance suite, one line per criterion.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Subcommand)]
enum Construct {
    /// Turán graph T_{n,r}.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Joint-extremal graph G_{n,r}(s).
    Joint {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Prism blow-up S_{j,n}.
    Prism {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// K_k with pendant edges at one vertex; `ell` defaults to (k^2 + k)/2.
    Pendant {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
}

#[derive(Subcommand)]
enum ApOp {
    FindIndependent {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "coprime")]
        family: Family,
    },
    SrExact {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 24)]
        nmax: usize,
    },
    Tk {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum MultOp {
    /// Count monochromatic copies in a colouring file.
    Count {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        pattern: String,
    },
    Exact {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
    },
    Estimate {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
    },
}

#[derive(Subcommand)]
enum RamseyOp {
    Exact {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value = "full")]
        symmetry: Symmetry,
    },
    Sandwich {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        delete: usize,
    },
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: usize,
    },
}

#[derive(Subcommand)]
enum MatchOp {
    Exact {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        s: usize,
    },
    Aux {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value = "greedy")]
        mode: AuxMode,
        #[arg(long)]
        threshold: Option<usize>,
    },
    Structure {
        #[arg(long)]
        graph: String,
    },
}

#[derive(Subcommand)]
enum KstOp {
    Degsum {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Comma-separated vertices; all vertices when absent.
        #[arg(long, value_delimiter = ',')]
        block: Option<Vec<usize>>,
    },
    Blocks {
        #[arg(long)]
        stream: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        blocks: usize,
    },
    Witness {
        #[arg(long)]
        stream: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        blocks: usize,
    },
    Liminf {
        #[arg(long)]
        stream: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        nmax: usize,
    },
}

/// What a command produced: the report plus an optional primary text
/// (an emitted graph, suite lines) and a witness file body.
struct Produced {
    report: SearchReport,
    text: Option<String>,
    witness: Option<String>,
}

impl From<SearchReport> for Produced {
    fn from(report: SearchReport) -> Self {
        let witness = report.witness.as_ref().map(|w| serde_json::to_string_pretty(w).expect("json value"));
        Produced { report, text: None, witness }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// A named graph (`k3`, `c5`, `petersen`, ...) or a graph6/edge-list file.
fn load_graph(spec: &str) -> Result<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(io::parse_graph_auto(&read(path)?)?);
    }
    named::by_name(spec).ok_or_else(|| Error::Domain(format!("`{spec}` is neither a file nor a known graph name")).into())
}

fn load_stream(path: &Path) -> Result<PrefixStream> {
    Ok(PrefixStream::parse(&read(path)?)?)
}

fn holds(flag: bool) -> Outcome {
    if flag {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

fn construction(g: Graph, report: ConstructionReport, emit: Option<Emit>, command: String) -> Produced {
    let text = match emit {
        Some(Emit::Graph6) => Some(format!("{}\n", io::to_graph6(&g))),
        Some(Emit::Edgelist) => Some(io::to_edge_list(&g)),
        Some(Emit::Json) => Some(
            serde_json::to_string_pretty(&serde_json::json!({ "graph6": io::to_graph6(&g), "report": report }))
                .expect("json value")
                + "\n",
        ),
        None => None,
    };
    let witness = Some(io::to_edge_list(&g));
    let report = SearchReport::new(command, holds(report.pass)).with_details(&report);
    Produced { report, text, witness }
}

fn construct(which: &Construct) -> Result<Produced> {
    Ok(match *which {
        Construct::Turan { n, r, emit } => {
            let (g, rep) = cons::check_turan(&cons::TuranSpec::new(n, r)?)?;
            construction(g, rep, emit, format!("construct turan --n {n} --r {r}"))
        }
        Construct::Joint { n, r, s, emit } => {
            let (built, rep) = cons::check_joint_extremal(&cons::JointExtremalSpec::new(n, r, s)?)?;
            construction(built.graph, rep, emit, format!("construct joint --n {n} --r {r} --s {s}"))
        }
        Construct::Prism { n, j, emit } => {
            let (g, rep) = cons::check_prism_blowup(&cons::PrismBlowupSpec::new(n, j)?)?;
            construction(g, rep, emit, format!("construct prism --n {n} --j {j}"))
        }
        Construct::Pendant { k, ell, emit } => {
            let spec = match ell {
                Some(ell) => cons::PendantCliqueSpec::new(k, ell)?,
                None => cons::PendantCliqueSpec::balanced(k)?,
            };
            let (g, rep) = cons::check_pendant_clique(&spec);
            construction(g, rep, emit, format!("construct pendant --k {k} --ell {}", spec.ell))
        }
    })
}

fn ap_command(op: &ApOp, g: &Global) -> Result<Produced> {
    let budget = g.budget.unwrap_or(ap::DEFAULT_NODE_BUDGET);
    Ok(match op {
        ApOp::FindIndependent { graph, k, family } => {
            let start = Instant::now();
            let host = load_graph(graph)?;
            let out = ap::find_independent_ap(&host, *k, *family)?;
            let outcome = if out.witness.is_some() { Outcome::Found } else { Outcome::Exhausted };
            let mut r = SearchReport::new(format!("ap find-independent --k {k} --family {family:?}"), outcome)
                .with_details(out.counting);
            if let Some(p) = out.witness {
                r = r.with_witness(p);
            }
            r.timed(start).into()
        }
        ApOp::SrExact { m, k, nmax } => ap::sr_exact(*m, *k, *nmax, budget)?.into(),
        ApOp::Tk { t, m, k } => ap::tk_check(*t, *m, *k, budget)?.into(),
    })
}

fn mult_command(op: &MultOp, g: &Global) -> Result<Produced> {
    Ok(match op {
        MultOp::Count { coloring, pattern } => {
            let start = Instant::now();
            let c = EdgeColoring::parse_auto(&read(coloring)?)?;
            let h = load_graph(pattern)?;
            let counts = mult::count_mono(&c, &h)?;
            SearchReport::new(format!("mult count --pattern {pattern}"), Outcome::Exact { value: counts.total })
                .with_details(counts)
                .timed(start)
                .into()
        }
        MultOp::Exact { pattern, n, q } => {
            let h = load_graph(pattern)?;
            let mut p: Produced = mult::multiplicity_exact(&h, *n, *q, g.budget.unwrap_or(ramsey::DEFAULT_BUDGET))?.into();
            p.report.command = format!("mult exact --pattern {pattern} --n {n} --q {q}");
            p
        }
        MultOp::Estimate { pattern, n, q, trials } => {
            let start = Instant::now();
            let h = load_graph(pattern)?;
            let est = mult::multiplicity_upper_estimate(&h, *n, *q, *trials, g.seed)?;
            SearchReport::new(
                format!("mult estimate --pattern {pattern} --n {n} --q {q} --trials {trials}"),
                Outcome::Found,
            )
            .with_seed(g.seed)
            .with_details(est)
            .timed(start)
            .into()
        }
    })
}

fn ramsey_command(op: &RamseyOp, g: &Global) -> Result<Produced> {
    let budget = g.budget.unwrap_or(ramsey::DEFAULT_BUDGET);
    Ok(match op {
        RamseyOp::Exact { pattern, symmetry } => {
            let start = Instant::now();
            let h = load_graph(pattern)?;
            let r = ramsey::ramsey_with(&h, g.cap, budget, *symmetry)?;
            r.to_report(format!("ramsey exact --pattern {pattern} --cap {}", g.cap)).timed(start).into()
        }
        RamseyOp::Sandwich { pattern, delete } => {
            let start = Instant::now();
            let h = load_graph(pattern)?;
            let s = ramsey::verify_sandwich(&h, *delete, g.cap, budget)?;
            let outcome = if s.violated() {
                Outcome::Fails
            } else if s.holds() {
                Outcome::Holds
            } else {
                Outcome::Undecided
            };
            let mut r = SearchReport::new(format!("ramsey sandwich --pattern {pattern} --delete {delete}"), outcome)
                .with_nodes(s.h.nodes + s.h_prime.nodes)
                .with_details(&s);
            r.budget_exhausted = s.h.budget_exhausted || s.h_prime.budget_exhausted;
            let mut p: Produced = r.timed(start).into();
            p.witness = None;
            p
        }
        RamseyOp::Sample { n, p, trials } => {
            let start = Instant::now();
            let s = ramsey::sample_random_ramsey(*n, *p, *trials, g.seed, g.cap, budget)?;
            SearchReport::new(format!("ramsey sample --n {n} --p {p} --trials {trials}"), Outcome::Found)
                .with_seed(g.seed)
                .with_details(s)
                .timed(start)
                .into()
        }
    })
}

fn match_command(op: &MatchOp) -> Result<Produced> {
    let start = Instant::now();
    Ok(match op {
        MatchOp::Exact { graph, s } => {
            let host = load_graph(graph)?;
            let cert = matching::max_s_connected_matching(&host, *s)?;
            cert.validate(&host)?;
            SearchReport::new(format!("match exact --s {s}"), Outcome::Exact { value: cert.size() as u64 })
                .with_witness(cert)
                .timed(start)
                .into()
        }
        MatchOp::Aux { graph, s, mode, threshold } => {
            let host = load_graph(graph)?;
            let cert = matching::matching_via_aux(&host, *s, *mode, *threshold)?;
            cert.validate(&host)?;
            SearchReport::new(format!("match aux --s {s} --mode {mode:?}"), Outcome::Found)
                .with_witness(cert)
                .timed(start)
                .into()
        }
        MatchOp::Structure { graph } => {
            let host = load_graph(graph)?;
            let st = matching::check_hprime_triangle_structure(&host)?;
            let mut r = SearchReport::new("match structure", holds(st.holds()));
            if let Some(w) = st.witness {
                r = r.with_witness(w);
            }
            r.with_details(st).timed(start).into()
        }
    })
}

fn kst_command(op: &KstOp) -> Result<Produced> {
    let start = Instant::now();
    Ok(match op {
        KstOp::Degsum { graph, s, t, block } => {
            let host = load_graph(graph)?;
            let r = kst::degree_sum_check(&host, *s, *t, block.as_deref())?;
            let outcome = if r.violated() { Outcome::Fails } else { Outcome::Holds };
            SearchReport::new(format!("kst degsum --s {s} --t {t}"), outcome).with_details(r).timed(start).into()
        }
        KstOp::Blocks { stream, n, blocks } => {
            let stats = kst::block_stats(&load_stream(stream)?, *n, *blocks)?;
            SearchReport::new(format!("kst blocks --n {n} --blocks {blocks}"), Outcome::Found)
                .with_details(stats)
                .timed(start)
                .into()
        }
        KstOp::Witness { stream, s, t, n, blocks } => {
            let w = kst::low_degree_witness(&load_stream(stream)?, *s, *t, *n, *blocks)?;
            let outcome = if w.is_some() { Outcome::Found } else { Outcome::Exhausted };
            let mut r = SearchReport::new(format!("kst witness --s {s} --t {t} --n {n} --blocks {blocks}"), outcome);
            if let Some(w) = w {
                r = r.with_witness(w);
            }
            r.timed(start).into()
        }
        KstOp::Liminf { stream, s, nmax } => {
            let series = kst::liminf_statistic(&load_stream(stream)?, *s, *nmax)?;
            SearchReport::new(format!("kst liminf --s {s} --nmax {nmax}"), Outcome::Found)
                .with_details(series)
                .timed(start)
                .into()
        }
    })
}

fn verify_paper(suite: Suite) -> Produced {
    let start = Instant::now();
    let results = verify::run_suite(suite);
    let pass = results.iter().all(|r| r.pass);
    let lines: String = results.iter().map(|r| format!("{r}\n")).collect();
    let report = SearchReport::new(format!("verify-paper --suite {suite:?}").to_lowercase(), holds(pass))
        .with_details(&results)
        .timed(start);
    Produced { report, text: Some(lines), witness: None }
}

fn dispatch(cli: &Cli) -> Result<Produced> {
    let g = &cli.global;
    match &cli.command {
        Command::Construct { which } => construct(which),
        Command::Ap { op } => ap_command(op, g),
        Command::Mult { op } => mult_command(op, g),
        Command::Ramsey { op } => ramsey_command(op, g),
        Command::Match { op } => match_command(op),
        Command::Kst { op } => kst_command(op),
        Command::VerifyPaper { suite } => Ok(verify_paper(*suite)),
    }
}

fn exit_code(r: &SearchReport) -> u8 {
    if matches!(r.outcome, Outcome::Fails) {
        1
    } else if r.budget_exhausted {
        3
    } else {
        0
    }
}

fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Invariant(_)) => 1,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    if let Some(w) = g.workers {
        if w == 0 {
            bail!(Error::Domain("--workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global()?;
    }
    let produced = dispatch(cli)?;
    let report = &produced.report;
    let body = if g.json {
        let json = if g.stable { report.to_json_stable() } else { report.to_json() };
        json + "\n"
    } else {
        produced.text.clone().unwrap_or_else(|| output::table(report))
    };
    if let (Some(path), Some(w)) = (&g.witness, &produced.witness) {
        output::write_atomic(path, w)?;
    }
    match &g.out {
        Some(path) => output::write_atomic(path, &body)?,
        None => print!("{body}"),
    }
    Ok(exit_code(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}
