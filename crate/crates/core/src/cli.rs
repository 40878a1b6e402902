//! The `sfactor` command line: construct, rho, factor, verify, explore, g6.
//!
//! Exit codes: 0 pass, 1 counterexample, 2 parameter or parse error,
//! 3 non-convergence, 4 capacity, 5 sampled without counterexample.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::canon::canonical_form;
use crate::error::Error;
use crate::factors::{ab_factor, fractional_pm, FactorQuery, FactorResult, Outcome};
use crate::families;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6_string};
use crate::spectral::{compare_rho, spectral_radius, DEFAULT_TIE_TOL, DEFAULT_TOL};
use crate::theorems::{
    explore_problem_5_1, format_real, verify_cor_1_1, verify_lemma_suite, verify_thm_1_1,
    verify_thm_1_2, verify_thm_1_3, verify_thm_5_1, EnumerationSource, ReportVerdict, RunConfig,
    Sampler, Variant, VerificationReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_PARAMETER: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;
pub const EXIT_SAMPLED: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "sfactor",
    version,
    about = "Spectral radius and [a,b]-factor toolkit"
)]
struct Cli {
    /// Emit JSON only on stdout; diagnostics go to stderr.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph family and print its graph6 code.
    Construct {
        #[arg(value_enum)]
        family: Family,
        params: Vec<usize>,
        #[arg(long)]
        stats: bool,
    },
    /// Spectral radius of a graph6 graph (argument or stdin).
    Rho {
        graph: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        compare: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TIE_TOL)]
        tie_tol: f64,
    },
    /// Decide an [a,b]-factor, odd [1,b]-factor or fractional perfect matching.
    Factor {
        graph: Option<String>,
        #[arg(long = "a", required_unless_present = "fractional")]
        a: Option<usize>,
        #[arg(long = "b", required_unless_present = "fractional")]
        b: Option<usize>,
        #[arg(long)]
        odd: bool,
        #[arg(long, conflicts_with_all = ["a", "b", "odd"])]
        fractional: bool,
    },
    /// Run a theorem verifier and print its report.
    Verify {
        #[arg(value_enum)]
        theorem: TheoremId,
        #[command(flatten)]
        params: VerifyParams,
    },
    /// Search for the extremal graphs with a unique k-factor.
    Explore {
        #[arg(long)]
        two_n: usize,
        #[arg(long)]
        k: usize,
        /// Order of the regular part `H` when `k > n`.
        #[arg(long)]
        h_order: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Validate, summarize or convert graph6 line files.
    G6 {
        #[arg(value_enum)]
        action: G6Action,
        file: PathBuf,
        /// Skip malformed lines and report them instead of stopping.
        #[arg(long)]
        lenient: bool,
        /// Output format for `convert`.
        #[arg(long, value_enum, default_value_t = ConvertTarget::Canonical)]
        to: ConvertTarget,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    HNa,
    TGraph,
    GUniquePm,
    GUniqueKfactor,
    Complete,
    Circulant,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum TheoremId {
    #[value(name = "thm1.1")]
    Thm1_1,
    #[value(name = "thm1.2")]
    Thm1_2,
    #[value(name = "thm1.3")]
    Thm1_3,
    #[value(name = "cor1.1")]
    Cor1_1,
    #[value(name = "thm5.1")]
    Thm5_1,
    #[value(name = "lemmas")]
    Lemmas,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum G6Action {
    Validate,
    Stats,
    Convert,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConvertTarget {
    /// Canonical relabelling, one graph6 line per input line.
    Canonical,
    /// JSON lines `{"n": .., "edges": [[u, v], ..]}`.
    Edges,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Uniform,
    NearExtremal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    OneB,
    Fractional,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// `internal` or a graph6 file.
    #[arg(long, default_value = "internal")]
    source: String,
    /// Keep only connected graphs from the source.
    #[arg(long)]
    connected: bool,
    /// Keep one graph per isomorphism class.
    #[arg(long)]
    dedup: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_TIE_TOL)]
    tie_tol: f64,
    /// Also write the report to this file.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyParams {
    #[arg(long)]
    two_n: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "a")]
    a: Option<usize>,
    #[arg(long = "b")]
    b: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, value_enum, default_value_t = VariantArg::OneB)]
    variant: VariantArg,
    /// Largest order for the lemma suite.
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, value_enum, default_value_t = StrategyArg::Uniform)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 0.5)]
    p_min: f64,
    #[arg(long, default_value_t = 1.0)]
    p_max: f64,
    #[arg(long, default_value_t = 4)]
    max_edits: usize,
    #[command(flatten)]
    run: RunArgs,
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity(_) => EXIT_CAPACITY,
            Error::NonConvergence { .. } => EXIT_NON_CONVERGENCE,
            _ => EXIT_PARAMETER,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn param_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PARAMETER,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    stdin: &'a mut dyn Read,
    json: bool,
}

impl Io<'_> {
    fn line(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }

    fn value(&mut self, v: &Value) {
        self.line(&serde_json::to_string_pretty(v).expect("json"));
    }

    fn log(&mut self, s: &str) {
        let _ = writeln!(self.err, "{s}");
    }
}

/// Runs the command line against the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let stdin = io::stdin();
    run_with(
        args,
        &mut stdout.lock(),
        &mut stderr.lock(),
        &mut stdin.lock(),
    )
}

/// Runs the command line against the given streams and returns the exit
/// code.
pub fn run_with<I, T>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
    stdin: &mut dyn Read,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_PARAMETER
            } else {
                EXIT_PASS
            };
            let rendered = e.render().to_string();
            if code == EXIT_PASS {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let mut io = Io {
        out,
        err,
        stdin,
        json: cli.json,
    };
    let result = match cli.command {
        Command::Construct {
            family,
            params,
            stats,
        } => construct(&mut io, family, &params, stats),
        Command::Rho {
            graph,
            tol,
            compare,
            tie_tol,
        } => rho(&mut io, graph, tol, compare, tie_tol),
        Command::Factor {
            graph,
            a,
            b,
            odd,
            fractional,
        } => factor(&mut io, graph, a, b, odd, fractional),
        Command::Verify { theorem, params } => verify(&mut io, theorem, &params),
        Command::Explore {
            two_n,
            k,
            h_order,
            run,
        } => explore(&mut io, two_n, k, h_order, &run),
        Command::G6 {
            action,
            file,
            lenient,
            to,
        } => g6(&mut io, action, &file, lenient, to),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            io.log(&format!("error: {}", f.message));
            f.code
        }
    }
}

fn expect_params(
    family: &str,
    params: &[usize],
    names: &[&str],
) -> std::result::Result<(), Failure> {
    if params.len() != names.len() {
        return Err(param_error(format!(
            "{family} takes {} parameters ({}), got {}",
            names.len(),
            names.join(", "),
            params.len()
        )));
    }
    Ok(())
}

fn graph_stats(g: &Graph) -> Value {
    json!({
        "graph6": to_graph6_string(g),
        "order": g.order(),
        "size": g.size(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "connected": g.is_connected(),
    })
}

fn construct(io: &mut Io, family: Family, p: &[usize], stats: bool) -> CmdResult {
    let g = match family {
        Family::HNa => {
            expect_params("h_na", p, &["n", "a"])?;
            families::h_na(p[0], p[1])?
        }
        Family::TGraph => {
            expect_params("t_graph", p, &["n", "b", "delta"])?;
            families::t_graph(p[0], p[1], p[2])?
        }
        Family::GUniquePm => {
            expect_params("g_unique_pm", p, &["two_n"])?;
            families::g_unique_pm(p[0])?
        }
        Family::GUniqueKfactor => {
            expect_params("g_unique_kfactor", p, &["two_n", "k"])?;
            families::g_unique_kfactor(p[0], p[1])?
        }
        Family::Complete => {
            expect_params("complete", p, &["n"])?;
            Graph::complete(p[0])?
        }
        Family::Circulant => {
            if p.is_empty() {
                return Err(param_error("circulant takes n followed by offsets"));
            }
            families::circulant(p[0], &p[1..])?
        }
    };
    if io.json {
        let v = if stats {
            graph_stats(&g)
        } else {
            json!({ "graph6": to_graph6_string(&g) })
        };
        io.value(&v);
    } else {
        io.line(&to_graph6_string(&g));
        if stats {
            let v = graph_stats(&g);
            io.line(&serde_json::to_string(&v).expect("json"));
        }
    }
    Ok(EXIT_PASS)
}

fn read_graph(io: &mut Io, arg: Option<String>) -> std::result::Result<Graph, Failure> {
    let text = match arg {
        Some(s) => s,
        None => {
            let mut s = String::new();
            io.stdin
                .read_to_string(&mut s)
                .map_err(|e| param_error(format!("stdin: {e}")))?;
            s
        }
    };
    let line = text.trim();
    if line.is_empty() {
        return Err(param_error("no graph6 input"));
    }
    parse_graph6(line.as_bytes()).map_err(Failure::from)
}

fn rho(
    io: &mut Io,
    graph: Option<String>,
    tol: f64,
    compare: Option<String>,
    tie_tol: f64,
) -> CmdResult {
    if !positive(tol) || !positive(tie_tol) {
        return Err(param_error("tolerances must be positive"));
    }
    let g = read_graph(io, graph)?;
    let s = spectral_radius(&g, tol)?;
    let mut v = json!({
        "graph6": to_graph6_string(&g),
        "rho": format_real(s.rho),
        "residual": format_real(s.residual),
        "iterations": s.iterations,
    });
    if let Some(other) = compare {
        let h = parse_graph6(other.trim().as_bytes())?;
        let o = compare_rho(&g, &h, tie_tol)?;
        v["compare"] = json!(to_graph6_string(&h));
        v["verdict"] = json!(o.verdict);
        v["margin"] = json!(format_real(o.margin));
    }
    io.value(&v);
    Ok(EXIT_PASS)
}

fn factor_json(r: &FactorResult) -> Value {
    let mut v = Map::new();
    let (outcome, code) = match &r.outcome {
        Outcome::Found(h) => {
            let edges: Vec<[usize; 2]> = h.edges().iter().map(|e| [e.u, e.v]).collect();
            v.insert("factor_edges".into(), json!(edges));
            ("found", EXIT_PASS)
        }
        Outcome::Refuted(s) => {
            v.insert("witness".into(), json!(s.to_vec()));
            ("refuted", EXIT_PASS)
        }
        Outcome::NotFound { exhaustive } => {
            v.insert("exhaustive".into(), json!(exhaustive));
            (
                "not_found",
                if *exhaustive {
                    EXIT_PASS
                } else {
                    EXIT_CAPACITY
                },
            )
        }
    };
    v.insert("outcome".into(), json!(outcome));
    v.insert("method".into(), json!(r.method));
    v.insert("exit_code".into(), json!(code));
    Value::Object(v)
}

fn factor(
    io: &mut Io,
    graph: Option<String>,
    a: Option<usize>,
    b: Option<usize>,
    odd: bool,
    fractional: bool,
) -> CmdResult {
    let query = if fractional {
        None
    } else {
        let (a, b) = (a.expect("required"), b.expect("required"));
        Some(FactorQuery::new(a, b, odd)?)
    };
    let g = read_graph(io, graph)?;
    let mut v = match query {
        Some(q) => {
            let mut v = factor_json(&ab_factor(&g, q)?);
            v["query"] = json!(q);
            v
        }
        None => {
            let fr = fractional_pm(&g);
            let mut v = factor_json(&fr.result);
            if let Some(m) = &fr.matching {
                let weights: Vec<Value> = m
                    .weights
                    .iter()
                    .map(|(e, w)| json!([e.u, e.v, format_real(*w)]))
                    .collect();
                v["weights"] = json!(weights);
            }
            v["query"] = json!("fractional_perfect_matching");
            v
        }
    };
    let code = v["exit_code"].as_i64().unwrap_or(0) as i32;
    v.as_object_mut().expect("object").remove("exit_code");
    io.value(&v);
    Ok(code)
}

fn positive(x: f64) -> bool {
    x.is_finite() && x > 0.0
}

fn run_config(run: &RunArgs) -> std::result::Result<RunConfig, Failure> {
    if run.jobs == 0 {
        return Err(param_error("--jobs must be at least 1"));
    }
    if !positive(run.tie_tol) {
        return Err(param_error("--tie-tol must be positive"));
    }
    Ok(RunConfig {
        jobs: run.jobs,
        tie_tol: run.tie_tol,
    })
}

fn source(run: &RunArgs, order: usize) -> EnumerationSource {
    let mut src = if run.source == "internal" {
        EnumerationSource::internal(order)
    } else {
        EnumerationSource::graph6_file(&run.source)
    };
    if run.connected {
        src = src.connected();
    }
    if run.dedup {
        src = src.deduplicated();
    }
    src
}

fn need(value: Option<usize>, flag: &str, theorem: &str) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| param_error(format!("{theorem} requires --{flag}")))
}

fn emit_report(io: &mut Io, r: &VerificationReport, output: Option<&PathBuf>) -> CmdResult {
    let text = r.to_json();
    if let Some(path) = output {
        fs::write(path, format!("{text}\n")).map_err(|e| Failure {
            code: EXIT_PARAMETER,
            message: format!("{}: {e}", path.display()),
        })?;
    }
    io.line(&text);
    if !io.json {
        io.log(&format!("{}: {:?}", r.theorem, r.verdict));
    }
    Ok(match r.verdict {
        ReportVerdict::Pass => EXIT_PASS,
        ReportVerdict::Fail => EXIT_COUNTEREXAMPLE,
        ReportVerdict::SampledNoCounterexample => EXIT_SAMPLED,
    })
}

fn verify(io: &mut Io, theorem: TheoremId, p: &VerifyParams) -> CmdResult {
    let cfg = run_config(&p.run)?;
    let sampler = || -> std::result::Result<Sampler, Failure> {
        if p.samples == 0 {
            return Err(param_error("--samples must be at least 1"));
        }
        Ok(match p.strategy {
            StrategyArg::Uniform => {
                if !(0.0..=1.0).contains(&p.p_min) || !(p.p_min..=1.0).contains(&p.p_max) {
                    return Err(param_error("need 0 <= p-min <= p-max <= 1"));
                }
                Sampler::uniform(p.seed, p.samples, p.p_min, p.p_max)
            }
            StrategyArg::NearExtremal => Sampler::near_extremal(p.seed, p.samples, p.max_edits),
        })
    };
    let r = match theorem {
        TheoremId::Thm1_1 => {
            let two_n = need(p.two_n, "two-n", "thm1.1")?;
            verify_thm_1_1(two_n, &source(&p.run, two_n), &cfg)?
        }
        TheoremId::Thm1_3 => {
            let n = need(p.n, "n", "thm1.3")?;
            let a = need(p.a, "a", "thm1.3")?;
            let b = need(p.b, "b", "thm1.3")?;
            verify_thm_1_3(n, a, b, &source(&p.run, n), &cfg)?
        }
        TheoremId::Cor1_1 => {
            let n = need(p.n, "n", "cor1.1")?;
            let k = need(p.k, "k", "cor1.1")?;
            verify_cor_1_1(n, k, &source(&p.run, n), &cfg)?
        }
        TheoremId::Thm1_2 => {
            let n = need(p.n, "n", "thm1.2")?;
            let b = need(p.b, "b", "thm1.2")?;
            let delta = need(p.delta, "delta", "thm1.2")?;
            verify_thm_1_2(n, b, delta, &sampler()?, &cfg)?
        }
        TheoremId::Thm5_1 => {
            let n = need(p.n, "n", "thm5.1")?;
            let delta = need(p.delta, "delta", "thm5.1")?;
            let (variant, b) = match p.variant {
                VariantArg::OneB => (Variant::OneB, need(p.b, "b", "thm5.1")?),
                VariantArg::Fractional => (Variant::FractionalPm, 1),
            };
            verify_thm_5_1(n, b, delta, variant, &sampler()?, &cfg)?
        }
        TheoremId::Lemmas => verify_lemma_suite(p.n_max, &cfg)?,
    };
    emit_report(io, &r, p.run.output.as_ref())
}

fn explore(
    io: &mut Io,
    two_n: usize,
    k: usize,
    h_order: Option<usize>,
    run: &RunArgs,
) -> CmdResult {
    let cfg = run_config(run)?;
    let r = explore_problem_5_1(two_n, k, h_order, &source(run, two_n), &cfg)?;
    emit_report(io, &r, run.output.as_ref())
}

fn g6(
    io: &mut Io,
    action: G6Action,
    file: &PathBuf,
    lenient: bool,
    to: ConvertTarget,
) -> CmdResult {
    let bytes = fs::read(file).map_err(|e| Failure {
        code: EXIT_PARAMETER,
        message: format!("{}: {e}", file.display()),
    })?;
    let mut graphs = Vec::new();
    let mut invalid = Vec::new();
    for (i, line) in bytes.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => graphs.push((i + 1, g)),
            Err(e) => {
                let message = match e {
                    Error::Graph6(m) | Error::Capacity(m) => m,
                    other => other.to_string(),
                };
                if !lenient {
                    return Err(param_error(format!("line {}: {message}", i + 1)));
                }
                io.log(&format!("line {}: {message} (skipped)", i + 1));
                invalid.push(json!({ "line": i + 1, "error": message }));
            }
        }
    }
    match action {
        G6Action::Validate => {
            io.value(&json!({
                "status": "ok",
                "valid": graphs.len(),
                "invalid": invalid,
            }));
        }
        G6Action::Stats => {
            let mut orders: BTreeMap<usize, usize> = BTreeMap::new();
            let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
            for (_, g) in &graphs {
                *orders.entry(g.order()).or_default() += 1;
                *sizes.entry(g.size()).or_default() += 1;
            }
            let n = if orders.len() == 1 {
                json!(orders.keys().next())
            } else {
                Value::Null
            };
            let connected = graphs.iter().filter(|(_, g)| g.is_connected()).count();
            io.value(&json!({
                "n": n,
                "count": graphs.len(),
                "connected": connected,
                "order_histogram": orders,
                "size_histogram": sizes,
                "invalid": invalid,
            }));
        }
        G6Action::Convert => {
            for (line, g) in &graphs {
                match to {
                    ConvertTarget::Canonical => {
                        let c = canonical_form(g).map_err(|e| Failure {
                            code: EXIT_CAPACITY,
                            message: format!("line {line}: {e}"),
                        })?;
                        io.line(&to_graph6_string(&c));
                    }
                    ConvertTarget::Edges => {
                        let edges: Vec<[usize; 2]> = g.edges().iter().map(|e| [e.u, e.v]).collect();
                        let v = json!({ "n": g.order(), "edges": edges });
                        io.line(&serde_json::to_string(&v).expect("json"));
                    }
                }
            }
        }
    }
    Ok(EXIT_PASS)
}
