//! The `liftscope` command line.
//!
//! Exit status: 0 on success, 2 on bad input, 3 when an internal
//! consistency check fails.

pub mod config;
pub mod report;

use clap::{Args, CommandFactory, Parser, Subcommand};
use liftscope::activity::{activity_witness, ActivityStatus};
use liftscope::algebra::fmt_rational;
use liftscope::census::{census_curve, CensusSeries, DEFAULT_TOLERANCE};
use liftscope::decompose::decompositions;
use liftscope::expr::PolyExpr;
use liftscope::factor::factor_bi;
use liftscope::fibers::{collision_set, fiber_formula_check_with};
use liftscope::pipeline::{analyze, LiftReport};
use liftscope::sources::{construct_quadratic_source, detect_quadratic_sources, source_even_center, ParamCertificate};
use liftscope::{BiPoly, Rational, UniPoly};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "liftscope", version, about = "Rational lifts on curves f(x) = g(y)", args_override_self = true)]
struct Cli {
    /// File of `key = value` lines supplying flag values (flags win)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full component analysis and growth prediction
    Analyze(AnalyzeArgs),
    /// Count integer inputs with new rational lifts
    Census(CensusArgs),
    /// Square-root sources
    #[command(subcommand)]
    Sources(SourcesCommand),
    /// Integer values of a parametrization x = A(t)
    Activity(ActivityArgs),
    /// Polynomials h with f = g(h)
    Decompose(PairArgs),
    /// Rational fiber count and its split over components
    Fibers(FibersArgs),
}

#[derive(Args, Debug)]
struct PairArgs {
    /// f, the polynomial on the input side
    #[arg(short = 'f', long = "f", allow_hyphen_values = true)]
    f: String,
    /// g, the polynomial on the lift side
    #[arg(short = 'g', long = "g", allow_hyphen_values = true)]
    g: String,
}

#[derive(Args, Debug)]
struct RangeArgs {
    /// Largest height; checkpoints default to powers of ten up to it
    #[arg(long = "max-B", value_name = "B")]
    max_b: Option<u64>,
    /// Comma-separated increasing heights
    #[arg(long, value_delimiter = ',')]
    checkpoints: Option<Vec<u64>>,
    /// Allowed distance between fitted slope and theta
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Parametrization A=<expr>,B=<expr> of a component; repeatable
    #[arg(long = "certificate", value_name = "A=..,B=..", allow_hyphen_values = true)]
    certificates: Vec<String>,
    /// Also run the census and compare its slope with theta
    #[arg(long)]
    census: bool,
    #[command(flatten)]
    range: RangeArgs,
    /// Write the JSON report here
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[command(flatten)]
    range: RangeArgs,
    /// Write the JSON report (analysis plus census) here
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum SourcesCommand {
    /// Find square-root sources of f(x) = g(y)
    Detect(PairArgs),
    /// Build f, g carrying the source x = alpha t^2 + beta, y = c + t E(t^2)
    Construct(ConstructArgs),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// G, with g(y) = G((y - c)^2)
    #[arg(long = "G", allow_hyphen_values = true)]
    g_quotient: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long = "E", allow_hyphen_values = true)]
    e: String,
}

#[derive(Args, Debug)]
struct ActivityArgs {
    /// A(t)
    #[arg(long, allow_hyphen_values = true)]
    param: String,
}

#[derive(Args, Debug)]
struct FibersArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Rational x at which to count
    #[arg(long, allow_hyphen_values = true)]
    at: String,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<liftscope::Error> for Failure {
    fn from(e: liftscope::Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn poly(text: &str, what: &str) -> Result<UniPoly, Failure> {
    PolyExpr::parse(text, None)
        .map(|e| e.poly)
        .map_err(|e| Failure::Input(format!("{what}: {e}\n  {text}\n  {}^", " ".repeat(e.position))))
}

fn rational(text: &str, what: &str) -> Result<Rational, Failure> {
    Rational::from_str(text.trim()).map_err(|_| Failure::Input(format!("{what}: expected an integer or p/q, found {text:?}")))
}

fn certificate(text: &str) -> Result<ParamCertificate, Failure> {
    let (mut a, mut b) = (None, None);
    for part in text.split(',') {
        let Some((key, value)) = part.split_once('=') else {
            return Err(Failure::Input(format!("certificate {text:?}: expected A=<expr>,B=<expr>")));
        };
        let expr = PolyExpr::parse(value, None)
            .map_err(|e| Failure::Input(format!("certificate {}: {e}", key.trim())))?;
        match key.trim() {
            "A" => a = Some(expr),
            "B" => b = Some(expr),
            other => return Err(Failure::Input(format!("certificate: unknown key {other:?}"))),
        }
    }
    let (Some(a), Some(b)) = (a, b) else {
        return Err(Failure::Input(format!("certificate {text:?}: needs both A and B")));
    };
    if let (Some(va), Some(vb)) = (&a.var, &b.var) {
        if va != vb {
            return Err(Failure::Input(format!("certificate: A uses {va} but B uses {vb}")));
        }
    }
    Ok(ParamCertificate { a: a.poly, b: b.poly })
}

fn checkpoints(range: &RangeArgs) -> Result<Vec<u64>, Failure> {
    if let Some(cps) = &range.checkpoints {
        if cps.is_empty() || cps[0] == 0 || cps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Failure::Input("checkpoints must be positive and strictly increasing".into()));
        }
        if range.max_b.is_some_and(|m| *cps.last().unwrap() > m) {
            return Err(Failure::Input("a checkpoint exceeds --max-B".into()));
        }
        return Ok(cps.clone());
    }
    let max_b = range.max_b.unwrap_or(1_000_000);
    if max_b == 0 {
        return Err(Failure::Input("--max-B must be positive".into()));
    }
    let mut cps: Vec<u64> = std::iter::successors(Some(100u64), |b| b.checked_mul(10))
        .take_while(|&b| b <= max_b)
        .collect();
    if cps.last() != Some(&max_b) {
        cps.push(max_b);
    }
    Ok(cps)
}

fn threads() -> Result<Option<usize>, Failure> {
    match std::env::var("LIFTSCOPE_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Failure::Input(format!("LIFTSCOPE_THREADS={v:?} is not a positive integer"))),
        Err(_) => Ok(None),
    }
}

fn write_json(path: &PathBuf, report: &LiftReport, census: Option<(&CensusSeries, f64)>) -> Outcome {
    let json = serde_json::to_string_pretty(&report::to_json(report, census)).expect("report serializes");
    std::fs::write(path, json + "\n").map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn analyzed(pair: &PairArgs, certs: &[ParamCertificate]) -> Result<LiftReport, Failure> {
    let f = poly(&pair.f, "f")?;
    let g = poly(&pair.g, "g")?;
    let report = analyze(&f, &g, certs)?;
    report.check_consistency()?;
    Ok(report)
}

fn run_census(report: &LiftReport, range: &RangeArgs) -> Result<CensusSeries, Failure> {
    let cps = checkpoints(range)?;
    let mut series = census_curve(&report.f, &report.g, &report.decompositions, &cps, threads()?)?;
    series.prediction = Some(report.growth_descriptor().summary);
    Ok(series)
}

fn io(e: std::io::Error) -> Failure {
    Failure::Input(format!("output: {e}"))
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Analyze(a) => {
            let certs = a.certificates.iter().map(|c| certificate(c)).collect::<Result<Vec<_>, _>>()?;
            let report = analyzed(&a.pair, &certs)?;
            let census = if a.census { Some(run_census(&report, &a.range)?) } else { None };
            let census_ref = census.as_ref().map(|s| (s, a.range.tolerance));
            write!(out, "{}", report::render_text(&report, census_ref)).map_err(io)?;
            if let Some(path) = &a.json {
                write_json(path, &report, census_ref)?;
            }
        }
        Command::Census(c) => {
            let report = analyzed(&c.pair, &[])?;
            let series = run_census(&report, &c.range)?;
            write!(out, "{}", series.to_csv()).map_err(io)?;
            match &series.fit {
                Some(fit) => writeln!(
                    err,
                    "fitted slope {:.4} over {} checkpoints; predicted growth {}",
                    fit.slope,
                    fit.points,
                    series.prediction.as_deref().unwrap_or("unknown")
                ),
                None => writeln!(err, "too few checkpoints with count ≥ 5 to fit a slope"),
            }
            .map_err(io)?;
            if let Some(path) = &c.json {
                write_json(path, &report, Some((&series, c.range.tolerance)))?;
            }
        }
        Command::Sources(SourcesCommand::Detect(pair)) => {
            let f = poly(&pair.f, "f")?;
            let g = poly(&pair.g, "g")?;
            if f.is_constant() || g.is_constant() {
                return Err(Failure::Input("f and g must be nonconstant".into()));
            }
            let found = detect_quadratic_sources(&f, &g);
            if found.is_empty() {
                match source_even_center(&g) {
                    None => writeln!(out, "no quadratic sources: g is not symmetric about any center"),
                    Some(form) => writeln!(
                        out,
                        "no quadratic sources (g is symmetric about c = {})",
                        fmt_rational(&form.c)
                    ),
                }
                .map_err(io)?;
            }
            for s in found {
                writeln!(
                    out,
                    "source: alpha = {}, beta = {}, c = {}, E(u) = {}\n  x = {}, y = {}",
                    fmt_rational(&s.alpha),
                    fmt_rational(&s.beta),
                    fmt_rational(&s.c),
                    s.e.display("u"),
                    s.a().display("t"),
                    s.b().display("t")
                )
                .map_err(io)?;
            }
        }
        Command::Sources(SourcesCommand::Construct(c)) => {
            let gq = poly(&c.g_quotient, "G")?;
            let e = poly(&c.e, "E")?;
            let (f, g, src) = construct_quadratic_source(
                &gq,
                &rational(&c.c, "c")?,
                &rational(&c.alpha, "alpha")?,
                &rational(&c.beta, "beta")?,
                &e,
            )?;
            writeln!(
                out,
                "f(x) = {}\ng(y) = {}\nsource: x = {}, y = {}",
                f.display("x"),
                g.display("y"),
                src.a().display("t"),
                src.b().display("t")
            )
            .map_err(io)?;
        }
        Command::Activity(a) => {
            let p = poly(&a.param, "param")?;
            let result = activity_witness(&p)?;
            writeln!(out, "A(t) = {}", p.display("t")).map_err(io)?;
            writeln!(out, "denominator bound M = {}", result.bound.m).map_err(io)?;
            match &result.status {
                ActivityStatus::Active { witness, lambda } => writeln!(
                    out,
                    "active: A({}) = {}; A({} + {}u) is an integer for every integer u",
                    fmt_rational(witness),
                    fmt_rational(&p.eval(witness)),
                    fmt_rational(witness),
                    fmt_rational(lambda)
                )
                .map_err(io)?,
                ActivityStatus::Inactive { checks } => {
                    writeln!(out, "inactive: no rational t gives an integer").map_err(io)?;
                    for ch in checks {
                        writeln!(
                            out,
                            "  denominator {}: no solution modulo {}^{} ({} residues checked)",
                            ch.b, ch.prime, ch.exponent, ch.residues_checked
                        )
                        .map_err(io)?;
                    }
                }
            }
        }
        Command::Decompose(pair) => {
            let f = poly(&pair.f, "f")?;
            let g = poly(&pair.g, "g")?;
            if f.is_constant() || g.is_constant() {
                return Err(Failure::Input("f and g must be nonconstant".into()));
            }
            let set = decompositions(&f, &g);
            if set.is_empty() {
                writeln!(out, "no h with f = g(h)").map_err(io)?;
            }
            for h in set.iter() {
                writeln!(out, "h(x) = {}", h.display("x")).map_err(io)?;
            }
        }
        Command::Fibers(a) => {
            let f = poly(&a.pair.f, "f")?;
            let g = poly(&a.pair.g, "g")?;
            if f.is_constant() || g.is_constant() {
                return Err(Failure::Input("f and g must be nonconstant".into()));
            }
            let x = rational(&a.at, "--at")?;
            let fact = factor_bi(&BiPoly::separated(&f, &g).squarefree_part())?;
            let cs = collision_set(&fact, false);
            let check = fiber_formula_check_with(&f, &g, &fact, &cs, &x)?;
            let parts: Vec<String> = check.per_component.iter().map(usize::to_string).collect();
            writeln!(
                out,
                "R(x) = {}\n#{{y : g(y) = f({})}} = {} = {} (graphs) + [{}] (components)",
                cs.r.display("x"),
                fmt_rational(&x),
                check.lhs,
                check.s,
                parts.join(", ")
            )
            .map_err(io)?;
        }
    }
    Ok(())
}

/// Splices config-file values in as flags right after the subcommand, so
/// that flags given on the command line override them.
fn with_config(args: Vec<OsString>) -> Result<Vec<OsString>, Failure> {
    let mut path = None;
    let mut rest = Vec::with_capacity(args.len());
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy().into_owned();
        if s == "--config" {
            path = it.next();
        } else if let Some(p) = s.strip_prefix("--config=") {
            path = Some(p.into());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else { return Ok(rest) };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::Input(format!("{}: {e}", PathBuf::from(&path).display())))?;
    let pairs = config::parse(&text).map_err(|e| Failure::Input(e.to_string()))?;
    let mut cmd = Cli::command();
    let mut depth = 1;
    loop {
        let word = rest.get(depth).map(|w| w.to_string_lossy().into_owned());
        let Some(sub) = word.and_then(|w| cmd.find_subcommand(&w).cloned()) else { break };
        cmd = sub;
        depth += 1;
    }
    let mut injected = Vec::new();
    for (key, value) in pairs {
        let Some(arg) = cmd.get_arguments().find(|a| a.get_long() == Some(key.as_str()) && key != "config") else {
            return Err(Failure::Input(format!("config key {key:?} does not apply to this command")));
        };
        if arg.get_action().takes_values() {
            injected.push(OsString::from(format!("--{key}={value}")));
        } else {
            match value.as_str() {
                "true" => injected.push(OsString::from(format!("--{key}"))),
                "false" => {}
                _ => return Err(Failure::Input(format!("config key {key:?} expects true or false"))),
            }
        }
    }
    rest.splice(depth..depth, injected);
    Ok(rest)
}

/// Runs one command line; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let result = with_config(args).and_then(|args| match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli, out, err),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                let _ = write!(out, "{}", e.render());
                Ok(())
            }
            _ => {
                let _ = write!(err, "{}", e.render());
                Err(Failure::Input(String::new()))
            }
        },
    });
    match result {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            if !msg.is_empty() {
                let _ = writeln!(err, "error: {msg}");
            }
            EXIT_INPUT
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}
