//! Command-line front end.
//!
//! Exit codes: 0 when nothing was violated, 2 when a bound or the slack
//! conjecture was violated, 1 on any error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, IsTerminal, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::OnceLock;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{self, BoundId, BoundsReport, ReportOptions, Status};
use crate::canonical::{self, CanonicalDecomposition};
use crate::chromatic::DEFAULT_NODE_BUDGET;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::graph6;
use crate::search::{self, Checks, HuntSummary, SearchConfig, SearchRecord};
use crate::spectral;
use crate::tolerance::{Tolerances, DEFAULT_COMPARE};

pub const JOBS_ENV: &str = "GRAPH_INERTIA_JOBS";

fn bound_list() -> &'static str {
    static TEXT: OnceLock<String> = OnceLock::new();
    TEXT.get_or_init(|| {
        let mut s = String::from("Bound ids reported by verify and family:\n");
        for id in BoundId::ALL {
            s.push_str(&format!("  {:<22} {}\n", id.as_str(), id.description()));
        }
        s
    })
}

#[derive(Debug, Parser)]
#[command(name = "graph-inertia", version, about = "Spectral sums, inertia and bounds for small graphs")]
#[command(after_help = bound_list())]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args, Clone)]
pub struct CommonArgs {
    /// Relative comparison tolerance. Rescales every tolerance uniformly; it
    /// changes only the satisfied/violated classification, never computed values.
    #[arg(long, global = true, value_name = "X")]
    pub tol: Option<f64>,

    /// Output format; defaults to table on a terminal and json otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every bound on each input graph.
    Verify(VerifyArgs),
    /// Exhaustive counterexample search over enumerated graphs or a graph6 stream.
    Search(SearchArgs),
    /// Build a named family member and report on it.
    Family(FamilyArgs),
    /// Twin quotient and class sizes of a graph.
    Quotient(InputArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// graph6 file, one graph per line; `-` or no file reads stdin.
    #[arg(conflicts_with = "graph6")]
    pub file: Option<PathBuf>,

    /// A single graph given inline.
    #[arg(long, value_name = "G6")]
    pub graph6: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Compute the exact chromatic number and the bounds that depend on it.
    #[arg(long)]
    pub with_chi: bool,

    /// Node budget of the chromatic search.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub chi_budget: u64,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Vertex counts: `A..B` (inclusive) or a single `N`.
    #[arg(long = "n", value_name = "RANGE", value_parser = parse_range, required_unless_present = "input")]
    pub n: Option<RangeInclusive<usize>>,

    /// Connected graphs only.
    #[arg(long)]
    pub connected: bool,

    /// Keep graphs with maximum degree at most D.
    #[arg(long, value_name = "D")]
    pub max_degree: Option<usize>,

    /// Read graphs from a graph6 file instead of enumerating.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["n", "connected", "max_degree"])]
    pub input: Option<PathBuf>,

    /// Also evaluate every bound per graph.
    #[arg(long)]
    pub bounds: bool,

    /// Also compute the exact chromatic number per graph (implies --bounds).
    #[arg(long)]
    pub with_chi: bool,

    /// Worker threads.
    #[arg(long, env = JOBS_ENV, value_name = "K")]
    pub jobs: Option<usize>,

    /// Add a slack histogram with this many bins and the smallest-slack list.
    #[arg(long, value_name = "BINS")]
    pub histogram: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// complete, cycle, path, star, complete-bipartite, complete-q-partite,
    /// barbell, circulant, petersen.
    pub name: String,

    /// Family parameters, e.g. `7`, `3 4`, `2,3,4`, or `10 1,3`.
    pub params: Vec<String>,

    #[arg(long)]
    pub with_chi: bool,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad vertex count {t:?}: {e}"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if r.start() > r.end() {
        return Err(format!("empty range {s}"));
    }
    Ok(r)
}

/// Whether the run found violations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Clean,
    Findings,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Clean => 0,
            Outcome::Findings => 2,
        }
    }

    fn from_findings(found: bool) -> Self {
        if found {
            Outcome::Findings
        } else {
            Outcome::Clean
        }
    }
}

struct Context {
    tolerances: Tolerances,
    format: Format,
    out: Box<dyn Write>,
}

impl Context {
    fn new(common: &CommonArgs) -> Result<Self> {
        let tolerances = match common.tol {
            Some(t) if !(t.is_finite() && t > 0.0) => return Err(Error::domain("--tol must be positive")),
            Some(t) => Tolerances::with_compare(t),
            None => Tolerances::with_compare(DEFAULT_COMPARE),
        };
        let (out, terminal): (Box<dyn Write>, bool) = match &common.out {
            Some(p) => (Box::new(BufWriter::new(File::create(p)?)), false),
            None => (Box::new(BufWriter::new(io::stdout())), io::stdout().is_terminal()),
        };
        let format = common.format.unwrap_or(if terminal { Format::Table } else { Format::Json });
        Ok(Context { tolerances, format, out })
    }

    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn json(&mut self, v: &Value) -> Result<()> {
        let text = serde_json::to_string(v).map_err(|e| Error::Internal(e.to_string()))?;
        self.line(&text)
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let mut ctx = Context::new(&cli.common)?;
    let outcome = match cli.command {
        Command::Verify(a) => cmd_verify(&mut ctx, a),
        Command::Search(a) => cmd_search(&mut ctx, a),
        Command::Family(a) => cmd_family(&mut ctx, a),
        Command::Quotient(a) => cmd_quotient(&mut ctx, a),
    }?;
    ctx.out.flush()?;
    Ok(outcome)
}

fn read_graphs(input: &InputArgs) -> Result<Box<dyn Iterator<Item = Result<Graph>>>> {
    match (&input.graph6, &input.file) {
        (Some(g), _) => Ok(Box::new(std::iter::once(graph6::decode(g.trim())))),
        (None, Some(p)) => Ok(Box::new(graph6::decode_lines(open_input(p)?))),
        (None, None) => Ok(Box::new(graph6::decode_lines(BufReader::new(io::stdin())))),
    }
}

fn open_input(p: &PathBuf) -> Result<Box<dyn BufRead>> {
    if p.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        let f = File::open(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        Ok(Box::new(BufReader::new(f)))
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |x| format!("{x:.9}"))
}

fn report_table(ctx: &mut Context, r: &BoundsReport) -> Result<()> {
    let chi = r.chi.map_or_else(String::new, |c| format!(" chi={c}"));
    ctx.line(&format!("{}  n={} m={}{chi}", r.graph6, r.n, r.m))?;
    for e in &r.entries {
        let status = match e.status {
            Status::Satisfied if e.equality => "equality",
            Status::Satisfied => "ok",
            Status::Violated => "VIOLATED",
            Status::Inapplicable => "n/a",
        };
        let note = e.reason.as_deref().unwrap_or("");
        ctx.line(&format!(
            "  {:<22} {:>16} {:>16}  {:<9} {note}",
            e.id.as_str(),
            fmt_opt(e.left),
            fmt_opt(e.right),
            status
        ))?;
    }
    Ok(())
}

fn emit_report(ctx: &mut Context, r: &BoundsReport, extra: Option<(&str, Value)>) -> Result<()> {
    match ctx.format {
        Format::Json => {
            let mut v = r.to_json();
            if let Some((k, x)) = extra {
                v[k] = x;
            }
            ctx.json(&v)
        }
        Format::Csv => ctx.line(&r.csv_row()),
        Format::Table => {
            report_table(ctx, r)?;
            if let Some((k, x)) = extra {
                ctx.line(&format!("  {k}: {x}"))?;
            }
            Ok(())
        }
    }
}

fn cmd_verify(ctx: &mut Context, args: VerifyArgs) -> Result<Outcome> {
    let opts = ReportOptions { with_chi: args.with_chi, chi_budget: args.chi_budget, tolerances: ctx.tolerances };
    if ctx.format == Format::Csv {
        ctx.line(&BoundsReport::csv_header())?;
    }
    let (mut graphs, mut violations) = (0usize, 0usize);
    for g in read_graphs(&args.input)? {
        let report = bounds::full_report(&g?, &opts)?;
        graphs += 1;
        violations += report.violation_count();
        emit_report(ctx, &report, None)?;
    }
    eprintln!("verified {graphs} graph(s), {violations} violation(s)");
    Ok(Outcome::from_findings(violations > 0))
}

fn summary_table(ctx: &mut Context, s: &HuntSummary) -> Result<()> {
    ctx.line(&format!("graphs: {}", s.total))?;
    for (n, l) in &s.per_n {
        ctx.line(&format!(
            "  n={n:<3} count={:<10} min_slack={:<14} trees={} trees_at_zero={} complete_at_zero={}",
            l.count,
            fmt_opt(l.min_slack),
            l.trees,
            l.trees_at_zero,
            l.complete_at_zero
        ))?;
    }
    ctx.line(&format!("min slack: {} ({})", fmt_opt(s.min_slack), s.argmin.as_deref().unwrap_or("-")))?;
    ctx.line(&format!("violations: {}  boundary: {}  equality: {}", s.violation_count(), s.boundary, s.equality))?;
    for v in &s.violations {
        ctx.line(&format!("  VIOLATION {} slack={:.12}", v.graph6, v.slack))?;
    }
    for (c, st) in &s.per_cyclomatic {
        ctx.line(&format!("  c={c:<3} count={:<10} min={:.9} mean={:.9}", st.count, st.min, st.mean))?;
    }
    for (id, k) in &s.bound_violations {
        ctx.line(&format!("  bound {id} violated {k} time(s)"))?;
    }
    if s.truncated {
        ctx.line("TRUNCATED")?;
    }
    Ok(())
}

fn cmd_search(ctx: &mut Context, args: SearchArgs) -> Result<Outcome> {
    let jobs = match args.jobs {
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let range = args.n.clone().unwrap_or(0..=0);
    let mut checks = Checks::empty();
    checks.set(Checks::BOUNDS, args.bounds || args.with_chi);
    checks.set(Checks::CHROMATIC, args.with_chi);
    let cfg = SearchConfig {
        connected_only: args.connected,
        max_degree: args.max_degree,
        checks,
        jobs,
        tolerances: ctx.tolerances,
        ..SearchConfig::new(*range.start(), *range.end())
    };

    let csv = ctx.format == Format::Csv;
    if csv {
        ctx.line(SearchRecord::CSV_HEADER)?;
    }
    let keep = args.histogram.is_some();
    let mut kept: Vec<SearchRecord> = Vec::new();
    let mut sink = |r: &SearchRecord| -> Result<()> {
        if csv {
            writeln!(ctx.out, "{}", r.csv_row())?;
        }
        if keep {
            kept.push(r.clone());
        }
        Ok(())
    };
    let summary = match &args.input {
        Some(p) => search::hunt_graphs(graph6::decode_lines(open_input(p)?), &cfg, &mut sink)?,
        None => search::hunt(&cfg, &mut sink)?,
    };
    let extremal = match args.histogram {
        Some(bins) => Some(search::extremal_report(&kept, bins)?),
        None => None,
    };

    let summary_json = || -> Value {
        let mut v = serde_json::to_value(&summary).unwrap_or(Value::Null);
        if let Some(e) = &extremal {
            v["extremal"] = serde_json::to_value(e).unwrap_or(Value::Null);
        }
        v
    };
    match ctx.format {
        Format::Json => ctx.json(&summary_json())?,
        Format::Csv => eprintln!("{}", summary_json()),
        Format::Table => {
            summary_table(ctx, &summary)?;
            if let Some(e) = &extremal {
                for b in &e.histogram {
                    ctx.line(&format!("  [{:.6}, {:.6}] {}", b.lo, b.hi, b.count))?;
                }
                for r in &e.smallest {
                    ctx.line(&format!("  {:<16} n={} slack={:.9}", r.graph6, r.n, r.slack))?;
                }
            }
        }
    }
    Ok(Outcome::from_findings(summary.has_findings()))
}

/// Exactly `count` integers, given as separate arguments or comma-separated.
fn params_usize(name: &str, params: &[String], count: usize) -> Result<Vec<usize>> {
    let values: Vec<&str> = params.iter().flat_map(|p| p.split(',')).map(str::trim).filter(|t| !t.is_empty()).collect();
    if values.len() != count {
        return Err(Error::domain(format!("family {name} takes {count} parameter(s)")));
    }
    values.iter().map(|p| p.parse::<usize>().map_err(|e| Error::domain(format!("bad parameter {p:?}: {e}")))).collect()
}

fn parse_list(p: &str) -> Result<Vec<usize>> {
    p.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::domain(format!("bad list entry {t:?}: {e}"))))
        .collect()
}

pub fn build_family(name: &str, params: &[String]) -> Result<Graph> {
    match name {
        "complete" => families::complete(params_usize(name, params, 1)?[0]),
        "cycle" => families::cycle(params_usize(name, params, 1)?[0]),
        "path" => families::path(params_usize(name, params, 1)?[0]),
        "star" => families::star(params_usize(name, params, 1)?[0]),
        "barbell" => families::barbell(params_usize(name, params, 1)?[0]),
        "complete-bipartite" => {
            let p = params_usize(name, params, 2)?;
            families::complete_bipartite(p[0], p[1])
        }
        "complete-q-partite" => {
            let parts = match params {
                [one] => parse_list(one)?,
                many => many.iter().map(|p| parse_list(p)).collect::<Result<Vec<_>>>()?.concat(),
            };
            families::complete_q_partite(&parts)
        }
        "circulant" => match params {
            [n, offsets] => {
                families::circulant(params_usize(name, std::slice::from_ref(n), 1)?[0], &parse_list(offsets)?)
            }
            _ => Err(Error::domain("family circulant takes N and a comma-separated offset list")),
        },
        "petersen" => {
            params_usize(name, params, 0)?;
            Ok(families::petersen())
        }
        other => Err(Error::domain(format!("unknown family {other:?}"))),
    }
}

fn cmd_family(ctx: &mut Context, args: FamilyArgs) -> Result<Outcome> {
    let g = build_family(&args.name, &args.params)?;
    let opts = ReportOptions { with_chi: args.with_chi, tolerances: ctx.tolerances, ..Default::default() };
    let report = bounds::full_report(&g, &opts)?;
    let extra = if args.name == "barbell" {
        let k = g.n() / 2;
        let prediction = families::barbell_predicted_spectrum(k)?;
        let computed = spectral::eigenvalues(&g)?;
        Some((
            "barbell",
            json!({
                "k": k,
                "predicted": prediction.eigenvalues,
                "computed": computed,
                "max_deviation": prediction.max_deviation(&computed),
            }),
        ))
    } else {
        None
    };
    if ctx.format == Format::Csv {
        ctx.line(&BoundsReport::csv_header())?;
    }
    emit_report(ctx, &report, extra)?;
    Ok(Outcome::from_findings(report.violation_count() > 0))
}

fn quotient_json(g: &Graph, d: &CanonicalDecomposition) -> Result<Value> {
    let mut v = json!({
        "graph6": graph6::encode(g),
        "quotient": graph6::encode(&d.quotient),
        "multiplicities": d.multiplicities,
        "vertex_map": d.vertex_map,
    });
    if let Some((index, a)) = canonical::p2_catalog()?.identify(&d.quotient, &d.multiplicities) {
        v["catalog_index"] = json!(index);
        v["catalog_multiplicities"] = json!(a);
    }
    Ok(v)
}

fn cmd_quotient(ctx: &mut Context, args: InputArgs) -> Result<Outcome> {
    if ctx.format == Format::Csv {
        ctx.line("graph6,quotient,multiplicities")?;
    }
    for g in read_graphs(&args)? {
        let g = g?;
        let d = canonical::canonical_graph(&g);
        match ctx.format {
            Format::Json => {
                let v = quotient_json(&g, &d)?;
                ctx.json(&v)?;
            }
            Format::Csv => {
                let a: Vec<String> = d.multiplicities.iter().map(|x| x.to_string()).collect();
                ctx.line(&format!("{},{},\"{}\"", graph6::encode(&g), graph6::encode(&d.quotient), a.join(",")))?;
            }
            Format::Table => {
                let v = quotient_json(&g, &d)?;
                ctx.line(&format!("{}  ->  {}  a={:?}", v["graph6"], v["quotient"], d.multiplicities))?;
                if let Some(i) = v.get("catalog_index") {
                    ctx.line(&format!("  catalog graph {i}, a={}", v["catalog_multiplicities"]))?;
                }
            }
        }
    }
    Ok(Outcome::Clean)
}
