//! Exhaustive enumeration and the counterexample hunt for
//! `min(s-, s+) >= n - kappa`.

pub mod canon;
pub mod enumerate;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use bitflags::bitflags;
use rayon::prelude::*;
use rayon::ThreadPool;
use serde::{Serialize, Serializer};

use crate::bounds::{self, csv_float, BoundId};
use crate::chromatic;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::summarize_with;
use crate::tolerance::Tolerances;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{thread_pool, EnumerationSpec, GraphStream};

/// Graphs evaluated per parallel batch when reading an external stream.
const INPUT_BATCH: usize = 1024;

bitflags! {
    /// Sufficient conditions whose premise held for a graph.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct ConditionFlags: u8 {
        const EDGE_COUNT_MINUS = 1;
        const EDGE_COUNT_PLUS = 1 << 1;
        const IMPROVED_MINUS = 1 << 2;
        const IMPROVED_PLUS = 1 << 3;
        const HYPER_ENERGETIC = 1 << 4;
        const ENERGY_2N_3 = 1 << 5;
    }
}

impl ConditionFlags {
    const NAMES: [(ConditionFlags, BoundId); 6] = [
        (ConditionFlags::EDGE_COUNT_MINUS, BoundId::EdgeCountMinus),
        (ConditionFlags::EDGE_COUNT_PLUS, BoundId::EdgeCountPlus),
        (ConditionFlags::IMPROVED_MINUS, BoundId::ImprovedMinus),
        (ConditionFlags::IMPROVED_PLUS, BoundId::ImprovedPlus),
        (ConditionFlags::HYPER_ENERGETIC, BoundId::HyperEnergetic),
        (ConditionFlags::ENERGY_2N_3, BoundId::EnergyTwoNMinusThree),
    ];

    /// `|`-separated bound ids, empty when no premise held.
    pub fn label(self) -> String {
        Self::NAMES.iter().filter(|(f, _)| self.contains(*f)).map(|(_, id)| id.as_str()).collect::<Vec<_>>().join("|")
    }

    fn from_premises(p: &bounds::Premises) -> Self {
        let mut f = ConditionFlags::empty();
        f.set(ConditionFlags::EDGE_COUNT_MINUS, p.edge_count_minus);
        f.set(ConditionFlags::EDGE_COUNT_PLUS, p.edge_count_plus);
        f.set(ConditionFlags::IMPROVED_MINUS, p.improved_minus);
        f.set(ConditionFlags::IMPROVED_PLUS, p.improved_plus);
        f.set(ConditionFlags::HYPER_ENERGETIC, p.hyper_energetic);
        f.set(ConditionFlags::ENERGY_2N_3, p.energy_2n_3);
        f
    }
}

impl Serialize for ConditionFlags {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

bitflags! {
    /// Optional per-graph work beyond the slack.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct Checks: u8 {
        /// Evaluate every bound and count violations per id.
        const BOUNDS = 1;
        /// Compute the exact chromatic number for the chi-dependent bounds.
        const CHROMATIC = 1 << 1;
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub max_degree: Option<usize>,
    pub checks: Checks,
    pub jobs: usize,
    pub tolerances: Tolerances,
    pub chi_budget: u64,
    /// Set to stop after the current batch; the summary is then marked
    /// truncated.
    pub cancel: Option<Arc<AtomicBool>>,
}

impl SearchConfig {
    pub fn new(n_min: usize, n_max: usize) -> Self {
        SearchConfig {
            n_min,
            n_max,
            connected_only: false,
            max_degree: None,
            checks: Checks::empty(),
            jobs: 1,
            tolerances: Tolerances::default(),
            chi_budget: chromatic::DEFAULT_NODE_BUDGET,
            cancel: None,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn spec(&self) -> EnumerationSpec {
        EnumerationSpec {
            n_min: self.n_min,
            n_max: self.n_max,
            connected_only: self.connected_only,
            max_degree: self.max_degree,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(Error::domain("parallelism width must be at least 1"));
        }
        self.spec().validate()
    }

    fn cancelled(&self) -> bool {
        self.cancel.as_ref().is_some_and(|c| c.load(Ordering::Relaxed))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    pub cyclomatic: usize,
    pub s_plus: f64,
    pub s_minus: f64,
    /// `min(s-, s+) - (n - kappa)`.
    pub slack: f64,
    pub flags: ConditionFlags,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violated_bounds: Vec<BoundId>,
}

impl SearchRecord {
    pub const CSV_HEADER: &'static str = "graph6,n,m,s_plus,s_minus,slack,flags";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.m,
            csv_float(self.s_plus),
            csv_float(self.s_minus),
            csv_float(self.slack),
            self.flags.label()
        )
    }
}

pub fn evaluate(g: &Graph, cfg: &SearchConfig) -> Result<SearchRecord> {
    let tol = &cfg.tolerances;
    let s = summarize_with(g, tol)?;
    let violated_bounds = if cfg.checks.intersects(Checks::BOUNDS | Checks::CHROMATIC) {
        let coloring = if cfg.checks.contains(Checks::CHROMATIC) && g.n() > 0 {
            Some(chromatic::chromatic_number(g, cfg.chi_budget)?)
        } else {
            None
        };
        let report = bounds::report_from_summary(g, &s, coloring.as_ref(), tol);
        report.violations().map(|e| e.id).collect()
    } else {
        Vec::new()
    };
    Ok(SearchRecord {
        graph6: graph6::encode(g),
        n: g.n(),
        m: g.edge_count(),
        kappa: g.component_count(),
        cyclomatic: g.cyclomatic_number(),
        s_plus: s.s_plus,
        s_minus: s.s_minus,
        slack: bounds::conjecture_slack(g, &s),
        flags: ConditionFlags::from_premises(&bounds::premises(g, &s, tol)),
        violated_bounds,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SlackStats {
    pub count: usize,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    #[serde(skip)]
    sum: f64,
}

impl SlackStats {
    fn push(&mut self, x: f64) {
        if self.count == 0 {
            self.min = x;
            self.max = x;
        } else {
            self.min = self.min.min(x);
            self.max = self.max.max(x);
        }
        self.count += 1;
        self.sum += x;
        self.mean = self.sum / self.count as f64;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct LevelSummary {
    pub count: usize,
    pub min_slack: Option<f64>,
    pub argmin: Option<String>,
    pub trees: usize,
    pub trees_at_zero: usize,
    pub complete_at_zero: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct HuntSummary {
    pub total: usize,
    pub per_n: BTreeMap<usize, LevelSummary>,
    pub violations: Vec<SearchRecord>,
    /// Slack in `(-tol, 0)`: reported, not counted as violations.
    pub boundary: usize,
    /// `|slack| <= tol`.
    pub equality: usize,
    pub min_slack: Option<f64>,
    pub argmin: Option<String>,
    /// Slack statistics keyed by cyclomatic number.
    pub per_cyclomatic: BTreeMap<usize, SlackStats>,
    pub condition_counts: BTreeMap<String, usize>,
    pub bound_violations: BTreeMap<String, usize>,
    pub truncated: bool,
}

impl HuntSummary {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }

    pub fn has_findings(&self) -> bool {
        !self.violations.is_empty() || !self.bound_violations.is_empty()
    }

    pub fn count_at(&self, n: usize) -> usize {
        self.per_n.get(&n).map_or(0, |l| l.count)
    }

    fn record(&mut self, r: &SearchRecord, tol: &Tolerances) {
        self.total += 1;
        let at_zero = r.slack.abs() <= tol.slack;
        if r.slack < -tol.slack {
            self.violations.push(r.clone());
        } else if r.slack < 0.0 {
            self.boundary += 1;
        }
        if at_zero {
            self.equality += 1;
        }
        if self.min_slack.is_none_or(|m| r.slack < m) {
            self.min_slack = Some(r.slack);
            self.argmin = Some(r.graph6.clone());
        }

        let level = self.per_n.entry(r.n).or_default();
        level.count += 1;
        if level.min_slack.is_none_or(|m| r.slack < m) {
            level.min_slack = Some(r.slack);
            level.argmin = Some(r.graph6.clone());
        }
        let is_tree = r.kappa == 1 && r.m + 1 == r.n;
        if is_tree {
            level.trees += 1;
            level.trees_at_zero += usize::from(at_zero);
        }
        if r.n >= 2 && r.m == r.n * (r.n - 1) / 2 && at_zero {
            level.complete_at_zero += 1;
        }

        self.per_cyclomatic.entry(r.cyclomatic).or_default().push(r.slack);
        for (flag, id) in ConditionFlags::NAMES {
            if r.flags.contains(flag) {
                *self.condition_counts.entry(id.as_str().to_owned()).or_default() += 1;
            }
        }
        for id in &r.violated_bounds {
            *self.bound_violations.entry(id.as_str().to_owned()).or_default() += 1;
        }
    }
}

fn evaluate_batch(pool: &ThreadPool, graphs: &[Graph], cfg: &SearchConfig) -> Result<Vec<SearchRecord>> {
    pool.install(|| graphs.par_iter().map(|g| evaluate(g, cfg)).collect())
}

/// Enumerated graphs matching `cfg`, in deterministic order.
pub fn enumerate_graphs(cfg: &SearchConfig) -> Result<GraphStream> {
    cfg.validate()?;
    GraphStream::new(cfg.spec(), thread_pool(cfg.jobs)?)
}

/// Runs the hunt over the enumeration, passing every record to `sink` in
/// enumeration order.
pub fn hunt<F>(cfg: &SearchConfig, mut sink: F) -> Result<HuntSummary>
where
    F: FnMut(&SearchRecord) -> Result<()>,
{
    cfg.validate()?;
    let pool = thread_pool(cfg.jobs)?;
    let mut stream = GraphStream::new(cfg.spec(), Arc::clone(&pool))?;
    let mut summary = HuntSummary::default();
    while let Some(batch) = stream.next_batch() {
        for r in evaluate_batch(&pool, &batch, cfg)? {
            summary.record(&r, &cfg.tolerances);
            sink(&r)?;
        }
        if cfg.cancelled() {
            summary.truncated = true;
            break;
        }
    }
    Ok(summary)
}

/// Runs the hunt over an external graph stream. Only `jobs`, `checks`,
/// `tolerances` and `cancel` of `cfg` are used.
pub fn hunt_graphs<I, F>(graphs: I, cfg: &SearchConfig, mut sink: F) -> Result<HuntSummary>
where
    I: IntoIterator<Item = Result<Graph>>,
    F: FnMut(&SearchRecord) -> Result<()>,
{
    let pool = thread_pool(cfg.jobs)?;
    let mut summary = HuntSummary::default();
    let mut iter = graphs.into_iter().peekable();
    while iter.peek().is_some() {
        let batch = iter.by_ref().take(INPUT_BATCH).collect::<Result<Vec<_>>>()?;
        for r in evaluate_batch(&pool, &batch, cfg)? {
            summary.record(&r, &cfg.tolerances);
            sink(&r)?;
        }
        if cfg.cancelled() {
            summary.truncated = true;
            break;
        }
    }
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub histogram: Vec<HistogramBin>,
    pub smallest: Vec<SearchRecord>,
    pub per_n_minima: BTreeMap<usize, (f64, String)>,
}

pub const EXTREMAL_LIST_LEN: usize = 20;

pub fn extremal_report(records: &[SearchRecord], bins: usize) -> Result<ExtremalReport> {
    if bins == 0 {
        return Err(Error::domain("histogram needs at least one bin"));
    }
    if records.is_empty() {
        return Ok(ExtremalReport::default());
    }
    let lo = records.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min);
    let hi = records.iter().map(|r| r.slack).fold(f64::NEG_INFINITY, f64::max);
    let width = (hi - lo) / bins as f64;
    let mut histogram: Vec<HistogramBin> = (0..bins)
        .map(|i| HistogramBin {
            lo: lo + width * i as f64,
            hi: if i + 1 == bins { hi } else { lo + width * (i + 1) as f64 },
            count: 0,
        })
        .collect();
    for r in records {
        let i = if width > 0.0 { (((r.slack - lo) / width) as usize).min(bins - 1) } else { 0 };
        histogram[i].count += 1;
    }

    let mut sorted: Vec<&SearchRecord> = records.iter().collect();
    sorted.sort_by(|a, b| a.slack.total_cmp(&b.slack).then_with(|| a.graph6.cmp(&b.graph6)));
    let smallest = sorted.iter().take(EXTREMAL_LIST_LEN).map(|r| (*r).clone()).collect();

    let mut per_n_minima: BTreeMap<usize, (f64, String)> = BTreeMap::new();
    for r in sorted {
        per_n_minima.entry(r.n).or_insert_with(|| (r.slack, r.graph6.clone()));
    }
    Ok(ExtremalReport { histogram, smallest, per_n_minima })
}
