//! Spectral inequalities, identities and sufficient conditions evaluated on a
//! single graph.
//!
//! Every entry is normalised to `left <= right`. An entry is *inapplicable*
//! when its hypotheses fail (isolated vertices, no edges, disconnected, an
//! unmet premise, or a missing chromatic number); inapplicable is never
//! counted as a violation.

use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::chromatic::{self, ColoringResult};
use crate::error::Result;
use crate::families;
use crate::graph::Graph;
use crate::graph6;
use crate::search::canon::is_isomorphic;
use crate::spectral::{summarize_with, Inertia, SpectralSummary};
use crate::tolerance::Tolerances;

/// Identifiers in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    Hong,
    Nikiforov,
    Conjecture,
    SMinusQuarter,
    Constantine,
    WindowMinus,
    WindowPlus,
    TauEnergy,
    RadiusEnergy,
    CauchyMinus,
    CauchyPlus,
    Brualdi,
    EdgeCountMinus,
    EdgeCountPlus,
    ImprovedMinus,
    ImprovedPlus,
    HyperEnergetic,
    EnergyTwoNMinusThree,
    RegularChain,
    AndoLinPlus,
    AndoLinMinus,
    EdwardsElphick,
    Brooks,
    BarbellClosedForm,
}

impl BoundId {
    pub const ALL: [BoundId; 24] = [
        BoundId::Hong,
        BoundId::Nikiforov,
        BoundId::Conjecture,
        BoundId::SMinusQuarter,
        BoundId::Constantine,
        BoundId::WindowMinus,
        BoundId::WindowPlus,
        BoundId::TauEnergy,
        BoundId::RadiusEnergy,
        BoundId::CauchyMinus,
        BoundId::CauchyPlus,
        BoundId::Brualdi,
        BoundId::EdgeCountMinus,
        BoundId::EdgeCountPlus,
        BoundId::ImprovedMinus,
        BoundId::ImprovedPlus,
        BoundId::HyperEnergetic,
        BoundId::EnergyTwoNMinusThree,
        BoundId::RegularChain,
        BoundId::AndoLinPlus,
        BoundId::AndoLinMinus,
        BoundId::EdwardsElphick,
        BoundId::Brooks,
        BoundId::BarbellClosedForm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Hong => "hong",
            BoundId::Nikiforov => "nikiforov",
            BoundId::Conjecture => "conjecture",
            BoundId::SMinusQuarter => "s-minus-quarter",
            BoundId::Constantine => "constantine",
            BoundId::WindowMinus => "window-minus",
            BoundId::WindowPlus => "window-plus",
            BoundId::TauEnergy => "tau-energy",
            BoundId::RadiusEnergy => "radius-energy",
            BoundId::CauchyMinus => "cauchy-minus",
            BoundId::CauchyPlus => "cauchy-plus",
            BoundId::Brualdi => "brualdi",
            BoundId::EdgeCountMinus => "edge-count-minus",
            BoundId::EdgeCountPlus => "edge-count-plus",
            BoundId::ImprovedMinus => "improved-minus",
            BoundId::ImprovedPlus => "improved-plus",
            BoundId::HyperEnergetic => "hyper-energetic",
            BoundId::EnergyTwoNMinusThree => "energy-2n-3",
            BoundId::RegularChain => "regular-chain",
            BoundId::AndoLinPlus => "ando-lin-plus",
            BoundId::AndoLinMinus => "ando-lin-minus",
            BoundId::EdwardsElphick => "edwards-elphick",
            BoundId::Brooks => "brooks",
            BoundId::BarbellClosedForm => "barbell-closed-form",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            BoundId::Hong => "mu1^2 <= 2m - n + 1 (no isolated vertices)",
            BoundId::Nikiforov => "mu1 <= (d-1)/2 + sqrt(2m - n d + (1+d)^2/4), d = min degree",
            BoundId::Conjecture => "n - kappa <= min(s-, s+)",
            BoundId::SMinusQuarter => "s- <= n^2/4",
            BoundId::Constantine => "mu_n^2 <= floor(n/2) ceil(n/2)",
            BoundId::WindowMinus => "|s- - m| <= c, c = m - n + kappa",
            BoundId::WindowPlus => "|s+ - m| <= c",
            BoundId::TauEnergy => "s- <= tau E / 2",
            BoundId::RadiusEnergy => "s+ <= mu1 E / 2",
            BoundId::CauchyMinus => "E^2 / (4 nu) <= s-",
            BoundId::CauchyPlus => "E^2 / (4 pi) <= s+",
            BoundId::Brualdi => "2 sqrt(m) <= E",
            BoundId::EdgeCountMinus => "m >= nu (n-1)  implies  n - 1 <= s-",
            BoundId::EdgeCountPlus => "m >= pi (n-1)  implies  n - 1 <= s+",
            BoundId::ImprovedMinus => "m >= nu (n-1) - B  implies  n - 1 <= s-",
            BoundId::ImprovedPlus => "m >= pi (n-1) - B  implies  n - 1 <= s+",
            BoundId::HyperEnergetic => "E > 2(n-1)  implies  n - 1 < min(s-, s+)",
            BoundId::EnergyTwoNMinusThree => "E >= 2n - 3  implies  n - 1 <= min(s-, s+)",
            BoundId::RegularChain => "connected regular, not complete or odd cycle: n <= min(s-, s+)",
            BoundId::AndoLinPlus => "1 + s+/s- <= chi (needs --with-chi)",
            BoundId::AndoLinMinus => "1 + s-/s+ <= chi (needs --with-chi)",
            BoundId::EdwardsElphick => "2m / (2m - mu1^2) <= chi (needs --with-chi)",
            BoundId::Brooks => "chi <= Delta unless complete or odd cycle (needs --with-chi)",
            BoundId::BarbellClosedForm => "barbell spectrum vs closed-form roots, max deviation <= 1e-8",
        }
    }

    pub fn needs_chi(self) -> bool {
        matches!(self, BoundId::AndoLinPlus | BoundId::AndoLinMinus | BoundId::EdwardsElphick | BoundId::Brooks)
    }

    pub fn parse(s: &str) -> Option<BoundId> {
        BoundId::ALL.into_iter().find(|b| b.as_str() == s)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Satisfied,
    Violated,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub id: BoundId,
    pub left: Option<f64>,
    pub right: Option<f64>,
    pub status: Status,
    /// `|left - right|` within the equality band.
    pub equality: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl BoundEntry {
    pub fn compare(id: BoundId, left: f64, right: f64, tol: &Tolerances) -> Self {
        BoundEntry {
            id,
            left: Some(left),
            right: Some(right),
            status: if tol.le(left, right) { Status::Satisfied } else { Status::Violated },
            equality: tol.approx_eq(left, right),
            reason: None,
        }
    }

    /// Like [`compare`](Self::compare) but with tolerances scaled by `scale`
    /// rather than by the compared values.
    pub fn compare_scaled(id: BoundId, left: f64, right: f64, scale: f64, tol: &Tolerances) -> Self {
        let s = scale.abs().max(1.0);
        BoundEntry {
            id,
            left: Some(left),
            right: Some(right),
            status: if left <= right + tol.compare * s { Status::Satisfied } else { Status::Violated },
            equality: (left - right).abs() <= tol.equality * s,
            reason: None,
        }
    }

    pub fn inapplicable(id: BoundId, reason: impl Into<String>) -> Self {
        BoundEntry {
            id,
            left: None,
            right: None,
            status: Status::Inapplicable,
            equality: false,
            reason: Some(reason.into()),
        }
    }

    /// Implication check: the conclusion `left <= right` is only asserted
    /// when `premise` holds.
    fn implication(id: BoundId, premise: bool, left: f64, right: f64, tol: &Tolerances) -> Self {
        let mut e = BoundEntry::compare(id, left, right, tol);
        if !premise {
            e.status = Status::Inapplicable;
            e.reason = Some("premise not met".into());
        }
        e
    }

    pub fn is_violated(&self) -> bool {
        self.status == Status::Violated
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "left": self.left,
            "right": self.right,
            "status": self.status,
            "equality": self.equality,
        });
        if let Some(r) = &self.reason {
            obj["reason"] = json!(r);
        }
        obj
    }
}

/// `min(s-, s+) - (n - kappa)`; negative marks a counterexample candidate.
pub fn conjecture_slack(g: &Graph, s: &SpectralSummary) -> f64 {
    s.min_s() - (g.n() - g.component_count()) as f64
}

pub fn hong_bound(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> BoundEntry {
    if g.n() == 0 || g.has_isolated_vertex() {
        return BoundEntry::inapplicable(BoundId::Hong, "requires no isolated vertices");
    }
    let mu1 = s.spectral_radius();
    let rhs = (2 * g.edge_count() + 1) as f64 - g.n() as f64;
    BoundEntry::compare(BoundId::Hong, mu1 * mu1, rhs, tol)
}

pub fn nikiforov_bound(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> BoundEntry {
    let Some(delta) = g.min_degree() else {
        return BoundEntry::inapplicable(BoundId::Nikiforov, "requires n >= 1");
    };
    let d = delta as f64;
    let radicand = 2.0 * g.edge_count() as f64 - g.n() as f64 * d + (1.0 + d).powi(2) / 4.0;
    let rhs = (d - 1.0) / 2.0 + radicand.max(0.0).sqrt();
    BoundEntry::compare(BoundId::Nikiforov, s.spectral_radius(), rhs, tol)
}

pub fn conjecture_entry(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> BoundEntry {
    let baseline = (g.n() - g.component_count()) as f64;
    let min_s = s.min_s();
    let slack = min_s - baseline;
    BoundEntry {
        id: BoundId::Conjecture,
        left: Some(baseline),
        right: Some(min_s),
        status: if slack >= -tol.slack { Status::Satisfied } else { Status::Violated },
        equality: slack.abs() <= tol.slack,
        reason: None,
    }
}

pub fn smax_quarter_bound(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> BoundEntry {
    let n = g.n() as f64;
    BoundEntry::compare(BoundId::SMinusQuarter, s.s_minus, n * n / 4.0, tol)
}

pub fn constantine_bound(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> BoundEntry {
    if g.n() == 0 {
        return BoundEntry::inapplicable(BoundId::Constantine, "requires n >= 1");
    }
    let n = g.n();
    let rhs = ((n / 2) * n.div_ceil(2)) as f64;
    BoundEntry::compare(BoundId::Constantine, s.tau * s.tau, rhs, tol)
}

/// Both halves of `m - c <= s-, s+ <= m + c`, as `|s - m| <= c`.
pub fn cyclomatic_window(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> [BoundEntry; 2] {
    let m = g.edge_count() as f64;
    let c = g.cyclomatic_number() as f64;
    [
        BoundEntry::compare_scaled(BoundId::WindowMinus, (s.s_minus - m).abs(), c, m, tol),
        BoundEntry::compare_scaled(BoundId::WindowPlus, (s.s_plus - m).abs(), c, m, tol),
    ]
}

/// `s- <= tau E/2`, `s+ <= mu1 E/2`, `E^2/4nu <= s-`, `E^2/4pi <= s+`.
pub fn energy_lemmas(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> [BoundEntry; 4] {
    if g.edge_count() == 0 {
        let why = "requires at least one edge";
        return [
            BoundEntry::inapplicable(BoundId::TauEnergy, why),
            BoundEntry::inapplicable(BoundId::RadiusEnergy, why),
            BoundEntry::inapplicable(BoundId::CauchyMinus, why),
            BoundEntry::inapplicable(BoundId::CauchyPlus, why),
        ];
    }
    let e = s.energy;
    let e2 = e * e;
    [
        BoundEntry::compare(BoundId::TauEnergy, s.s_minus, s.tau * e / 2.0, tol),
        BoundEntry::compare(BoundId::RadiusEnergy, s.s_plus, s.spectral_radius() * e / 2.0, tol),
        BoundEntry::compare(BoundId::CauchyMinus, e2 / (4.0 * s.inertia.negative as f64), s.s_minus, tol),
        BoundEntry::compare(BoundId::CauchyPlus, e2 / (4.0 * s.inertia.positive as f64), s.s_plus, tol),
    ]
}

/// Premises of the sufficient conditions that imply the conjecture bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Premises {
    pub edge_count_minus: bool,
    pub edge_count_plus: bool,
    pub improved_minus: bool,
    pub improved_plus: bool,
    pub hyper_energetic: bool,
    pub energy_2n_3: bool,
}

pub fn premises(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> Premises {
    if g.n() == 0 {
        return Premises::default();
    }
    let n1 = g.n() - 1;
    let m = g.edge_count();
    let mf = m as f64;
    let nu = s.inertia.negative;
    let pi = s.inertia.positive;
    let e = s.energy;
    Premises {
        edge_count_minus: m >= nu * n1,
        edge_count_plus: m >= pi * n1,
        improved_minus: mf >= (nu * n1) as f64 - s.b_value,
        improved_plus: mf >= (pi * n1) as f64 - s.b_value,
        hyper_energetic: e > 2.0 * n1 as f64 + tol.compare * e.max(1.0),
        energy_2n_3: e >= 2.0 * g.n() as f64 - 3.0,
    }
}

pub fn sufficient_conditions(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> Vec<BoundEntry> {
    let mut out = Vec::with_capacity(7);
    if g.edge_count() >= 1 {
        out.push(BoundEntry::compare(BoundId::Brualdi, 2.0 * (g.edge_count() as f64).sqrt(), s.energy, tol));
    } else {
        out.push(BoundEntry::inapplicable(BoundId::Brualdi, "requires at least one edge"));
    }
    if g.n() == 0 {
        for id in [
            BoundId::EdgeCountMinus,
            BoundId::EdgeCountPlus,
            BoundId::ImprovedMinus,
            BoundId::ImprovedPlus,
            BoundId::HyperEnergetic,
            BoundId::EnergyTwoNMinusThree,
        ] {
            out.push(BoundEntry::inapplicable(id, "requires n >= 1"));
        }
        return out;
    }
    let p = premises(g, s, tol);
    let n1 = (g.n() - 1) as f64;
    out.push(BoundEntry::implication(BoundId::EdgeCountMinus, p.edge_count_minus, n1, s.s_minus, tol));
    out.push(BoundEntry::implication(BoundId::EdgeCountPlus, p.edge_count_plus, n1, s.s_plus, tol));
    out.push(BoundEntry::implication(BoundId::ImprovedMinus, p.improved_minus, n1, s.s_minus, tol));
    out.push(BoundEntry::implication(BoundId::ImprovedPlus, p.improved_plus, n1, s.s_plus, tol));
    out.push(BoundEntry::implication(BoundId::HyperEnergetic, p.hyper_energetic, n1, s.min_s(), tol));
    out.push(BoundEntry::implication(BoundId::EnergyTwoNMinusThree, p.energy_2n_3, n1, s.min_s(), tol));
    out
}

/// `s-, s+ >= 2m/chi >= 2m/d = n` for connected regular graphs outside the
/// Brooks exceptions; the conclusion needs no chromatic number.
pub fn regular_chain(g: &Graph, s: &SpectralSummary, tol: &Tolerances) -> BoundEntry {
    if !g.is_connected() || !g.is_regular() {
        return BoundEntry::inapplicable(BoundId::RegularChain, "requires connected regular");
    }
    if g.is_complete() || g.is_odd_cycle() {
        return BoundEntry::inapplicable(BoundId::RegularChain, "complete graph or odd cycle");
    }
    BoundEntry::compare(BoundId::RegularChain, g.n() as f64, s.min_s(), tol)
}

/// Ando-Lin (both directions) and Edwards-Elphick against an exact `chi`.
pub fn ando_lin_check(g: &Graph, s: &SpectralSummary, chi: usize, tol: &Tolerances) -> [BoundEntry; 3] {
    if g.edge_count() == 0 {
        let why = "requires at least one edge";
        return [
            BoundEntry::inapplicable(BoundId::AndoLinPlus, why),
            BoundEntry::inapplicable(BoundId::AndoLinMinus, why),
            BoundEntry::inapplicable(BoundId::EdwardsElphick, why),
        ];
    }
    let chi = chi as f64;
    let two_m = 2.0 * g.edge_count() as f64;
    let mu1 = s.spectral_radius();
    [
        BoundEntry::compare(BoundId::AndoLinPlus, 1.0 + s.s_plus / s.s_minus, chi, tol),
        BoundEntry::compare(BoundId::AndoLinMinus, 1.0 + s.s_minus / s.s_plus, chi, tol),
        BoundEntry::compare(BoundId::EdwardsElphick, two_m / (two_m - mu1 * mu1), chi, tol),
    ]
}

/// Compares the spectrum with the closed-form barbell roots when `g` is a
/// barbell.
pub fn barbell_entry(g: &Graph, s: &SpectralSummary) -> BoundEntry {
    let id = BoundId::BarbellClosedForm;
    let n = g.n();
    let k = n / 2;
    if !n.is_multiple_of(2) || k < 3 || g.edge_count() != k * (k - 1) + 1 {
        return BoundEntry::inapplicable(id, "not a barbell");
    }
    let (Ok(reference), Ok(prediction)) = (families::barbell(k), families::barbell_predicted_spectrum(k)) else {
        return BoundEntry::inapplicable(id, "not a barbell");
    };
    if !is_isomorphic(g, &reference) {
        return BoundEntry::inapplicable(id, "not a barbell");
    }
    // The summary snaps the exact zero block; barbells have none.
    let deviation = prediction.max_deviation(&s.eigenvalues);
    let limit = 1e-8;
    BoundEntry {
        id,
        left: Some(deviation),
        right: Some(limit),
        status: if deviation <= limit { Status::Satisfied } else { Status::Violated },
        equality: false,
        reason: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportOptions {
    pub with_chi: bool,
    pub chi_budget: u64,
    pub tolerances: Tolerances,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { with_chi: false, chi_budget: chromatic::DEFAULT_NODE_BUDGET, tolerances: Tolerances::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub chi: Option<usize>,
    pub inertia: Inertia,
    pub s_plus: f64,
    pub s_minus: f64,
    /// `min(s-, s+) - (n - 1)`.
    pub slack: f64,
    pub entries: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn get(&self, id: BoundId) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.is_violated())
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }

    /// `{"graph6", "n", "m", "chi", "bounds": {id: {left, right, status, equality, reason?}}}`.
    pub fn to_json(&self) -> Value {
        let mut bounds = Map::new();
        for e in &self.entries {
            bounds.insert(e.id.as_str().to_owned(), e.to_json());
        }
        json!({
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "chi": self.chi,
            "inertia": {
                "positive": self.inertia.positive,
                "negative": self.inertia.negative,
                "zero": self.inertia.zero,
            },
            "s_plus": self.s_plus,
            "s_minus": self.s_minus,
            "slack": self.slack,
            "bounds": Value::Object(bounds),
        })
    }

    pub fn csv_header() -> String {
        let mut cols: Vec<String> =
            ["graph6", "n", "m", "chi", "positive", "negative", "zero", "s_plus", "s_minus", "slack"]
                .map(String::from)
                .into();
        for id in BoundId::ALL {
            cols.push(format!("{id}_left"));
            cols.push(format!("{id}_right"));
        }
        cols.push("violations".into());
        cols.join(",")
    }

    /// One row; inapplicable bounds leave their column pair empty.
    pub fn csv_row(&self) -> String {
        let mut cols = vec![
            csv_escape(&self.graph6),
            self.n.to_string(),
            self.m.to_string(),
            self.chi.map(|c| c.to_string()).unwrap_or_default(),
            self.inertia.positive.to_string(),
            self.inertia.negative.to_string(),
            self.inertia.zero.to_string(),
            csv_float(self.s_plus),
            csv_float(self.s_minus),
            csv_float(self.slack),
        ];
        for id in BoundId::ALL {
            match self.get(id) {
                Some(e) if e.status != Status::Inapplicable => {
                    cols.push(fmt_f64(e.left));
                    cols.push(fmt_f64(e.right));
                }
                _ => {
                    cols.push(String::new());
                    cols.push(String::new());
                }
            }
        }
        cols.push(self.violation_count().to_string());
        cols.join(",")
    }
}

fn fmt_f64(v: Option<f64>) -> String {
    v.map(csv_float).unwrap_or_default()
}

/// Fixed 12-decimal form; values that round to zero print without a sign.
pub(crate) fn csv_float(x: f64) -> String {
    let x = if x.abs() < 5e-13 { 0.0 } else { x };
    format!("{x:.12}")
}

/// graph6 can contain `"` and `,`-free printable ASCII; quote when needed.
pub(crate) fn csv_escape(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn report_from_summary(
    g: &Graph,
    s: &SpectralSummary,
    coloring: Option<&ColoringResult>,
    tol: &Tolerances,
) -> BoundsReport {
    let mut entries = Vec::with_capacity(BoundId::ALL.len());
    if g.n() > 0 {
        entries.push(hong_bound(g, s, tol));
        entries.push(nikiforov_bound(g, s, tol));
        entries.push(conjecture_entry(g, s, tol));
        entries.push(smax_quarter_bound(g, s, tol));
        entries.push(constantine_bound(g, s, tol));
        entries.extend(cyclomatic_window(g, s, tol));
        entries.extend(energy_lemmas(g, s, tol));
        entries.extend(sufficient_conditions(g, s, tol));
        entries.push(regular_chain(g, s, tol));
        match coloring {
            Some(c) => {
                entries.extend(ando_lin_check(g, s, c.chi, tol));
                entries.push(chromatic::brooks_check(g, c.chi, tol));
            }
            None => {
                for id in BoundId::ALL.into_iter().filter(|b| b.needs_chi()) {
                    entries.push(BoundEntry::inapplicable(id, "chromatic number not requested"));
                }
            }
        }
        entries.push(barbell_entry(g, s));
        entries.sort_by_key(|e| e.id);
    }
    BoundsReport {
        graph6: graph6::encode(g),
        n: g.n(),
        m: g.edge_count(),
        chi: coloring.map(|c| c.chi),
        inertia: s.inertia,
        s_plus: s.s_plus,
        s_minus: s.s_minus,
        slack: if g.n() > 0 { conjecture_slack(g, s) } else { 0.0 },
        entries,
    }
}

pub fn full_report(g: &Graph, opts: &ReportOptions) -> Result<BoundsReport> {
    let s = summarize_with(g, &opts.tolerances)?;
    let coloring =
        if opts.with_chi && g.n() > 0 { Some(chromatic::chromatic_number(g, opts.chi_budget)?) } else { None };
    Ok(report_from_summary(g, &s, coloring.as_ref(), &opts.tolerances))
}
