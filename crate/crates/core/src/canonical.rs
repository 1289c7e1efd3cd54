//! Twin quotients and the graphs with exactly two negative eigenvalues.
//!
//! Two vertices are twins when they are non-adjacent with the same
//! neighbourhood, i.e. their adjacency rows are equal. The quotient by this
//! relation (the *canonical graph*) has the same numbers of positive and
//! negative eigenvalues as the original, and every graph is a blow-up of its
//! quotient.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Row};
use crate::spectral::{summarize_with, SpectralSummary};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalDecomposition {
    /// Twin-free quotient; class `i` is the `i`-th class by first occurrence.
    pub quotient: Graph,
    /// Size of each twin class.
    pub multiplicities: Vec<usize>,
    /// Original vertex to quotient vertex.
    pub vertex_map: Vec<usize>,
}

impl CanonicalDecomposition {
    pub fn is_twin_free(&self) -> bool {
        self.multiplicities.iter().all(|&a| a == 1)
    }
}

pub fn canonical_graph(g: &Graph) -> CanonicalDecomposition {
    let mut class_of_row: HashMap<Row, usize> = HashMap::new();
    let mut representatives = Vec::new();
    let mut multiplicities = Vec::new();
    let vertex_map = (0..g.n())
        .map(|v| {
            *class_of_row.entry(g.neighbor_mask(v)).or_insert_with(|| {
                representatives.push(v);
                multiplicities.push(0);
                representatives.len() - 1
            })
        })
        .collect::<Vec<_>>();
    for &c in &vertex_map {
        multiplicities[c] += 1;
    }
    CanonicalDecomposition { quotient: g.induced(&representatives), multiplicities, vertex_map }
}

pub fn is_canonical(g: &Graph) -> bool {
    canonical_graph(g).is_twin_free()
}

/// Connected with exactly `t` negative eigenvalues.
pub fn in_p(g: &Graph, t: usize, tol: &Tolerances) -> Result<bool> {
    Ok(g.is_connected() && summarize_with(g, tol)?.inertia.negative == t)
}

/// Connected with exactly `t` positive eigenvalues.
pub fn in_q(g: &Graph, t: usize, tol: &Tolerances) -> Result<bool> {
    Ok(g.is_connected() && summarize_with(g, tol)?.inertia.positive == t)
}

/// Complete multipartite with at least two parts, including complete graphs:
/// the quotient is complete on two or more vertices.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    let q = canonical_graph(g).quotient;
    q.n() >= 2 && q.is_complete()
}

/// Complete bipartite with both sides non-empty.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    let q = canonical_graph(g).quotient;
    q.n() == 2 && q.edge_count() == 1
}

/// One catalog graph, 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    /// 1-based position in the catalog.
    pub index: usize,
    pub graph: Graph,
    /// Vertices adjacent to a pendant vertex.
    pub pendant_neighbours: Vec<usize>,
    /// Lower bound on `B` of every blow-up, used when some multiplicity is 1.
    pub b_lower: Option<f64>,
}

/// The nine twin-free connected graphs with exactly two negative eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct P2Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl P2Catalog {
    pub fn get(&self, index: usize) -> Result<&CatalogEntry> {
        index
            .checked_sub(1)
            .and_then(|i| self.entries.get(i))
            .ok_or_else(|| Error::domain(format!("catalog index {index} outside 1..=9")))
    }

    /// Catalog index whose graph is isomorphic to `g`, with the
    /// lexicographically largest multiplicity vector among the isomorphisms
    /// when `multiplicities` is given in `g`'s vertex order.
    pub fn identify(&self, g: &Graph, multiplicities: &[usize]) -> Option<(usize, Vec<usize>)> {
        for e in &self.entries {
            let h = &e.graph;
            if h.n() != g.n() || h.edge_count() != g.edge_count() {
                continue;
            }
            let mut best: Option<Vec<usize>> = None;
            for_each_permutation(g.n(), &mut |order| {
                // Catalog vertex i corresponds to g's vertex order[i].
                if g.permuted(order) == *h {
                    let a: Vec<usize> = order.iter().map(|&v| multiplicities[v]).collect();
                    if best.as_ref().is_none_or(|b| a > *b) {
                        best = Some(a);
                    }
                }
            });
            if let Some(a) = best {
                return Some((e.index, a));
            }
        }
        None
    }
}

fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(order: &mut Vec<usize>, used: &mut [bool], f: &mut dyn FnMut(&[usize])) {
        if order.len() == used.len() {
            f(order);
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                order.push(v);
                rec(order, used, f);
                order.pop();
                used[v] = false;
            }
        }
    }
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], f);
}

fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(n, &e).expect("catalog edges are in range")
}

/// Vertex count, 1-based edges and the known lower bound on `B`.
type EntrySpec = (usize, Vec<(usize, usize)>, Option<f64>);

fn build_catalog() -> Result<P2Catalog> {
    let g6 = [(1, 2), (2, 3), (3, 4), (4, 1), (2, 5), (3, 5)];
    let mut g8 = g6.to_vec();
    g8.push((5, 6));
    let spec: [EntrySpec; 9] = [
        (3, vec![(1, 2), (2, 3), (1, 3)], None),
        (4, vec![(1, 2), (2, 3), (3, 4)], None),
        (4, vec![(1, 2), (2, 3), (1, 3), (3, 4)], Some(2.0)),
        (5, vec![(1, 2), (2, 3), (3, 4), (4, 5)], None),
        (5, vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)], Some(5.0)),
        (5, g6.to_vec(), Some(2.0)),
        (5, vec![(1, 2), (2, 3), (1, 3), (1, 4), (2, 5)], Some(3.0)),
        (6, g8, Some(2.0)),
        (6, vec![(1, 2), (2, 5), (5, 3), (3, 4), (4, 6), (6, 1), (1, 3), (2, 6), (4, 5)], Some(7.0)),
    ];
    let tol = Tolerances::default();
    let mut entries = Vec::with_capacity(9);
    for (i, (n, edges, b_lower)) in spec.into_iter().enumerate() {
        let graph = one_based(n, &edges);
        let index = i + 1;
        if !graph.is_connected() || !is_canonical(&graph) {
            return Err(Error::Internal(format!("catalog graph {index} is not connected and twin-free")));
        }
        let s = summarize_with(&graph, &tol)?;
        if s.inertia.negative != 2 {
            return Err(Error::Internal(format!(
                "catalog graph {index} has {} negative eigenvalues",
                s.inertia.negative
            )));
        }
        let pendant_neighbours = (0..n).filter(|&v| graph.neighbors(v).any(|u| graph.degree(u) == 1)).collect();
        entries.push(CatalogEntry { index, graph, pendant_neighbours, b_lower });
    }
    Ok(P2Catalog { entries })
}

/// The catalog, built and self-checked once.
pub fn p2_catalog() -> Result<&'static P2Catalog> {
    static CATALOG: OnceLock<std::result::Result<P2Catalog, Error>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog).as_ref().map_err(Clone::clone)
}

/// Which argument covers a blow-up of a catalog graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "case")]
pub enum CoverCase {
    /// Blow-ups of the triangle are complete tripartite.
    CompleteTripartite,
    /// Blow-ups of the two paths are bipartite: `s- = s+ = m >= n - 1`.
    Bipartite,
    /// Every multiplicity at least 2; the edge count carries the bound.
    AllMultiplicitiesAtLeastTwo,
    /// Some multiplicity is 1; `m >= 2(n-1) - b_lower` with `B >= b_lower`.
    EdgeSurplus { b_lower: f64 },
    /// Every pendant neighbour has multiplicity at least 2.
    PendantNeighbours { b_lower: f64 },
    /// A pendant neighbour has multiplicity 1; nothing is claimed.
    Uncovered,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlowUpCheck {
    pub index: usize,
    pub multiplicities: Vec<usize>,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub negative: usize,
    pub s_minus: f64,
    /// `s- - (n - 1)`.
    pub slack: f64,
    pub b_value: f64,
    pub case: CoverCase,
    /// Arithmetic premise of the covering argument.
    pub premise_holds: bool,
    /// `m >= 2(n-1) - B` with the computed `B`.
    pub improved_premise_holds: bool,
    /// Whether `s- >= n - 1` is claimed for this blow-up.
    pub asserted: bool,
    pub holds: bool,
}

impl BlowUpCheck {
    /// A claimed bound that does not hold.
    pub fn is_failure(&self) -> bool {
        self.asserted && (!self.holds || !self.premise_holds)
    }
}

fn classify(entry: &CatalogEntry, a: &[usize], n: usize, m: usize, s: &SpectralSummary) -> (CoverCase, bool) {
    let two_n1 = 2.0 * (n as f64 - 1.0);
    let mf = m as f64;
    match entry.index {
        1 => (CoverCase::CompleteTripartite, s.inertia.positive == 1),
        2 | 4 => (CoverCase::Bipartite, m + 1 >= n),
        i => {
            if a.iter().all(|&x| x >= 2) {
                return (CoverCase::AllMultiplicitiesAtLeastTwo, m >= 2 * n);
            }
            let b_lower = entry.b_lower.expect("catalog entries 3, 5-9 carry a B lower bound");
            let premise = mf >= two_n1 - b_lower;
            if matches!(i, 5 | 6 | 9) {
                (CoverCase::EdgeSurplus { b_lower }, premise)
            } else if entry.pendant_neighbours.iter().all(|&v| a[v] >= 2) {
                (CoverCase::PendantNeighbours { b_lower }, premise)
            } else {
                (CoverCase::Uncovered, premise)
            }
        }
    }
}

/// Blow-up of catalog graph `index` (1-based) by `a`, with the covering
/// argument, its premise, and the realised slack.
pub fn verify_lemma_family(index: usize, a: &[usize]) -> Result<BlowUpCheck> {
    verify_lemma_family_with(index, a, &Tolerances::default())
}

pub fn verify_lemma_family_with(index: usize, a: &[usize], tol: &Tolerances) -> Result<BlowUpCheck> {
    let entry = p2_catalog()?.get(index)?;
    let g = entry.graph.blow_up(a)?;
    let s = summarize_with(&g, tol)?;
    let (n, m) = (g.n(), g.edge_count());
    let (case, premise_holds) = classify(entry, a, n, m, &s);
    let slack = s.s_minus - (n as f64 - 1.0);
    Ok(BlowUpCheck {
        index,
        multiplicities: a.to_vec(),
        n,
        m,
        min_degree: g.min_degree().unwrap_or(0),
        negative: s.inertia.negative,
        s_minus: s.s_minus,
        slack,
        b_value: s.b_value,
        case,
        premise_holds,
        improved_premise_holds: m as f64 + tol.compare * (m as f64).max(1.0) >= 2.0 * (n as f64 - 1.0) - s.b_value,
        asserted: case != CoverCase::Uncovered,
        holds: slack >= -tol.slack,
    })
}

/// Largest total multiplicity the sweep will enumerate.
pub const SWEEP_MAX_N: usize = 14;

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SweepReport {
    pub max_n: usize,
    /// Requested `max_n` exceeded [`SWEEP_MAX_N`]; only the capped range ran.
    pub partial: bool,
    /// Blow-ups with minimum degree at least 2.
    pub checked: usize,
    pub failures: Vec<BlowUpCheck>,
    pub min_slack: Option<f64>,
    pub argmin: Option<(usize, Vec<usize>)>,
    /// Blow-ups with minimum degree 1: recorded, not asserted.
    pub degree_one: usize,
    pub degree_one_below: usize,
    pub degree_one_min_slack: Option<f64>,
    /// Blow-ups whose negative count differs from 2.
    pub inertia_mismatches: usize,
    /// Blow-ups whose claimed case argument failed.
    pub case_failures: usize,
}

/// Positive vectors of length `k` with sum at most `max_sum`, in
/// lexicographic order.
pub fn compositions(k: usize, max_sum: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let reserve = k - cur.len() - 1;
        for x in 1..=left.saturating_sub(reserve) {
            cur.push(x);
            rec(k, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_sum >= k {
        rec(k, max_sum, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every blow-up of the catalog with at most `max_n` vertices: `s- >= n - 1`
/// is asserted when the minimum degree is at least 2 and recorded otherwise.
pub fn theorem_maintwoeigs_sweep(max_n: usize) -> Result<SweepReport> {
    sweep_with(max_n, &Tolerances::default())
}

pub fn sweep_with(max_n: usize, tol: &Tolerances) -> Result<SweepReport> {
    let catalog = p2_catalog()?;
    let capped = max_n.min(SWEEP_MAX_N);
    let work: Vec<(usize, Vec<usize>)> = catalog
        .entries
        .iter()
        .flat_map(|e| compositions(e.graph.n(), capped).into_iter().map(move |a| (e.index, a)))
        .collect();
    let results: Vec<BlowUpCheck> =
        work.par_iter().map(|(i, a)| verify_lemma_family_with(*i, a, tol)).collect::<Result<_>>()?;

    let mut report = SweepReport { max_n: capped, partial: max_n > SWEEP_MAX_N, ..Default::default() };
    for r in results {
        report.inertia_mismatches += usize::from(r.negative != 2);
        report.case_failures += usize::from(r.is_failure());
        if r.min_degree >= 2 {
            report.checked += 1;
            if report.min_slack.is_none_or(|m| r.slack < m) {
                report.min_slack = Some(r.slack);
                report.argmin = Some((r.index, r.multiplicities.clone()));
            }
            if !r.holds {
                report.failures.push(r);
            }
        } else {
            report.degree_one += 1;
            report.degree_one_below += usize::from(!r.holds);
            if report.degree_one_min_slack.is_none_or(|m| r.slack < m) {
                report.degree_one_min_slack = Some(r.slack);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::search::canon::is_isomorphic;
    use crate::spectral::summarize;

    fn catalog(i: usize) -> Graph {
        p2_catalog().unwrap().get(i).unwrap().graph.clone()
    }

    #[test]
    fn complete_bipartite_quotient() {
        let d = canonical_graph(&complete_bipartite(3, 4).unwrap());
        assert_eq!(d.quotient, complete(2).unwrap());
        assert_eq!(d.multiplicities, vec![3, 4]);
        assert_eq!(d.vertex_map, vec![0, 0, 0, 1, 1, 1, 1]);
    }

    #[test]
    fn twin_free_is_fixed() {
        for g in [petersen(), cycle(5).unwrap(), path(4).unwrap(), complete(5).unwrap()] {
            let d = canonical_graph(&g);
            assert_eq!(d.quotient, g);
            assert!(d.is_twin_free());
        }
    }

    #[test]
    fn blow_up_of_g3_round_trips() {
        let g3 = catalog(3);
        let g = g3.blow_up(&[2, 1, 1, 3]).unwrap().permuted(&[6, 0, 3, 5, 1, 2, 4]);
        let d = canonical_graph(&g);
        assert!(is_isomorphic(&d.quotient, &g3));
        assert_eq!(d.multiplicities.iter().sum::<usize>(), 7);
        let (index, a) = p2_catalog().unwrap().identify(&d.quotient, &d.multiplicities).unwrap();
        assert_eq!((index, a), (3, vec![2, 1, 1, 3]));
        assert!(is_isomorphic(&d.quotient.blow_up(&d.multiplicities).unwrap(), &g));
    }

    #[test]
    fn catalog_invariants() {
        let cat = p2_catalog().unwrap();
        let pendant: Vec<_> = cat.entries.iter().map(|e| e.pendant_neighbours.clone()).collect();
        assert_eq!(pendant[2], [2]);
        assert_eq!(pendant[6], [0, 1]);
        assert_eq!(pendant[7], [4]);
        assert!(pendant[4].is_empty() && pendant[5].is_empty() && pendant[8].is_empty());
        assert_eq!(cat.entries.len(), 9);
        let sizes: Vec<_> = cat.entries.iter().map(|e| (e.graph.n(), e.graph.edge_count())).collect();
        assert_eq!(sizes, [(3, 3), (4, 3), (4, 4), (5, 4), (5, 5), (5, 6), (5, 5), (6, 7), (6, 9)]);
        assert!(is_isomorphic(&catalog(1), &complete(3).unwrap()));
        assert!(is_isomorphic(&catalog(2), &path(4).unwrap()));
        assert!(is_isomorphic(&catalog(4), &path(5).unwrap()));
        assert!(is_isomorphic(&catalog(5), &cycle(5).unwrap()));
        for e in &cat.entries {
            for f in &cat.entries {
                assert_eq!(e.index == f.index, is_isomorphic(&e.graph, &f.graph));
            }
        }
        assert!(cat.get(0).is_err() && cat.get(10).is_err());
    }

    #[test]
    fn b_anchors() {
        let b = |i| summarize(&catalog(i)).unwrap().b_value;
        assert!((b(9) - 7.0).abs() < 1e-8);
        assert!(b(5) >= 5.0 - 1e-9);
        assert!(b(6) >= 2.0 - 1e-9);
        assert!(b(7) > 3.0);
        assert!(b(8) >= 2.0 - 1e-9);
        assert!(b(3) > 2.0);
    }

    #[test]
    fn case_examples() {
        let r = verify_lemma_family(5, &[1, 2, 2, 2, 2]).unwrap();
        assert_eq!(r.case, CoverCase::EdgeSurplus { b_lower: 5.0 });
        assert!(r.premise_holds && r.holds && !r.is_failure());
        assert!(r.b_value >= 5.0 - 1e-9);

        let r = verify_lemma_family(3, &[1, 1, 2, 1]).unwrap();
        assert_eq!(r.case, CoverCase::PendantNeighbours { b_lower: 2.0 });
        assert!(r.premise_holds && r.holds);

        let r = verify_lemma_family(9, &[1; 6]).unwrap();
        assert_eq!(r.n, 6);
        assert!(r.s_minus >= 5.0 - 1e-9);

        let r = verify_lemma_family(7, &[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(r.case, CoverCase::Uncovered);
        assert!(!r.asserted);

        let r = verify_lemma_family(8, &[2, 2, 2, 2, 2, 2]).unwrap();
        assert_eq!(r.case, CoverCase::AllMultiplicitiesAtLeastTwo);
        assert!(r.premise_holds && r.holds);
        assert!(verify_lemma_family(10, &[1]).is_err());
        assert!(verify_lemma_family(1, &[1, 0, 1]).is_err());
    }

    #[test]
    fn product_lower_bound() {
        for c in 1..=20usize {
            for d in 1..=20usize {
                assert!(c * d + 1 >= c + d);
            }
        }
    }

    #[test]
    fn compositions_count() {
        // Vectors of k positives with sum <= s: C(s, k).
        assert_eq!(compositions(3, 5).len(), 10);
        assert_eq!(compositions(6, 12).len(), 924);
        assert!(compositions(4, 3).is_empty());
        assert!(compositions(2, 4).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_sweep() {
        let r = theorem_maintwoeigs_sweep(9).unwrap();
        assert!(!r.partial);
        assert!(r.checked > 0 && r.degree_one > 0);
        assert!(r.failures.is_empty());
        assert_eq!(r.inertia_mismatches, 0);
        assert_eq!(r.case_failures, 0);
        assert!(theorem_maintwoeigs_sweep(15).unwrap().partial);
    }

    #[test]
    fn multipartite_predicates() {
        assert!(is_complete_multipartite(&complete_q_partite(&[1, 2, 3]).unwrap()));
        assert!(is_complete_multipartite(&complete(4).unwrap()));
        assert!(!is_complete_multipartite(&path(4).unwrap()));
        assert!(!is_complete_multipartite(&complete(1).unwrap()));
        assert!(is_complete_bipartite(&star(5).unwrap()));
        assert!(!is_complete_bipartite(&cycle(6).unwrap()));
        let tol = Tolerances::default();
        assert!(in_q(&complete_q_partite(&[2, 2, 3]).unwrap(), 1, &tol).unwrap());
        assert!(in_p(&complete_bipartite(2, 3).unwrap(), 1, &tol).unwrap());
        assert!(in_p(&catalog(9), 2, &tol).unwrap());
    }
}
