//! Constructors for the standard graph families, with fixed labellings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn positive(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::domain(format!("{name} requires size >= {min}, got {value}")));
    }
    Ok(())
}

/// `K_n` on `0..n`.
pub fn complete(n: usize) -> Result<Graph> {
    positive("complete", n, 1)?;
    complete_q_partite(&vec![1; n])
}

/// `C_n`: edges `i ~ i+1 mod n`.
pub fn cycle(n: usize) -> Result<Graph> {
    positive("cycle", n, 3)?;
    circulant(n, &[1])
}

/// `P_n`: edges `i ~ i+1`.
pub fn path(n: usize) -> Result<Graph> {
    positive("path", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    positive("star", n, 1)?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_q_partite(&[a, b])
}

/// Complete multipartite graph; part `i` is a contiguous block in order.
pub fn complete_q_partite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::domain("complete q-partite graph needs at least one part"));
    }
    if let Some(i) = parts.iter().position(|&p| p == 0) {
        return Err(Error::domain(format!("part {i} is empty")));
    }
    let n: usize = parts.iter().sum();
    let mut edges = Vec::new();
    let mut starts = Vec::new();
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    for (i, (&si, &pi)) in starts.iter().zip(parts).enumerate() {
        for (&sj, &pj) in starts.iter().zip(parts).skip(i + 1) {
            for u in si..si + pi {
                for v in sj..sj + pj {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Two copies of `K_k` on `0..k` and `k..2k`, joined by the bridge `(k-1, k)`.
pub fn barbell(k: usize) -> Result<Graph> {
    positive("barbell", k, 3)?;
    let clique = complete(k)?;
    let mut edges: Vec<_> = clique.edges().collect();
    edges.extend(clique.edges().map(|(u, v)| (u + k, v + k)));
    edges.push((k - 1, k));
    Graph::from_edges(2 * k, &edges)
}

/// Closed-form barbell spectrum: the roots of
/// `x^2 + (1-k)x - 1` and `x^2 + (3-k)x + 3 - 2k`, plus `-1` with
/// multiplicity `2k - 4`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BarbellPrediction {
    pub k: usize,
    /// Descending, length `2k`.
    pub eigenvalues: Vec<f64>,
}

impl BarbellPrediction {
    /// The four simple roots, in the order `(k-1 -/+ r1)/2, (k-3 -/+ r2)/2`.
    pub fn explicit_roots(k: usize) -> [f64; 4] {
        let kf = k as f64;
        let r1 = (5.0 - 2.0 * kf + kf * kf).sqrt();
        let r2 = (-3.0 + 2.0 * kf + kf * kf).sqrt();
        [0.5 * (kf - 1.0 - r1), 0.5 * (kf - 1.0 + r1), 0.5 * (kf - 3.0 - r2), 0.5 * (kf - 3.0 + r2)]
    }

    /// `(k - 3 - sqrt(k^2 + 2k - 3))^2`, the term bounding `s-` from below.
    pub fn lower_term(k: usize) -> f64 {
        let kf = k as f64;
        (kf - 3.0 - (kf * kf + 2.0 * kf - 3.0).sqrt()).powi(2)
    }

    pub fn s_minus(&self) -> f64 {
        self.eigenvalues.iter().filter(|&&x| x < 0.0).map(|x| x * x).sum()
    }

    pub fn s_plus(&self) -> f64 {
        self.eigenvalues.iter().filter(|&&x| x > 0.0).map(|x| x * x).sum()
    }

    /// Largest elementwise gap to a descending spectrum of the same length.
    pub fn max_deviation(&self, spectrum: &[f64]) -> f64 {
        assert_eq!(spectrum.len(), self.eigenvalues.len(), "spectrum length");
        self.eigenvalues.iter().zip(spectrum).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

pub fn barbell_predicted_spectrum(k: usize) -> Result<BarbellPrediction> {
    positive("barbell", k, 3)?;
    let mut eigenvalues: Vec<f64> = BarbellPrediction::explicit_roots(k).to_vec();
    eigenvalues.extend(std::iter::repeat_n(-1.0, 2 * k - 4));
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    Ok(BarbellPrediction { k, eigenvalues })
}

/// `g1` on `0..n1`, `g2` shifted to `n1..n1+n2`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.n();
    let mut edges: Vec<_> = g1.edges().collect();
    edges.extend(g2.edges().map(|(u, v)| (u + n1, v + n1)));
    Graph::from_edges(n1 + g2.n(), &edges)
}

/// Circulant graph: `i ~ i +/- s mod n` for each offset `s` in `1..=n/2`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    positive("circulant", n, 1)?;
    if let Some(&s) = offsets.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(Error::domain(format!("circulant offset {s} outside 1..={}", n / 2)));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in offsets {
            edges.push((i, (i + s) % n));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let es: Vec<(usize, usize)> = g.edges().collect();
    if es.len() > MAX_VERTICES {
        return Err(Error::domain(format!("line graph would have {} vertices", es.len())));
    }
    let mut edges = Vec::new();
    for (i, &(a, b)) in es.iter().enumerate() {
        for (j, &(c, d)) in es.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(es.len(), &edges)
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("static edge list")
}
