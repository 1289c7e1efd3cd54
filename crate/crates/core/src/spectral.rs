//! Adjacency spectrum, inertia and the derived sums `s+`, `s-`, energy and
//! the pairwise-product quantity `B`.
//!
//! The zero eigenvalue count is taken from the exact integer rank of the 0/1
//! adjacency matrix, so sign counts never depend on a floating threshold: the
//! `n - rank` eigenvalues of smallest magnitude are declared zero and the rest
//! are split by sign.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{integer_rank, symmetric_eigen, EigenDecomposition};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub n: usize,
    pub m: usize,
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub inertia: Inertia,
    pub s_plus: f64,
    pub s_minus: f64,
    pub energy: f64,
    /// `|mu_n|`.
    pub tau: f64,
    /// Sum of the positive eigenvalues (`PO`).
    pub positive_sum: f64,
    /// Absolute sum of the negative eigenvalues (`|NE|`).
    pub negative_sum: f64,
    pub b_value: f64,
}

impl SpectralSummary {
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn min_s(&self) -> f64 {
        self.s_plus.min(self.s_minus)
    }

    pub fn max_s(&self) -> f64 {
        self.s_plus.max(self.s_minus)
    }

    /// Nonzero eigenvalues after removal of the exact zero block, descending.
    pub fn positive_eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[..self.inertia.positive]
    }

    /// Negative eigenvalues ordered `lambda_{p+1} >= ... >= lambda_{p+q}`.
    pub fn negative_eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[self.eigenvalues.len() - self.inertia.negative..]
    }
}

pub fn eigen_decomposition(g: &Graph) -> Result<EigenDecomposition> {
    symmetric_eigen(&g.adjacency_f64(), g.n())
}

/// Adjacency eigenvalues, descending.
pub fn eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    Ok(eigen_decomposition(g)?.values)
}

/// Exact rank of the adjacency matrix.
pub fn adjacency_rank(g: &Graph) -> usize {
    let n = g.n();
    let rows: Vec<Vec<i64>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v) as i64).collect()).collect();
    integer_rank(&rows)
}

/// Returns the index set (into `values`) of the `zero` smallest-magnitude
/// entries, after checking they are numerically zero.
fn zero_block(values: &[f64], zero: usize, tol: &Tolerances) -> Result<Vec<bool>> {
    let mut by_magnitude: Vec<usize> = (0..values.len()).collect();
    by_magnitude.sort_by(|&i, &j| values[i].abs().total_cmp(&values[j].abs()).then(i.cmp(&j)));
    let scale = values.first().map_or(1.0, |v| v.abs().max(1.0));
    let mut is_zero = vec![false; values.len()];
    for &i in &by_magnitude[..zero] {
        if values[i].abs() > tol.zero_block * scale {
            return Err(Error::Numeric {
                message: format!(
                    "exact rank puts {zero} eigenvalues at zero but |{:.3e}| exceeds the zero band",
                    values[i]
                ),
                iterations: 0,
            });
        }
        is_zero[i] = true;
    }
    Ok(is_zero)
}

fn split_by_sign(g: &Graph, values: &[f64], tol: &Tolerances) -> Result<(Inertia, Vec<bool>)> {
    let zero = g.n() - adjacency_rank(g);
    let is_zero = zero_block(values, zero, tol)?;
    let positive = values.iter().zip(&is_zero).filter(|(v, z)| !**z && **v > 0.0).count();
    let negative = g.n() - zero - positive;
    Ok((Inertia { positive, negative, zero }, is_zero))
}

pub fn inertia(g: &Graph) -> Result<Inertia> {
    inertia_with(g, &Tolerances::default())
}

pub fn inertia_with(g: &Graph, tol: &Tolerances) -> Result<Inertia> {
    let values = eigenvalues(g)?;
    Ok(split_by_sign(g, &values, tol)?.0)
}

fn pairwise_sum(values: &[f64]) -> f64 {
    let mut s = 0.0;
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i + 1..] {
            s += a * b;
        }
    }
    s
}

/// `B = sum_{i<j<=p} l_i l_j + sum_{i<j<=q} l_{p+i} l_{p+j}` over the nonzero
/// eigenvalues.
pub fn b_value(summary: &SpectralSummary) -> f64 {
    pairwise_sum(summary.positive_eigenvalues()) + pairwise_sum(summary.negative_eigenvalues())
}

pub fn summarize(g: &Graph) -> Result<SpectralSummary> {
    summarize_with(g, &Tolerances::default())
}

pub fn summarize_with(g: &Graph, tol: &Tolerances) -> Result<SpectralSummary> {
    let mut values = eigenvalues(g)?;
    let (inertia, is_zero) = split_by_sign(g, &values, tol)?;
    // The zero block is reported as exact zeros so that the positive and
    // negative eigenvalues occupy the head and tail of the vector.
    for (v, &z) in values.iter_mut().zip(&is_zero) {
        if z {
            *v = 0.0;
        }
    }
    values.sort_by(|a, b| b.total_cmp(a));

    let n = g.n();
    let pos = &values[..inertia.positive];
    let neg = &values[n - inertia.negative..];
    let s_plus = pos.iter().map(|x| x * x).sum();
    let s_minus = neg.iter().map(|x| x * x).sum();
    let positive_sum: f64 = pos.iter().sum();
    let negative_sum: f64 = -neg.iter().sum::<f64>();
    let mut summary = SpectralSummary {
        n,
        m: g.edge_count(),
        tau: values.last().map_or(0.0, |v| v.abs()),
        eigenvalues: values,
        inertia,
        s_plus,
        s_minus,
        energy: positive_sum + negative_sum,
        positive_sum,
        negative_sum,
        b_value: 0.0,
    };
    summary.b_value = b_value(&summary);
    Ok(summary)
}
