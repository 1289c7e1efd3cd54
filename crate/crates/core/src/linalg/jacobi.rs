use crate::error::{Error, Result};

/// Sweeps stop once `off(A) < JACOBI_OFF_TOLERANCE * ||A||_F`.
pub const JACOBI_OFF_TOLERANCE: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Row-major `n x n`; column `k` is the unit eigenvector of `values[k]`.
    pub vectors: Vec<f64>,
    pub sweeps: usize,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        let n = self.values.len();
        (0..n).map(|i| self.vectors[i * n + k]).collect()
    }

    /// Largest `||A v_k - lambda_k v_k||_2` over all pairs.
    pub fn max_residual(&self, a: &[f64]) -> f64 {
        let n = self.values.len();
        (0..n)
            .map(|k| {
                let v = self.vector(k);
                (0..n)
                    .map(|i| {
                        let av: f64 = (0..n).map(|j| a[i * n + j] * v[j]).sum();
                        (av - self.values[k] * v[i]).powi(2)
                    })
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

/// Cyclic Jacobi rotations on a dense symmetric row-major matrix.
pub fn symmetric_eigen(matrix: &[f64], n: usize) -> Result<EigenDecomposition> {
    assert_eq!(matrix.len(), n * n, "matrix must be n x n");
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = JACOBI_OFF_TOLERANCE * frobenius;

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off == 0.0 || off < threshold {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::Numeric {
                message: format!("Jacobi did not converge (off-diagonal norm {off:.3e})"),
                iterations: sweeps,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col] = v[row * n + src];
        }
    }
    Ok(EigenDecomposition { values, vectors, sweeps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let e = symmetric_eigen(&[2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((e.values[0] - 3.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        assert!(e.max_residual(&[2.0, 1.0, 1.0, 2.0]) < 1e-14);
    }

    #[test]
    fn zero_and_empty_matrices() {
        let e = symmetric_eigen(&[0.0; 9], 3).unwrap();
        assert_eq!(e.values, vec![0.0; 3]);
        assert_eq!(e.sweeps, 0);
        assert!(symmetric_eigen(&[], 0).unwrap().values.is_empty());
    }

    #[test]
    fn equal_diagonal_rotation() {
        // theta = 0 exercises the 45-degree rotation branch.
        let a = [1.0, 4.0, 4.0, 1.0];
        let e = symmetric_eigen(&a, 2).unwrap();
        assert!((e.values[0] - 5.0).abs() < 1e-14);
        assert!((e.values[1] + 3.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let n = 6;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = ((i * 7 + j * 7 + i * j) % 5) as f64 - 2.0;
            }
        }
        let e = symmetric_eigen(&a, n).unwrap();
        for p in 0..n {
            for q in 0..n {
                let d: f64 = (0..n).map(|r| e.vectors[r * n + p] * e.vectors[r * n + q]).sum();
                let want = if p == q { 1.0 } else { 0.0 };
                assert!((d - want).abs() < 1e-12);
            }
        }
        assert!(e.max_residual(&a) < 1e-10);
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }
}
