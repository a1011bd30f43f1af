//! Symmetric eigenvalues by cyclic Jacobi rotations, and tolerant clustering
//! of spectra into (value, multiplicity) pairs.

use serde::Serialize;

use crate::algebra::CdElement;
use crate::error::{Error, Result};
use crate::operators::{n_operator_matrix, DenseMatrix, SymMatrix};

pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm target relative to `‖A‖_F`.
pub const DEFAULT_JACOBI_TOL: f64 = 1e-12;

/// Relative single-linkage threshold for grouping eigenvalues.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-7;

#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `j` is the eigenvector of `eigenvalues[j]`.
    pub eigenvectors: DenseMatrix,
    /// `max_j ‖A v_j − λ_j v_j‖`.
    pub residual: f64,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi: sweeps over all `(p, q)` pairs, annihilating `a_pq` with a
/// plane rotation, until the off-diagonal Frobenius norm is at most
/// `tol·‖A‖_F`. Fails after [`MAX_SWEEPS`] sweeps.
pub fn jacobi_eigen(matrix: &SymMatrix, tol: f64) -> Result<Spectrum> {
    if tol <= 0.0 {
        return Err(Error::input("eigensolver tolerance must be positive"));
    }
    let n = matrix.dim();
    let original = matrix.as_dense();
    let mut a = original.entries().to_vec();
    let mut v = DenseMatrix::identity(n)?.entries().to_vec();
    let target = tol * original.frobenius();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // A ← A J
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                // A ← Jᵀ A
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
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let columns: Vec<Vec<f64>> = order.iter().map(|&j| (0..n).map(|i| v[i * n + j]).collect()).collect();
    let eigenvectors = DenseMatrix::from_columns(&columns)?;

    let residual = columns
        .iter()
        .zip(&eigenvalues)
        .map(|(col, lambda)| {
            let av = original.apply(col);
            av.iter().zip(col).map(|(x, y)| (x - lambda * y).powi(2)).sum::<f64>().sqrt()
        })
        .fold(0.0, f64::max);

    Ok(Spectrum { eigenvalues, eigenvectors, residual, sweeps })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues grouped into clusters by single linkage on the sorted sequence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumMultiset {
    pub clusters: Vec<Cluster>,
    /// Relative tolerance the clusters were built with.
    pub cluster_tol: f64,
    /// Absolute linkage threshold: `cluster_tol · scale`.
    pub threshold: f64,
}

impl SpectrumMultiset {
    /// Neighbouring sorted values whose gap is at most `cluster_tol·scale` share a
    /// cluster; a cluster's value is the mean of its members.
    pub fn from_values(values: &[f64], cluster_tol: f64, scale: f64) -> Result<Self> {
        if cluster_tol <= 0.0 {
            return Err(Error::input("cluster tolerance must be positive"));
        }
        let threshold = cluster_tol * scale;
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mut groups: Vec<Vec<f64>> = Vec::new();
        for v in sorted {
            match groups.last_mut() {
                Some(g) if v - g[g.len() - 1] <= threshold => g.push(v),
                _ => groups.push(vec![v]),
            }
        }
        let clusters = groups
            .iter()
            .map(|g| Cluster { value: g.iter().sum::<f64>() / g.len() as f64, multiplicity: g.len() })
            .collect();
        Ok(Self { clusters, cluster_tol, threshold })
    }

    pub fn total_multiplicity(&self) -> usize {
        self.clusters.iter().map(|c| c.multiplicity).sum()
    }

    pub fn values(&self) -> Vec<f64> {
        self.clusters.iter().map(|c| c.value).collect()
    }

    /// Clusters whose value is not below `−threshold` (the zero cluster included).
    pub fn nonnegative(&self) -> Vec<Cluster> {
        self.clusters.iter().copied().filter(|c| c.value >= -self.threshold).collect()
    }

    /// Largest value magnitude, at least 1.
    pub fn scale(&self) -> f64 {
        1.0 + self.clusters.iter().fold(0.0_f64, |m, c| m.max(c.value.abs()))
    }

    /// Whether every positive cluster `(v, m)` has a partner `(−v, m)` within
    /// `tol`; also returns the largest pairing distance found.
    pub fn negation_symmetry(&self, tol: f64) -> (bool, f64) {
        let mut symmetric = true;
        let mut worst: f64 = 0.0;
        for c in &self.clusters {
            if c.value.abs() <= self.threshold {
                continue;
            }
            let partner = self
                .clusters
                .iter()
                .map(|d| ((d.value + c.value).abs(), d.multiplicity))
                .min_by(|a, b| a.0.total_cmp(&b.0));
            match partner {
                Some((dist, m)) => {
                    worst = worst.max(dist);
                    if dist > tol || m != c.multiplicity {
                        symmetric = false;
                    }
                }
                None => symmetric = false,
            }
        }
        (symmetric, worst)
    }
}

/// Eigenvalues of `N_x − ‖x‖²`, clustered with threshold `cluster_tol·(1 + ‖x‖²)²`.
pub fn shifted_spectrum(x: &CdElement, cluster_tol: f64) -> Result<SpectrumMultiset> {
    let (multiset, _) = shifted_spectrum_detailed(x, cluster_tol)?;
    Ok(multiset)
}

/// [`shifted_spectrum`] together with the raw eigen-decomposition of `N_x`.
pub fn shifted_spectrum_detailed(x: &CdElement, cluster_tol: f64) -> Result<(SpectrumMultiset, Spectrum)> {
    let n = n_operator_matrix(x)?;
    let spectrum = jacobi_eigen(&n, DEFAULT_JACOBI_TOL)?;
    let norm_sq = x.norm_sq();
    let shifted: Vec<f64> = spectrum.eigenvalues.iter().map(|l| l - norm_sq).collect();
    let multiset = SpectrumMultiset::from_values(&shifted, cluster_tol, (1.0 + norm_sq).powi(2))?;
    Ok((multiset, spectrum))
}

/// Value-only inclusion: every cluster of `a` lies within `tol·scale` of some
/// cluster of `b`, where `scale` is the larger of the two spectra's scales.
/// Multiplicities are not required to nest.
pub fn multiset_subset(a: &SpectrumMultiset, b: &SpectrumMultiset, tol: f64) -> bool {
    let reach = tol * a.scale().max(b.scale());
    a.clusters.iter().all(|ca| b.clusters.iter().any(|cb| (ca.value - cb.value).abs() <= reach))
}
