//! Left/right multiplication and `N_x = L_x̄ L_x` as dense matrices.

use serde::Serialize;

use crate::algebra::{mul_into, CdElement};
use crate::error::{Error, Result};

/// Largest supported matrix dimension (𝔸₈).
pub const MAX_DIM: usize = 256;

/// Square row-major matrix whose dimension is a power of two.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn new(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if !dim.is_power_of_two() || dim > MAX_DIM {
            return Err(Error::input(format!("matrix dimension {dim} is not a power of two ≤ {MAX_DIM}")));
        }
        if entries.len() != dim * dim {
            return Err(Error::input(format!("expected {} entries, got {}", dim * dim, entries.len())));
        }
        Ok(Self { dim, entries })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(dim, vec![0.0; dim * dim])
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.entries[i * dim + i] = 1.0;
        }
        Ok(m)
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<f64>]) -> Result<Self> {
        let dim = columns.len();
        let mut entries = vec![0.0; dim * dim];
        for (j, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::input("ragged columns"));
            }
            for (i, v) in col.iter().enumerate() {
                entries[i * dim + j] = *v;
            }
        }
        Self::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, col)).collect()
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim);
        self.entries.chunks_exact(self.dim).map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.dim != other.dim {
            return Err(Error::input("dimension mismatch"));
        }
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            let out_row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let b_row = &other.entries[k * n..(k + 1) * n];
                out_row.iter_mut().zip(b_row).for_each(|(o, b)| *o += a * b);
            }
        }
        DenseMatrix::new(n, out)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.entries[i * n + j];
            }
        }
        DenseMatrix { dim: n, entries: out }
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_asymmetry(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }
}

/// Symmetric matrix. Construction checks the asymmetry bound
/// `max|A_ij − A_ji| ≤ 1e−10·(1 + max|A|)` and then symmetrizes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymMatrix {
    matrix: DenseMatrix,
    asymmetry: f64,
}

pub const ASYMMETRY_TOL: f64 = 1e-10;

impl SymMatrix {
    pub fn from_dense(matrix: DenseMatrix) -> Result<Self> {
        let asymmetry = matrix.max_asymmetry();
        let bound = ASYMMETRY_TOL * (1.0 + matrix.max_abs());
        if asymmetry > bound {
            return Err(Error::Consistency(format!("asymmetry {asymmetry:e} exceeds bound {bound:e}")));
        }
        let n = matrix.dim;
        let mut entries = matrix.entries;
        for i in 0..n {
            for j in i + 1..n {
                let avg = 0.5 * (entries[i * n + j] + entries[j * n + i]);
                entries[i * n + j] = avg;
                entries[j * n + i] = avg;
            }
        }
        Ok(Self { matrix: DenseMatrix { dim: n, entries }, asymmetry })
    }

    /// Asymmetry measured before symmetrizing.
    pub fn asymmetry(&self) -> f64 {
        self.asymmetry
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.matrix.get(row, col)
    }

    pub fn as_dense(&self) -> &DenseMatrix {
        &self.matrix
    }
}

fn mult_matrix(x: &CdElement, left: bool) -> DenseMatrix {
    let n = x.dim();
    let mut basis = vec![0.0; n];
    let mut col = vec![0.0; n];
    let mut entries = vec![0.0; n * n];
    for j in 0..n {
        basis[j] = 1.0;
        if left {
            mul_into(x.coords(), &basis, &mut col);
        } else {
            mul_into(&basis, x.coords(), &mut col);
        }
        basis[j] = 0.0;
        for (i, v) in col.iter().enumerate() {
            entries[i * n + j] = *v;
        }
    }
    DenseMatrix { dim: n, entries }
}

/// Matrix of `y ↦ xy`; column `j` holds `x·e_j`.
pub fn left_mult_matrix(x: &CdElement) -> DenseMatrix {
    mult_matrix(x, true)
}

/// Matrix of `y ↦ yx`; column `j` holds `e_j·x`.
pub fn right_mult_matrix(x: &CdElement) -> DenseMatrix {
    mult_matrix(x, false)
}

/// `N_x = L_x̄ L_x`. It is symmetric because `⟨y, x̄(xz)⟩ = ⟨xy, xz⟩`; a
/// violated asymmetry bound means the multiplication is wrong.
pub fn n_operator_matrix(x: &CdElement) -> Result<SymMatrix> {
    let product = left_mult_matrix(&x.conjugate()).matmul(&left_mult_matrix(x))?;
    SymMatrix::from_dense(product)
}
