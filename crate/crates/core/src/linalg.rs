//! Dense complex linear algebra for small matrices.
//!
//! Everything here is written for the ≤ 64×64 matrices this crate works with:
//! a row-major [`ComplexMatrix`], a cyclic-Jacobi Hermitian eigensolver with
//! high relative accuracy, spectral matrix functions, the Kronecker product,
//! and the partial trace over one qubit of a two-qubit state.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

/// Absolute tolerance on max |A - A^dag| accepted by [`hermitian_eig`].
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Maximum number of cyclic Jacobi sweeps before giving up.
pub const JACOBI_SWEEP_BUDGET: usize = 100;

/// Dense square complex matrix, row-major storage.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be >= 1");
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    /// Identity matrix of dimension `dim`.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build a matrix from a generator over (row, col).
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from nested rows of real entries.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParams(format!(
                "from_real_rows needs a nonempty square layout, got {dim} rows"
            )));
        }
        let m = Self::from_fn(dim, |i, j| Complex64::new(rows[i][j], 0.0));
        m.check_finite()?;
        Ok(m)
    }

    /// Build from nested rows of complex entries.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParams(format!(
                "from_rows needs a nonempty square layout, got {dim} rows"
            )));
        }
        let m = Self::from_fn(dim, |i, j| rows[i][j]);
        m.check_finite()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All stored entries must be finite.
    pub fn check_finite(&self) -> Result<()> {
        for z in &self.data {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::InvalidParams(format!("non-finite matrix entry {z}")));
            }
        }
        Ok(())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(i, j)].conj())
    }

    /// Plain transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Scale by a complex factor.
    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_fn(self.dim, |i, j| self[(i, j)] * factor)
    }

    /// Largest entry magnitude (max "norm").
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise difference |self - other|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "max_abs_diff: dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max |A - A^dag| over all entries.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Apply the matrix to a vector.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "mul_vec: dimension mismatch");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|k| self[(i, k)] * v[k]).sum())
            .collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product: dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix sum: dimension mismatch");
        ComplexMatrix::from_fn(self.dim, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix difference: dimension mismatch");
        ComplexMatrix::from_fn(self.dim, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigendecomposition of a Hermitian matrix: real ascending eigenvalues paired
/// with orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermitianEigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigenDecomposition {
    /// Reconstruct V diag(lambda) V^dag.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = v.dim();
        let scaled = ComplexMatrix::from_fn(n, |i, j| v[(i, j)] * self.eigenvalues[j]);
        &scaled * &v.adjoint()
    }
}

/// Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is checked against [`HERMITICITY_TOL`] and symmetrized as
/// (A + A^dag)/2 before iteration. Each rotation annihilates one off-diagonal
/// entry with a complex plane rotation; diagonal entries are updated by the
/// rank-one shift ±t·|a_pq|, which keeps structurally exact eigenvalues exact
/// (e.g. the zero rows of rank-deficient states stay at exactly zero).
///
/// Errors with [`Error::NoConvergence`] after [`JACOBI_SWEEP_BUDGET`] sweeps.
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<HermitianEigenDecomposition> {
    let defect = a.hermiticity_defect();
    if defect > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            defect,
            tolerance: HERMITICITY_TOL,
        });
    }
    a.check_finite()?;
    let n = a.dim();

    // Symmetrize to suppress roundoff drift in the upper/lower halves.
    let mut m = ComplexMatrix::from_fn(n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);

    if n == 1 {
        return Ok(HermitianEigenDecomposition {
            eigenvalues: vec![m[(0, 0)].re],
            eigenvectors: v,
        });
    }

    let threshold = 1e-14 * m.max_abs().max(1.0);
    let mut converged = false;
    let mut off = 0.0;
    for _sweep in 0..JACOBI_SWEEP_BUDGET {
        off = 0.0f64;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off = off.max(m[(p, q)].norm());
            }
        }
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q, threshold);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: JACOBI_SWEEP_BUDGET,
            off_diagonal: off,
        });
    }

    // Sort ascending, permuting eigenvector columns in step.
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);

    Ok(HermitianEigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// One complex Jacobi rotation annihilating m[(p, q)].
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, threshold: f64) {
    let beta = m[(p, q)];
    let ab = beta.norm();
    if ab <= threshold {
        return;
    }
    // Phase of the pivot entry; the rotation is real apart from this phase.
    let w = beta / ab;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (2.0 * ab);
    let t = if tau == 0.0 {
        1.0
    } else {
        -tau.signum() / (tau.abs() + (tau * tau + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = m.dim();
    // Pivot entries get exact updates; everything else a plane rotation.
    m[(p, p)] = Complex64::new(app + t * ab, 0.0);
    m[(q, q)] = Complex64::new(aqq - t * ab, 0.0);
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    let sw_conj = w.conj() * s;
    let sw = w * s;
    for j in 0..n {
        if j == p || j == q {
            continue;
        }
        let mjp = m[(j, p)];
        let mjq = m[(j, q)];
        m[(j, p)] = mjp * c + mjq * sw_conj;
        m[(j, q)] = mjp * (-sw) + mjq * c;
        m[(p, j)] = m[(j, p)].conj();
        m[(q, j)] = m[(j, q)].conj();
    }
    for j in 0..n {
        let vjp = v[(j, p)];
        let vjq = v[(j, q)];
        v[(j, p)] = vjp * c + vjq * sw_conj;
        v[(j, q)] = vjp * (-sw) + vjq * c;
    }
}

/// Spectral function of a Hermitian matrix: V diag(f(lambda)) V^dag.
pub fn matrix_function(
    a: &ComplexMatrix,
    f: impl Fn(f64) -> Complex64,
) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(a)?;
    let v = &eig.eigenvectors;
    let n = v.dim();
    let scaled = ComplexMatrix::from_fn(n, |i, j| v[(i, j)] * f(eig.eigenvalues[j]));
    Ok(&scaled * &v.adjoint())
}

/// Kronecker product A ⊗ B.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.dim(), b.dim());
    ComplexMatrix::from_fn(na * nb, |i, j| {
        a[(i / nb, j / nb)] * b[(i % nb, j % nb)]
    })
}

/// Which qubit of a 2⊗2 system to keep in a partial trace.
///
/// Basis order is |00>, |01>, |10>, |11> with the first factor = subsystem A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Partial trace of a 4×4 two-qubit operator down to the kept qubit.
pub fn partial_trace(m: &ComplexMatrix, keep: Subsystem) -> Result<ComplexMatrix> {
    if m.dim() != 4 {
        return Err(Error::BadDimension {
            expected: 4,
            got: m.dim(),
        });
    }
    let idx = |ia: usize, ib: usize| 2 * ia + ib;
    Ok(match keep {
        Subsystem::A => ComplexMatrix::from_fn(2, |i, j| {
            (0..2).map(|k| m[(idx(i, k), idx(j, k))]).sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(2, |i, j| {
            (0..2).map(|k| m[(idx(k, i), idx(k, j))]).sum()
        }),
    })
}

/// Pauli Y.
pub fn pauli_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = Complex64::new(0.0, -1.0);
    m[(1, 0)] = Complex64::new(0.0, 1.0);
    m
}
