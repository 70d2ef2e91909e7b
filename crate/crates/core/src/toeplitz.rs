//! Tridiagonal Toeplitz Hamiltonians H = a^n I + b^n S and their spectra.
//!
//! Two closed-form eigenvalue expressions are exposed: the standard textbook
//! result a^n + 2 b^n cos(jπ/(m+1)) and a literal alternative
//! b^n + 2 a^n √(b^n/a^n) cos(jπ/(m+1)) kept for diagnostics only — the two
//! coincide exactly when a = b and disagree otherwise, which
//! [`spectrum_discrepancy`] measures against direct diagonalization.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Generator of the Hamiltonian: main diagonal a^n, off-diagonals b^n,
/// dimension m (two-qubit work fixes m = 4).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToeplitzParams {
    pub a: f64,
    pub b: f64,
    pub n: f64,
    pub m: usize,
}

impl ToeplitzParams {
    pub fn new(a: f64, b: f64, n: f64, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParams(format!("dimension m = {m} must be >= 2")));
        }
        let p = Self { a, b, n, m };
        // a^n, b^n must be representable (negative base with fractional
        // exponent would store NaN).
        let (da, db) = (p.diag_value(), p.offdiag_value());
        if !da.is_finite() || !db.is_finite() {
            return Err(Error::InvalidParams(format!(
                "a^n = {da}, b^n = {db} must be finite (a = {a}, b = {b}, n = {n})"
            )));
        }
        Ok(p)
    }

    /// Two-qubit default dimension m = 4.
    pub fn two_qubit(a: f64, b: f64, n: f64) -> Result<Self> {
        Self::new(a, b, n, 4)
    }

    /// Main diagonal entry a^n.
    pub fn diag_value(&self) -> f64 {
        self.a.powf(self.n)
    }

    /// Off-diagonal entry b^n.
    pub fn offdiag_value(&self) -> f64 {
        self.b.powf(self.n)
    }

    fn require_positive_bases(&self) -> Result<()> {
        if self.a <= 0.0 || self.b <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "closed-form spectrum needs a > 0 and b > 0, got a = {}, b = {}",
                self.a, self.b
            )));
        }
        Ok(())
    }
}

/// Which eigenvalue expression produced a [`ToeplitzSpectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    ClosedFormStandard,
    ClosedFormAlternative,
    Numerical,
}

/// Eigenvalue form selector for [`closed_form_spectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumFormula {
    /// a^n + 2 b^n cos(jπ/(m+1)) — consistent with the matrix.
    Standard,
    /// b^n + 2 a^n √(b^n/a^n) cos(jπ/(m+1)) — diagnostic only.
    Alternative,
}

/// Spectrum of H with its provenance. Closed-form eigenvalues are listed in
/// natural index order j = 1..m (descending in value); the numerical source
/// lists them ascending as produced by the eigensolver.
#[derive(Debug, Clone)]
pub struct ToeplitzSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
    pub source: SpectrumSource,
}

impl ToeplitzSpectrum {
    pub fn sorted_eigenvalues(&self) -> Vec<f64> {
        let mut v = self.eigenvalues.clone();
        v.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
        v
    }
}

/// Build the m×m Hamiltonian: diag a^n, super/sub-diagonals b^n.
pub fn build_hamiltonian(p: &ToeplitzParams) -> Result<ComplexMatrix> {
    // Re-validate so stale structs can't smuggle NaN entries in.
    let p = ToeplitzParams::new(p.a, p.b, p.n, p.m)?;
    let diag = p.diag_value();
    let off = p.offdiag_value();
    let mut h = ComplexMatrix::zeros(p.m);
    for i in 0..p.m {
        h[(i, i)] = Complex64::new(diag, 0.0);
        if i + 1 < p.m {
            h[(i, i + 1)] = Complex64::new(off, 0.0);
            h[(i + 1, i)] = Complex64::new(off, 0.0);
        }
    }
    Ok(h)
}

/// Closed-form spectrum of H for positive bases.
///
/// Eigenvector k-th component of the j-th vector is sin(k j π/(m+1)),
/// normalized; these are exact for the standard formula and reused as-is for
/// the alternative form (which has no consistent eigenvectors).
pub fn closed_form_spectrum(p: &ToeplitzParams, formula: SpectrumFormula) -> Result<ToeplitzSpectrum> {
    p.require_positive_bases()?;
    let m = p.m;
    let diag = p.diag_value();
    let off = p.offdiag_value();
    let eigenvalues: Vec<f64> = (1..=m)
        .map(|j| {
            let cosine = (j as f64 * PI / (m as f64 + 1.0)).cos();
            match formula {
                SpectrumFormula::Standard => diag + 2.0 * off * cosine,
                SpectrumFormula::Alternative => off + 2.0 * diag * (off / diag).sqrt() * cosine,
            }
        })
        .collect();
    let mut eigenvectors = ComplexMatrix::zeros(m);
    for j in 1..=m {
        let mut col: Vec<f64> = (1..=m)
            .map(|k| (k as f64 * j as f64 * PI / (m as f64 + 1.0)).sin())
            .collect();
        let norm = col.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut col {
            *x /= norm;
        }
        for k in 0..m {
            eigenvectors[(k, j - 1)] = Complex64::new(col[k], 0.0);
        }
    }
    Ok(ToeplitzSpectrum {
        eigenvalues,
        eigenvectors,
        source: match formula {
            SpectrumFormula::Standard => SpectrumSource::ClosedFormStandard,
            SpectrumFormula::Alternative => SpectrumSource::ClosedFormAlternative,
        },
    })
}

/// Spectrum of H by direct diagonalization.
pub fn numerical_spectrum(p: &ToeplitzParams) -> Result<ToeplitzSpectrum> {
    let h = build_hamiltonian(p)?;
    let eig = hermitian_eig(&h)?;
    Ok(ToeplitzSpectrum {
        eigenvalues: eig.eigenvalues,
        eigenvectors: eig.eigenvectors,
        source: SpectrumSource::Numerical,
    })
}

/// Max absolute difference between the alternative closed-form eigenvalues and
/// the numerically computed ones, both sorted. Zero iff a = b.
pub fn spectrum_discrepancy(p: &ToeplitzParams) -> Result<f64> {
    let alt = closed_form_spectrum(p, SpectrumFormula::Alternative)?;
    let num = numerical_spectrum(p)?;
    let a = alt.sorted_eigenvalues();
    let b = num.sorted_eigenvalues();
    Ok(a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max))
}
