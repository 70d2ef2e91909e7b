//! Two-qubit initial states and the validated density-matrix type.
//!
//! Basis order is |00>, |01>, |10>, |11>; the first factor is subsystem A.
//! The singlet convention is |ψ-> = (|01> - |10>)/√2.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, partial_trace, ComplexMatrix, Subsystem};
use num_complex::Complex64;

/// Hermiticity / trace tolerance for accepting a density matrix.
pub const DENSITY_TOL: f64 = 1e-12;

/// Most negative eigenvalue tolerated as roundoff.
pub const PSD_TOL: f64 = 1e-10;

/// Defects of a candidate density matrix, as measured by [`validate_density`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityDiagnostics {
    pub hermiticity_defect: f64,
    pub trace_defect: f64,
    pub min_eigenvalue: f64,
}

impl DensityDiagnostics {
    pub fn is_valid(&self) -> bool {
        self.hermiticity_defect <= DENSITY_TOL
            && self.trace_defect <= DENSITY_TOL
            && self.min_eigenvalue >= -PSD_TOL
    }
}

/// Measure how far a matrix is from being a valid density matrix.
pub fn validate_density(m: &ComplexMatrix) -> Result<DensityDiagnostics> {
    let hermiticity_defect = m.hermiticity_defect();
    let trace_defect = (m.trace() - Complex64::new(1.0, 0.0)).norm();
    // Eigenvalues are only meaningful for (near-)Hermitian input; symmetrize
    // so badly non-Hermitian candidates still yield a defect report.
    let sym = ComplexMatrix::from_fn(m.dim(), |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let eig = hermitian_eig(&sym)?;
    Ok(DensityDiagnostics {
        hermiticity_defect,
        trace_defect,
        min_eigenvalue: eig.eigenvalues[0],
    })
}

/// A Hermitian, unit-trace, positive-semidefinite matrix with a provenance label.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    label: String,
}

impl DensityMatrix {
    /// Validate and wrap a candidate matrix.
    pub fn new(matrix: ComplexMatrix, label: impl Into<String>) -> Result<Self> {
        matrix.check_finite()?;
        let diag = validate_density(&matrix)?;
        if diag.hermiticity_defect > DENSITY_TOL {
            return Err(Error::NotHermitian {
                defect: diag.hermiticity_defect,
                tolerance: DENSITY_TOL,
            });
        }
        if diag.trace_defect > DENSITY_TOL {
            return Err(Error::InvalidParams(format!(
                "density matrix trace defect {:.3e} exceeds {:.1e}",
                diag.trace_defect, DENSITY_TOL
            )));
        }
        if diag.min_eigenvalue < -PSD_TOL {
            return Err(Error::NegativeEigenvalue {
                value: diag.min_eigenvalue,
                tolerance: PSD_TOL,
            });
        }
        Ok(Self {
            matrix,
            label: label.into(),
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(hermitian_eig(&self.matrix)?.eigenvalues)
    }

    /// Reduced state of one qubit (4×4 states only).
    pub fn reduce(&self, keep: Subsystem) -> Result<DensityMatrix> {
        let reduced = partial_trace(&self.matrix, keep)?;
        DensityMatrix::new(reduced, format!("{}|{:?}", self.label, keep))
    }

    pub fn diagnostics(&self) -> Result<DensityDiagnostics> {
        validate_density(&self.matrix)
    }
}

/// Mixing parameter γ ∈ [0, 1] shared by both state families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateParam {
    gamma: f64,
}

impl StateParam {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) || !gamma.is_finite() {
            return Err(Error::OutOfRange {
                name: "gamma",
                value: gamma,
                min: 0.0,
                max: 1.0,
            });
        }
        Ok(Self { gamma })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// δ = 1/3 for γ < 2/3, δ = γ/2 for γ ≥ 2/3. Read-only by design: callers
    /// cannot pick δ and γ inconsistently.
    pub fn delta(&self) -> f64 {
        if self.gamma < 2.0 / 3.0 {
            1.0 / 3.0
        } else {
            self.gamma / 2.0
        }
    }
}

/// Werner state: γ |ψ-><ψ-| + (1-γ) I/4.
///
/// Matrix form: diagonal {(1-γ)/4, (1+γ)/4, (1+γ)/4, (1-γ)/4} with -γ/2 on the
/// inner anti-diagonal entries (1,2) and (2,1).
pub fn werner_state(gamma: StateParam) -> DensityMatrix {
    let g = gamma.gamma();
    let mut m = ComplexMatrix::zeros(4);
    m[(0, 0)] = Complex64::new((1.0 - g) / 4.0, 0.0);
    m[(1, 1)] = Complex64::new((1.0 + g) / 4.0, 0.0);
    m[(2, 2)] = Complex64::new((1.0 + g) / 4.0, 0.0);
    m[(3, 3)] = Complex64::new((1.0 - g) / 4.0, 0.0);
    m[(1, 2)] = Complex64::new(-g / 2.0, 0.0);
    m[(2, 1)] = Complex64::new(-g / 2.0, 0.0);
    DensityMatrix::new(m, format!("werner(gamma={g})")).expect("Werner state is always valid")
}

/// Maximally entangled mixed state: diagonal {δ, 1-2δ, 0, δ} with γ/2 corners.
pub fn mems_state(gamma: StateParam) -> DensityMatrix {
    let g = gamma.gamma();
    let d = gamma.delta();
    let mut m = ComplexMatrix::zeros(4);
    m[(0, 0)] = Complex64::new(d, 0.0);
    m[(1, 1)] = Complex64::new(1.0 - 2.0 * d, 0.0);
    m[(3, 3)] = Complex64::new(d, 0.0);
    m[(0, 3)] = Complex64::new(g / 2.0, 0.0);
    m[(3, 0)] = Complex64::new(g / 2.0, 0.0);
    DensityMatrix::new(m, format!("mems(gamma={g})")).expect("MEMS is always valid")
}

/// Projector onto the singlet (|01> - |10>)/√2.
pub fn singlet_projector() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4);
    m[(1, 1)] = Complex64::new(0.5, 0.0);
    m[(2, 2)] = Complex64::new(0.5, 0.0);
    m[(1, 2)] = Complex64::new(-0.5, 0.0);
    m[(2, 1)] = Complex64::new(-0.5, 0.0);
    m
}
