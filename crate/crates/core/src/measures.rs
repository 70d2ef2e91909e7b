//! Quantum-correlation measures: von Neumann entropy, Wootters concurrence,
//! and quantum discord with numerical minimization over rank-1 projective
//! measurements on subsystem A.
//!
//! All entropies are in bits (log base 2), which makes the Bell-state discord
//! exactly 1. Discord is computed as S(ρ_A) - S(ρ) + min_M S(ρ|M); the
//! minimization runs a 64×64 coarse grid over the Bloch angles followed by
//! simplex refinement from the three best grid points.

use crate::error::{Error, Result};
use crate::evolution::{evolve, EvolutionSpec};
use crate::linalg::{
    hermitian_eig, kron, matrix_function, partial_trace, pauli_y, ComplexMatrix, Subsystem,
};
use crate::optimize::nelder_mead_2d;
use crate::states::DensityMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Coarse-grid resolution per angle for the discord minimizer.
const GRID_POINTS: usize = 64;
/// Objective tolerance for the simplex refinement stage.
const REFINE_FTOL: f64 = 1e-10;
/// Evaluation budget per refinement start.
const REFINE_MAX_EVALS: usize = 500;
/// Refinement must not end above coarse minimum + this slack.
const OPTIMIZER_SOUNDNESS_TOL: f64 = 1e-9;
/// Eigenvalues below this are treated as exact zeros inside entropies.
const ENTROPY_EIG_FLOOR: f64 = 1e-12;
/// Measurement outcomes with probability below this contribute nothing.
const OUTCOME_PROB_FLOOR: f64 = 1e-14;

/// Rank-1 projective measurement on one qubit, parametrized by Bloch angles:
/// Π+ projects onto (cos(θ/2), e^{iφ} sin(θ/2)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis {
    theta: f64,
    phi: f64,
}

impl MeasurementBasis {
    /// Canonicalize arbitrary finite angles into θ ∈ [0, π], φ ∈ [0, 2π).
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::InvalidParams(format!(
                "measurement angles must be finite, got theta = {theta}, phi = {phi}"
            )));
        }
        // Map through the Bloch vector so equivalent angle pairs coincide.
        let (nx, ny, nz) = (theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos());
        let theta_c = nz.clamp(-1.0, 1.0).acos();
        let mut phi_c = ny.atan2(nx);
        if phi_c < 0.0 {
            phi_c += 2.0 * PI;
        }
        if phi_c >= 2.0 * PI {
            phi_c = 0.0;
        }
        Ok(Self {
            theta: theta_c,
            phi: phi_c,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The projector pair {Π+, Π-} on the measured qubit.
    pub fn projectors(&self) -> (ComplexMatrix, ComplexMatrix) {
        let (p_plus, _) = projectors_raw(self.theta, self.phi);
        let minus = &ComplexMatrix::identity(2) - &p_plus;
        (p_plus, minus)
    }
}

/// Projector onto (cos(θ/2), e^{iφ} sin(θ/2)) plus its complement, for raw
/// (not necessarily canonical) angles.
fn projectors_raw(theta: f64, phi: f64) -> (ComplexMatrix, ComplexMatrix) {
    let up = Complex64::new((theta / 2.0).cos(), 0.0);
    let down = Complex64::new(0.0, phi).exp() * (theta / 2.0).sin();
    let v = [up, down];
    let mut p = ComplexMatrix::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            p[(i, j)] = v[i] * v[j].conj();
        }
    }
    let minus = &ComplexMatrix::identity(2) - &p;
    (p, minus)
}

/// Full result of a discord evaluation.
#[derive(Debug, Clone)]
pub struct DiscordResult {
    /// Q(ρ) ≥ 0, in bits (clamped at zero against roundoff).
    pub discord: f64,
    /// C(ρ) = S(ρ_B) - min_M S(ρ|M), in bits.
    pub classical_correlation: f64,
    /// I(ρ) = S(ρ_A) + S(ρ_B) - S(ρ), in bits.
    pub mutual_information: f64,
    /// Basis achieving the conditional-entropy minimum.
    pub argmin_basis: MeasurementBasis,
    /// Total objective evaluations spent (grid + refinement).
    pub optimizer_evals: usize,
    /// Set when refinement failed to reach the coarse-grid minimum within
    /// tolerance; the coarse minimum is used in that case.
    pub optimizer_warning: bool,
}

/// Von Neumann entropy in bits: -Σ λ log2 λ with 0·log 0 = 0.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    entropy_of(rho.matrix())
}

fn entropy_of(m: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eig(m)?;
    Ok(entropy_of_eigenvalues(&eig.eigenvalues))
}

fn entropy_of_eigenvalues(eigs: &[f64]) -> f64 {
    eigs.iter()
        .map(|&lam| {
            if lam <= ENTROPY_EIG_FLOOR {
                0.0
            } else {
                -lam * lam.log2()
            }
        })
        .sum()
}

/// Wootters concurrence of a two-qubit state.
///
/// The spin-flipped matrix is ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y); the needed
/// eigenvalues of ρρ̃ are taken from the Hermitian similar matrix √ρ ρ̃ √ρ,
/// keeping the whole pipeline on the Hermitian solver.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::BadDimension {
            expected: 4,
            got: rho.dim(),
        });
    }
    let m = rho.matrix();
    let yy = kron(&pauli_y(), &pauli_y());
    let flipped = &(&yy * &m.conj()) * &yy;
    let sqrt_rho = matrix_function(m, |lam| Complex64::new(lam.max(0.0).sqrt(), 0.0))?;
    let similar = &(&sqrt_rho * &flipped) * &sqrt_rho;
    let eig = hermitian_eig(&similar)?;

    let mut lambdas = Vec::with_capacity(4);
    for &lam in &eig.eigenvalues {
        if lam < -1e-8 {
            return Err(Error::NegativeEigenvalue {
                value: lam,
                tolerance: 1e-8,
            });
        }
        lambdas.push(lam.max(0.0).sqrt());
    }
    lambdas.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// Average post-measurement entropy S(ρ|M) = Σ_i p_i S(ρ_B|i) for a projective
/// measurement {Π_i ⊗ I} on subsystem A.
pub fn conditional_entropy(rho: &DensityMatrix, basis: &MeasurementBasis) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::BadDimension {
            expected: 4,
            got: rho.dim(),
        });
    }
    conditional_entropy_raw(rho.matrix(), basis.theta, basis.phi)
}

fn conditional_entropy_raw(rho: &ComplexMatrix, theta: f64, phi: f64) -> Result<f64> {
    let (p_plus, p_minus) = projectors_raw(theta, phi);
    let mut total = 0.0;
    for proj in [&p_plus, &p_minus] {
        let m = kron(proj, &ComplexMatrix::identity(2));
        let post = &(&m * rho) * &m;
        let p = post.trace().re;
        if p < OUTCOME_PROB_FLOOR {
            continue;
        }
        let reduced = partial_trace(&post, Subsystem::B)?;
        let normalized = reduced.scale(Complex64::new(1.0 / p, 0.0));
        total += p * entropy_of(&normalized)?;
    }
    Ok(total)
}

/// Quantum discord via Q(ρ) = I(ρ) - C(ρ) = S(ρ_A) - S(ρ) + min_M S(ρ|M).
pub fn discord(rho: &DensityMatrix) -> Result<DiscordResult> {
    if rho.dim() != 4 {
        return Err(Error::BadDimension {
            expected: 4,
            got: rho.dim(),
        });
    }
    let m = rho.matrix();
    let s_joint = entropy_of(m)?;
    let s_a = entropy_of(&partial_trace(m, Subsystem::A)?)?;
    let s_b = entropy_of(&partial_trace(m, Subsystem::B)?)?;

    // Stage 1: coarse grid over θ ∈ [0, π] (inclusive), φ ∈ [0, 2π) (exclusive).
    let mut evals = 0usize;
    let mut samples: Vec<(f64, [f64; 2])> = Vec::with_capacity(GRID_POINTS * GRID_POINTS);
    for i in 0..GRID_POINTS {
        let theta = PI * i as f64 / (GRID_POINTS - 1) as f64;
        for j in 0..GRID_POINTS {
            let phi = 2.0 * PI * j as f64 / GRID_POINTS as f64;
            let value = conditional_entropy_raw(m, theta, phi)?;
            evals += 1;
            samples.push((value, [theta, phi]));
        }
    }
    samples.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite objective"));
    let coarse_min = samples[0].0;

    // Stage 2: simplex refinement from the three best grid points.
    let grid_step = PI / (GRID_POINTS - 1) as f64;
    let mut best_val = coarse_min;
    let mut best_angles = samples[0].1;
    for &(_, start) in samples.iter().take(3) {
        let result = nelder_mead_2d(
            |p| conditional_entropy_raw(m, p[0], p[1]).unwrap_or(f64::INFINITY),
            start,
            grid_step,
            REFINE_FTOL,
            REFINE_MAX_EVALS,
        );
        evals += result.evals;
        if result.fx < best_val {
            best_val = result.fx;
            best_angles = result.x;
        }
    }

    // Refinement failing to match the coarse stage signals a pathological
    // landscape; fall back to the coarse minimum and flag it.
    let optimizer_warning = best_val > coarse_min + OPTIMIZER_SOUNDNESS_TOL;
    if optimizer_warning {
        best_val = coarse_min;
        best_angles = samples[0].1;
    }

    let mutual_information = s_a + s_b - s_joint;
    let classical_correlation = s_b - best_val;
    let discord = (mutual_information - classical_correlation).max(0.0);

    Ok(DiscordResult {
        discord,
        classical_correlation,
        mutual_information,
        argmin_basis: MeasurementBasis::new(best_angles[0], best_angles[1])?,
        optimizer_evals: evals,
        optimizer_warning,
    })
}

/// Evolve, then measure both correlations: the quantity traced over time by
/// the sweep front end.
pub fn correlations_at(rho0: &DensityMatrix, spec: &EvolutionSpec) -> Result<(f64, DiscordResult)> {
    let evolved = evolve(rho0, spec)?;
    Ok((concurrence(&evolved)?, discord(&evolved)?))
}
