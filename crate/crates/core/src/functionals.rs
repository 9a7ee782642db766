//! Normalization, the kinetic-energy functional on both the grid and the
//! coefficient side, the Wirtinger ratio and margin, and the
//! position/momentum uncertainty quantities.
//!
//! Tolerance model: grid-side quantities (quadrature plus central
//! differencing) carry an O(h²) error and are checked against ε = C·h²;
//! coefficient-side identities are exact arithmetic and are checked with no
//! tolerance at all.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::quadrature;
use crate::spectral::{parseval_norm, project_exp, spectral_derivative};
use crate::wavefunction::{ExpCoefficients, SampledWaveFunction};

/// Calibrated constant of the grid-side error model ε_quad = C·h²/L⁴.
///
/// Measured against the analytic ground state, whose computed derivative
/// ratio dips below π²/L² by ≈ 32.34·h² at N = 1001 (32.40 at N = 2001,
/// asymptotically π⁴/3 ≈ 32.47). Recorded with ~10% headroom.
pub const WIRTINGER_QUAD_C: f64 = 36.0;

/// Maximum |∫|ψ|²dx − 1| accepted by the moment routines.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-6;

/// Grid-side tolerance C·h²/L⁴ (units 1/length²) for Wirtinger-ratio checks
/// on an N-point grid.
pub fn epsilon_quad(n_points: usize, params: &PhysicalParams) -> f64 {
    let steps = (n_points - 1) as f64;
    WIRTINGER_QUAD_C / (params.length() * params.length() * steps * steps)
}

/// ∫₀^L |ψ|² dx by composite quadrature.
pub fn norm_squared(psi: &SampledWaveFunction) -> f64 {
    let density: Vec<f64> = psi.values().iter().map(|v| v.norm_sqr()).collect();
    quadrature::integrate(&density, psi.grid().spacing())
}

/// E(ψ) = (ħ²/2m)·∫₀^L |ψ′|² dx with ψ′ by finite differences.
///
/// Needs N ≥ 5 so the one-sided endpoint stencils stay second order
/// alongside the interior.
pub fn energy_quadrature(psi: &SampledWaveFunction) -> Result<f64> {
    if psi.n_points() < 5 {
        return Err(Error::GridTooSmall {
            min: 5,
            got: psi.n_points(),
        });
    }
    let h = psi.grid().spacing();
    let derivative = quadrature::differentiate(psi.values(), h);
    let density: Vec<f64> = derivative.iter().map(|v| v.norm_sqr()).collect();
    let params = psi.params();
    Ok(params.hbar() * params.hbar() / (2.0 * params.mass()) * quadrature::integrate(&density, h))
}

/// Energy from exponential coefficients: (ħ²/4m)·Σ_k (πk/L)²|a_k|².
///
/// Built from the exact derivative relation and orthogonality, so there is
/// no quadrature error; the factor ¼ instead of ½ reflects the doubling of
/// the squared norm on the odd extension over [−L, L].
pub fn energy_spectral(coefficients: &ExpCoefficients) -> f64 {
    let params = coefficients.params();
    let derivative = spectral_derivative(coefficients);
    params.hbar() * params.hbar() / (4.0 * params.mass()) * parseval_norm(&derivative)
}

/// Scale-invariant energy: E(ψ)/∫|ψ|².
pub fn rayleigh_quotient(psi: &SampledWaveFunction) -> Result<f64> {
    let norm = norm_squared(psi);
    if norm == 0.0 {
        return Err(Error::DegenerateInput);
    }
    Ok(energy_quadrature(psi)? / norm)
}

/// ∫|ψ′|² / ∫|ψ|², bounded below by π²/L² up to the documented grid error.
pub fn wirtinger_ratio(psi: &SampledWaveFunction) -> Result<f64> {
    let params = psi.params();
    let quotient = rayleigh_quotient(psi)?;
    Ok(quotient * 2.0 * params.mass() / (params.hbar() * params.hbar()))
}

/// Σ_{k≠0} (k² − 1)|a_k|², exact arithmetic.
///
/// Nonnegative for every coefficient vector; zero exactly when the support
/// is contained in {−1, +1}.
pub fn wirtinger_margin(coefficients: &ExpCoefficients) -> f64 {
    coefficients
        .indexed()
        .filter(|(k, _)| *k != 0)
        .map(|(k, a)| ((k * k - 1) as f64) * a.norm_sqr())
        .sum()
}

/// ⟨x⟩ and Δx = √(⟨x²⟩ − ⟨x⟩²) of a normalized state.
pub fn position_moments(psi: &SampledWaveFunction) -> Result<(f64, f64)> {
    require_normalized(psi)?;
    let grid = psi.grid();
    let h = grid.spacing();
    let first: Vec<f64> = psi
        .values()
        .iter()
        .enumerate()
        .map(|(j, v)| grid.point(j) * v.norm_sqr())
        .collect();
    let second: Vec<f64> = psi
        .values()
        .iter()
        .enumerate()
        .map(|(j, v)| grid.point(j) * grid.point(j) * v.norm_sqr())
        .collect();
    let mean = quadrature::integrate(&first, h);
    let mean_sq = quadrature::integrate(&second, h);
    let variance = (mean_sq - mean * mean).max(0.0);
    Ok((mean, variance.sqrt()))
}

/// ⟨p⟩ and Δp of a normalized state, with p̂ = −iħ d/dx.
///
/// ⟨p⟩ = −iħ∫ψ̄ψ′ is real for admissible states; the residual imaginary
/// part is pure grid error and is checked in debug builds.
pub fn momentum_moments(psi: &SampledWaveFunction) -> Result<(f64, f64)> {
    require_normalized(psi)?;
    let params = psi.params();
    let h = psi.grid().spacing();
    let derivative = quadrature::differentiate(psi.values(), h);

    let current: Vec<Complex64> = psi
        .values()
        .iter()
        .zip(&derivative)
        .map(|(v, d)| v.conj() * d)
        .collect();
    let mean_complex = Complex64::new(0.0, -params.hbar()) * quadrature::integrate(&current, h);

    let density: Vec<f64> = derivative.iter().map(|d| d.norm_sqr()).collect();
    let second = params.hbar() * params.hbar() * quadrature::integrate(&density, h);

    debug_assert!(
        mean_complex.im.abs() <= 1e-3 * (1.0 + second.sqrt()),
        "⟨p⟩ acquired a non-trivial imaginary part: {}",
        mean_complex.im
    );
    let mean = mean_complex.re;
    let variance = (second - mean * mean).max(0.0);
    Ok((mean, variance.sqrt()))
}

fn require_normalized(psi: &SampledWaveFunction) -> Result<()> {
    let norm = norm_squared(psi);
    if (norm - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NotNormalized { norm_squared: norm });
    }
    Ok(())
}

/// Crude and exact lower bounds next to the measured uncertainty data of a
/// normalized state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// ħ²/(2mL²), the uncertainty-relation estimate with Δx ∼ L/2.
    pub heisenberg_bound: f64,
    /// ħ²π²/(2mL²), the exact lower bound.
    pub exact_bound: f64,
    pub delta_x: f64,
    pub delta_p: f64,
    /// Δx·Δp of the supplied state, ≥ ħ/2 up to grid error.
    pub uncertainty_product: f64,
    /// exact_bound / heisenberg_bound = π² independent of the parameters.
    pub bound_ratio: f64,
}

/// Assembles the crude bound, the exact bound and the measured moments of a
/// normalized state.
pub fn bounds_report(psi: &SampledWaveFunction) -> Result<BoundsReport> {
    let params = psi.params();
    let (_, delta_x) = position_moments(psi)?;
    let (_, delta_p) = momentum_moments(psi)?;
    let heisenberg_bound = params.energy_unit();
    let exact_bound = PI * PI * params.energy_unit();
    Ok(BoundsReport {
        heisenberg_bound,
        exact_bound,
        delta_x,
        delta_p,
        uncertainty_product: delta_x * delta_p,
        bound_ratio: exact_bound / heisenberg_bound,
    })
}

/// Every energy-related functional of one state, evaluated on both the grid
/// and the coefficient path.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub energy_quadrature: f64,
    pub energy_spectral: f64,
    pub norm: f64,
    pub rayleigh_quotient: f64,
    pub wirtinger_ratio: f64,
    pub wirtinger_margin: f64,
}

/// Runs the full grid + coefficient pipeline on one state.
///
/// The spectral quantities use the projection truncated at K modes of the
/// odd extension.
pub fn energy_report(psi: &SampledWaveFunction, truncation: usize) -> Result<EnergyReport> {
    let norm = norm_squared(psi);
    if norm == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let coefficients = project_exp(psi, truncation)?;
    Ok(EnergyReport {
        energy_quadrature: energy_quadrature(psi)?,
        energy_spectral: energy_spectral(&coefficients),
        norm,
        rayleigh_quotient: rayleigh_quotient(psi)?,
        wirtinger_ratio: wirtinger_ratio(psi)?,
        wirtinger_margin: wirtinger_margin(&coefficients),
    })
}
