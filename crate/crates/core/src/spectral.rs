//! Odd extension and the transforms between grid samples, the real sine
//! basis and the exponential Fourier basis on [−L, L].
//!
//! Everything that can be computed exactly in coefficient space (the
//! derivative relation, Parseval sums, the sine ↔ exponential mapping) is
//! exact; only grid ↔ coefficient conversions carry quadrature error.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::quadrature;
use crate::wavefunction::{ExpCoefficients, SampledWaveFunction, SineSeries};

/// Antisymmetric continuation of a sampled state to [−L, L].
///
/// Holds 2N−1 samples at x_j = −L + j·h with the original spacing h, so the
/// restriction to [0, L] reproduces the input bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct OddExtension {
    params: PhysicalParams,
    values: Vec<Complex64>,
}

impl OddExtension {
    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn n_points(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Grid spacing, identical to the source grid's.
    pub fn spacing(&self) -> f64 {
        2.0 * self.params.length() / (self.values.len() - 1) as f64
    }

    /// j-th sample point in [−L, L].
    pub fn point(&self, j: usize) -> f64 {
        self.params.length() * (2.0 * j as f64 / (self.values.len() - 1) as f64 - 1.0)
    }

    /// x_j / L in [−1, 1], exact at −L, 0 and L.
    fn fraction(&self, j: usize) -> f64 {
        2.0 * j as f64 / (self.values.len() - 1) as f64 - 1.0
    }

    /// The [0, L] half, exactly equal to the state that was extended.
    pub fn restriction(&self) -> &[Complex64] {
        let n = self.values.len().div_ceil(2);
        &self.values[n - 1..]
    }
}

/// Extends ψ on [0, L] to the odd function ψ̃ on [−L, L].
///
/// ψ̃(−x) = −ψ̃(x) holds exactly at every sample point and
/// ψ̃(−L) = ψ̃(0) = ψ̃(L) = 0.
pub fn odd_extend(psi: &SampledWaveFunction) -> OddExtension {
    let n = psi.n_points();
    let mut values = vec![Complex64::ZERO; 2 * n - 1];
    for (j, &v) in psi.values().iter().enumerate() {
        values[n - 1 + j] = v;
        values[n - 1 - j] = -v;
    }
    OddExtension {
        params: *psi.params(),
        values,
    }
}

/// Projects onto the exponential basis: a_k = ∫_{−L}^{L} ψ̃ φ̄_k dx by
/// composite quadrature on the odd extension.
///
/// a₀ is reported as integrated; for an odd extension it vanishes up to
/// rounding, which is checked in debug builds.
pub fn project_exp(psi: &SampledWaveFunction, truncation: usize) -> Result<ExpCoefficients> {
    if truncation < 1 {
        return Err(Error::TruncationTooSmall { got: truncation });
    }
    let extension = odd_extend(psi);
    let h = extension.spacing();
    let len = extension.n_points();
    let norm = 1.0 / (2.0 * psi.params().length()).sqrt();
    let half = truncation as isize;

    let mut coefficients = Vec::with_capacity(2 * truncation + 1);
    let mut integrand = vec![Complex64::ZERO; len];
    for k in -half..=half {
        for (j, slot) in integrand.iter_mut().enumerate() {
            // conj(φ_k)(x_j) = exp(−iπk x_j/L)/√(2L)
            let phase = -PI * k as f64 * extension.fraction(j);
            let basis = Complex64::from_polar(norm, phase);
            *slot = extension.values[j] * basis;
        }
        coefficients.push(quadrature::integrate(&integrand, h));
    }
    let result = ExpCoefficients::new(coefficients, *psi.params())?;
    debug_assert!(
        result.coefficient(0).norm() <= 1e-8 * (1.0 + parseval_norm(&result).sqrt()),
        "odd extension must have vanishing a_0"
    );
    Ok(result)
}

/// Projects onto the sine basis: c_n = ∫₀^L ψ √(2/L) sin(nπx/L) dx by
/// composite quadrature.
pub fn project_sine(psi: &SampledWaveFunction, truncation: usize) -> Result<SineSeries> {
    if truncation < 1 {
        return Err(Error::TruncationTooSmall { got: truncation });
    }
    let grid = psi.grid();
    let h = grid.spacing();
    let amplitude = (2.0 / psi.params().length()).sqrt();

    let mut coefficients = Vec::with_capacity(truncation);
    let mut integrand = vec![Complex64::ZERO; psi.n_points()];
    for n in 1..=truncation {
        for (j, &v) in psi.values().iter().enumerate() {
            integrand[j] = v * (amplitude * (n as f64 * PI * grid.fraction(j)).sin());
        }
        coefficients.push(quadrature::integrate(&integrand, h));
    }
    SineSeries::new(coefficients, *psi.params())
}

/// Exact change of basis: a_k = −i·c_k for k > 0, a_k = +i·c_{−k} for k < 0,
/// a₀ = 0. No quadrature is involved.
pub fn sine_to_exp(series: &SineSeries) -> ExpCoefficients {
    let truncation = series.truncation();
    let mut coefficients = vec![Complex64::ZERO; 2 * truncation + 1];
    for (idx, &c) in series.coefficients().iter().enumerate() {
        let n = idx + 1;
        // −i·c and +i·c are exact sign/swap operations on (re, im).
        coefficients[truncation + n] = Complex64::new(c.im, -c.re);
        coefficients[truncation - n] = Complex64::new(-c.im, c.re);
    }
    ExpCoefficients::new(coefficients, *series.params())
        .expect("coefficient vector is finite and well-sized by construction")
}

/// Exact inverse of [`sine_to_exp`] on the odd subspace:
/// c_n = i·(a_n − a_{−n})/2.
pub fn exp_to_sine(coefficients: &ExpCoefficients) -> SineSeries {
    let truncation = coefficients.truncation();
    let c = (1..=truncation as isize)
        .map(|n| {
            let diff = coefficients.coefficient(n) - coefficients.coefficient(-n);
            Complex64::new(-diff.im, diff.re) * 0.5
        })
        .collect();
    SineSeries::new(c, *coefficients.params())
        .expect("coefficient vector is finite and well-sized by construction")
}

/// Derivative in coefficient space: b_k = (πik/L)·a_k, exact.
pub fn spectral_derivative(coefficients: &ExpCoefficients) -> ExpCoefficients {
    let length = coefficients.params().length();
    let derived = coefficients
        .indexed()
        .map(|(k, a)| Complex64::new(0.0, PI * k as f64 / length) * a)
        .collect();
    ExpCoefficients::new(derived, *coefficients.params())
        .expect("coefficient vector is finite and well-sized by construction")
}

/// Σ_k |a_k|², which equals ∫_{−L}^{L} |ψ̃|² dx for the represented function.
pub fn parseval_norm(coefficients: &ExpCoefficients) -> f64 {
    coefficients
        .coefficients()
        .iter()
        .map(|a| a.norm_sqr())
        .sum()
}
