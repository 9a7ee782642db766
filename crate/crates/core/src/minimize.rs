//! Ground-state search by projected gradient descent on the unit sphere of
//! sine-basis coefficients.
//!
//! The objective Σ_n E_n|c_n|² is the energy functional written in
//! coefficient space through the derivative relation; its per-mode energies
//! come from the spectral path, never from the known spectrum, so the
//! minimizer reaches E₁ without ever being told it. The search is iterative
//! descent, not a diagonalization of the quadratic form — diagonalizing
//! would be solving the eigenproblem.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::functionals::energy_spectral;
use crate::params::PhysicalParams;
use crate::spectral::sine_to_exp;
use crate::wavefunction::SineSeries;

/// Knobs of the projected gradient descent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizerConfig {
    /// Number of retained sine modes K.
    pub truncation: usize,
    pub max_iterations: usize,
    /// Fixed step; `None` selects 0.1×(2mL²)/(ħ²π²K²), i.e. a tenth of the
    /// inverse largest retained mode energy.
    pub step_size: Option<f64>,
    /// Relative energy change below which the iteration stops.
    ///
    /// With the default step the slowest contaminant (mode 2) contracts by
    /// 1−r ≈ 4.7·10⁻³ per iteration at K = 16, so stopping at a per-step
    /// relative change of `tol` leaves a relative energy error of about
    /// tol/(1−r) ≈ 200·tol. 1e-12 therefore lands within ~2·10⁻¹⁰ of the
    /// bound.
    pub tolerance: f64,
    /// Seed for the random starting point.
    pub seed: u64,
}

impl Default for MinimizerConfig {
    fn default() -> Self {
        Self {
            truncation: 16,
            max_iterations: 10_000,
            step_size: None,
            tolerance: 1e-12,
            seed: 0,
        }
    }
}

impl MinimizerConfig {
    fn validate(&self) -> Result<()> {
        if self.truncation < 1 {
            return Err(Error::TruncationTooSmall {
                got: self.truncation,
            });
        }
        if self.max_iterations < 1 {
            return Err(Error::NonPositive {
                name: "max_iterations",
                value: self.max_iterations as f64,
            });
        }
        if let Some(step) = self.step_size {
            if step <= 0.0 || !step.is_finite() {
                return Err(Error::NonPositive {
                    name: "step_size",
                    value: step,
                });
            }
        }
        if self.tolerance <= 0.0 || !self.tolerance.is_finite() {
            return Err(Error::NonPositive {
                name: "tolerance",
                value: self.tolerance,
            });
        }
        Ok(())
    }
}

/// Where the descent starts.
#[derive(Debug, Clone, Copy)]
pub enum Start<'a> {
    /// Draw a random normalized coefficient vector with the configured seed.
    Random(PhysicalParams),
    /// Start from the given series (zero-padded or truncated to K).
    Series(&'a SineSeries),
}

/// Outcome of one minimization run.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizationResult {
    /// Normalized coefficients with the phase fixed so c₁ is real positive.
    pub final_series: SineSeries,
    pub final_energy: f64,
    /// Energy at the start followed by one entry per iteration;
    /// non-increasing up to a few ulps of rounding in the renormalization.
    pub energy_trajectory: Vec<f64>,
    pub iterations_used: usize,
    /// |c₁| of the normalized result.
    pub overlap_with_mode1: f64,
    pub converged: bool,
}

/// Exact coefficient-space energy Σ_n E_n|c_n|² of a sine series, evaluated
/// through the spectral derivative path.
pub fn energy_of_coefficients(series: &SineSeries) -> f64 {
    energy_spectral(&sine_to_exp(series))
}

/// Per-mode energies E_1..E_K obtained by pushing each unit mode through
/// the spectral path.
pub fn mode_energies(truncation: usize, params: &PhysicalParams) -> Result<Vec<f64>> {
    (1..=truncation)
        .map(|n| {
            Ok(energy_of_coefficients(&SineSeries::pure_mode(
                n, truncation, *params,
            )?))
        })
        .collect()
}

/// Default step 0.1×(2mL²)/(ħ²π²K²) — a tenth of 1/E_K.
pub fn default_step_size(truncation: usize, params: &PhysicalParams) -> f64 {
    let k = truncation as f64;
    0.1 / (params.energy_unit() * std::f64::consts::PI * std::f64::consts::PI * k * k)
}

/// Largest step with guaranteed monotone descent, 1/(E_{K−1} + E_K).
///
/// With step η the update is c ← normalize((I − 2ηE)c); the energy is
/// non-increasing for every state exactly when (1−2ηE_n)² is non-increasing
/// in n. That holds while at most the top multiplier goes negative and its
/// square stays below the next one's, i.e. η ≤ 1/(E_{K−1} + E_K).
pub fn stable_step_bound(truncation: usize, params: &PhysicalParams) -> Result<f64> {
    let energies = mode_energies(truncation, params)?;
    let top = energies[energies.len() - 1];
    let next = if energies.len() >= 2 {
        energies[energies.len() - 2]
    } else {
        top
    };
    Ok(1.0 / (next + top))
}

/// Uniformly distributed point on the coefficient sphere, drawn with a
/// ChaCha stream so identical seeds give bit-identical starts.
pub fn random_start(truncation: usize, seed: u64, params: &PhysicalParams) -> Result<SineSeries> {
    if truncation < 1 {
        return Err(Error::TruncationTooSmall { got: truncation });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let coefficients: Vec<Complex64> = (0..truncation)
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                Complex64::new(re, im)
            })
            .collect();
        let series = SineSeries::new(coefficients, *params)?;
        // A zero draw has probability zero but would poison the normalization.
        if series.norm_squared() > 1e-12 {
            return series.normalized();
        }
    }
}

/// Minimizes the Rayleigh quotient over the unit sphere Σ|c_n|² = 1 by
/// fixed-step projected gradient descent.
///
/// Each iteration steps against the gradient 2E_n·c_n of the quadratic form
/// and renormalizes, which enforces the constraint exactly; the run stops
/// when the relative energy change drops below the tolerance or the
/// iteration budget is exhausted (reported via `converged`, not an error).
/// Every iterate satisfies the exact lower bound, so the trajectory never
/// dips below ħ²π²/(2mL²) by more than rounding.
pub fn minimize_rayleigh(start: Start<'_>, config: &MinimizerConfig) -> Result<MinimizationResult> {
    config.validate()?;
    let initial = match start {
        Start::Random(params) => random_start(config.truncation, config.seed, &params)?,
        Start::Series(series) => {
            if series.norm_squared() == 0.0 {
                return Err(Error::DegenerateInput);
            }
            series.resized(config.truncation)?.normalized()?
        }
    };
    let params = *initial.params();
    let energies = mode_energies(config.truncation, &params)?;
    let step = config
        .step_size
        .unwrap_or_else(|| default_step_size(config.truncation, &params));

    let mut coefficients = initial.coefficients().to_vec();
    let mut energy = quadratic_energy(&energies, &coefficients);
    let mut trajectory = vec![energy];
    let mut iterations_used = 0;
    let mut converged = false;

    for _ in 0..config.max_iterations {
        for (c, e) in coefficients.iter_mut().zip(&energies) {
            *c -= *c * (2.0 * step * e);
        }
        normalize(&mut coefficients);
        let next = quadratic_energy(&energies, &coefficients);
        trajectory.push(next);
        iterations_used += 1;
        let change = (energy - next).abs();
        energy = next;
        if change <= config.tolerance * energy.abs() {
            converged = true;
            break;
        }
    }

    fix_phase(&mut coefficients);
    let overlap_with_mode1 = coefficients[0].norm();
    let final_series = SineSeries::new(coefficients, params)?;
    Ok(MinimizationResult {
        final_series,
        final_energy: energy,
        energy_trajectory: trajectory,
        iterations_used,
        overlap_with_mode1,
        converged,
    })
}

/// The coefficient vector reaching the exact lower bound: c₁ = 1, all other
/// modes zero. This is the equality case of the coefficient-space
/// inequality, restated in the sine basis.
pub fn closed_form_minimizer(truncation: usize, params: &PhysicalParams) -> Result<SineSeries> {
    let series = SineSeries::pure_mode(1, truncation, *params)?;
    debug_assert_eq!(
        crate::functionals::wirtinger_margin(&sine_to_exp(&series)),
        0.0
    );
    Ok(series)
}

fn quadratic_energy(energies: &[f64], coefficients: &[Complex64]) -> f64 {
    energies
        .iter()
        .zip(coefficients)
        .map(|(e, c)| e * c.norm_sqr())
        .sum()
}

fn normalize(coefficients: &mut [Complex64]) {
    let norm: f64 = coefficients
        .iter()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        .sqrt();
    for c in coefficients.iter_mut() {
        *c /= norm;
    }
}

/// Rotates the global phase so the dominant coefficient (preferring c₁) is
/// real and positive.
fn fix_phase(coefficients: &mut [Complex64]) {
    let reference = if coefficients[0].norm() > 0.0 {
        coefficients[0]
    } else {
        match coefficients.iter().max_by(|a, b| {
            a.norm_sqr()
                .partial_cmp(&b.norm_sqr())
                .expect("finite coefficients")
        }) {
            Some(&c) if c.norm() > 0.0 => c,
            _ => return,
        }
    };
    let phase = reference / reference.norm();
    for c in coefficients.iter_mut() {
        *c /= phase;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    const E1: f64 = PI * PI / 2.0;

    #[test]
    fn coefficient_energy_single_and_mixed_modes() {
        let params = PhysicalParams::natural();
        let c1 = SineSeries::pure_mode(1, 1, params).unwrap();
        assert_eq!(energy_of_coefficients(&c1), E1);

        let zero = SineSeries::new(vec![Complex64::ZERO; 4], params).unwrap();
        assert_eq!(energy_of_coefficients(&zero), 0.0);

        // c₁ = c₃ = 1/√2 → (E₁ + E₃)/2 = 5·E₁ = 5π²/2.
        let amp = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mixed = SineSeries::new(vec![amp, Complex64::ZERO, amp], params).unwrap();
        assert_relative_eq!(
            energy_of_coefficients(&mixed),
            2.5 * PI * PI,
            max_relative = 1e-15
        );
        // Grid route agrees on the synthesized function.
        let quadrature_energy =
            crate::functionals::energy_quadrature(&mixed.sample(2001).unwrap()).unwrap();
        assert_relative_eq!(quadrature_energy, 2.5 * PI * PI, max_relative = 1e-4);
    }

    #[test]
    fn mode_energies_follow_square_law() {
        let params = PhysicalParams::natural();
        let energies = mode_energies(8, &params).unwrap();
        for (idx, e) in energies.iter().enumerate() {
            let n = (idx + 1) as f64;
            assert_relative_eq!(*e, E1 * n * n, max_relative = 1e-14);
        }
    }

    #[test]
    fn fixed_point_converges_in_one_iteration() {
        let params = PhysicalParams::natural();
        let start = SineSeries::pure_mode(1, 16, params).unwrap();
        let result = minimize_rayleigh(Start::Series(&start), &MinimizerConfig::default()).unwrap();
        assert!(result.converged);
        assert_eq!(result.iterations_used, 1);
        assert_relative_eq!(result.final_energy, E1, max_relative = 1e-12);
        assert_relative_eq!(result.overlap_with_mode1, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn random_start_reaches_the_bound() {
        let params = PhysicalParams::natural();
        let result = minimize_rayleigh(Start::Random(params), &MinimizerConfig::default()).unwrap();
        assert!(result.converged);
        assert_relative_eq!(result.final_energy, E1, max_relative = 1e-8);
        assert!(result.overlap_with_mode1 >= 1.0 - 1e-6);
        assert!(result.final_energy >= E1 - 1e-12);
        assert!((result.final_series.norm_squared() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn pure_second_mode_is_a_stationary_point() {
        let params = PhysicalParams::natural();
        let start = SineSeries::pure_mode(2, 16, params).unwrap();
        let result = minimize_rayleigh(Start::Series(&start), &MinimizerConfig::default()).unwrap();
        assert!(result.converged);
        assert_eq!(result.overlap_with_mode1, 0.0);
        assert_relative_eq!(result.final_energy, 4.0 * E1, max_relative = 1e-12);
    }

    #[test]
    fn zero_start_is_degenerate() {
        let params = PhysicalParams::natural();
        let zero = SineSeries::new(vec![Complex64::ZERO; 3], params).unwrap();
        assert!(matches!(
            minimize_rayleigh(Start::Series(&zero), &MinimizerConfig::default()),
            Err(Error::DegenerateInput)
        ));
    }

    #[test]
    fn non_convergence_is_reported_not_raised() {
        let params = PhysicalParams::natural();
        let config = MinimizerConfig {
            max_iterations: 1,
            ..MinimizerConfig::default()
        };
        let result = minimize_rayleigh(Start::Random(params), &config).unwrap();
        assert!(!result.converged);
        assert_eq!(result.iterations_used, 1);
    }

    #[test]
    fn identical_seeds_give_identical_trajectories() {
        let params = PhysicalParams::natural();
        let config = MinimizerConfig {
            max_iterations: 200,
            ..MinimizerConfig::default()
        };
        let a = minimize_rayleigh(Start::Random(params), &config).unwrap();
        let b = minimize_rayleigh(Start::Random(params), &config).unwrap();
        assert_eq!(a.energy_trajectory, b.energy_trajectory);
        assert_eq!(a.final_series.coefficients(), b.final_series.coefficients());
    }

    #[test]
    fn different_seeds_same_minimum() {
        let params = PhysicalParams::natural();
        let a = minimize_rayleigh(Start::Random(params), &MinimizerConfig::default()).unwrap();
        let b = minimize_rayleigh(
            Start::Random(params),
            &MinimizerConfig {
                seed: 7,
                ..MinimizerConfig::default()
            },
        )
        .unwrap();
        assert_relative_eq!(a.final_energy, b.final_energy, max_relative = 1e-9);
        assert_ne!(a.energy_trajectory, b.energy_trajectory);
    }

    #[test]
    fn trajectory_is_monotone_and_above_bound() {
        let params = PhysicalParams::natural();
        for step in [None, Some(stable_step_bound(16, &params).unwrap())] {
            let config = MinimizerConfig {
                step_size: step,
                ..MinimizerConfig::default()
            };
            let result = minimize_rayleigh(Start::Random(params), &config).unwrap();
            for pair in result.energy_trajectory.windows(2) {
                // Allow a few ulps for renormalization rounding.
                assert!(
                    pair[1] <= pair[0] * (1.0 + 4.0 * f64::EPSILON),
                    "energy rose from {} to {}",
                    pair[0],
                    pair[1]
                );
            }
            for e in &result.energy_trajectory {
                assert!(*e >= E1 - 1e-12);
            }
        }
    }

    #[test]
    fn overlap_recovers_from_perturbed_starts() {
        let params = PhysicalParams::natural();
        // |c₁| = 0.1 with the rest of the mass on an awkward phase mix.
        let mut coefficients = vec![Complex64::ZERO; 12];
        coefficients[0] = Complex64::new(0.0, 0.1);
        coefficients[3] = Complex64::new(0.7, -0.2);
        coefficients[7] = Complex64::new(-0.5, 0.45);
        let start = SineSeries::new(coefficients, params)
            .unwrap()
            .normalized()
            .unwrap();
        let result = minimize_rayleigh(Start::Series(&start), &MinimizerConfig::default()).unwrap();
        assert!(result.converged);
        assert!(result.overlap_with_mode1 >= 1.0 - 1e-6);
        // Phase convention: c₁ ends up real positive.
        let c1 = result.final_series.coefficient(1);
        assert!(c1.re > 0.0);
        assert_abs_diff_eq!(c1.im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn closed_form_minimizer_hits_the_bound() {
        let params = PhysicalParams::new(0.7, 1.3, 2.2).unwrap();
        let series = closed_form_minimizer(10, &params).unwrap();
        assert_eq!(series.coefficient(1), Complex64::ONE);
        for n in 2..=10 {
            assert_eq!(series.coefficient(n), Complex64::ZERO);
        }
        let bound = params.energy_unit() * PI * PI;
        assert_relative_eq!(energy_of_coefficients(&series), bound, max_relative = 1e-15);
    }

    #[test]
    fn gradient_matches_finite_differences() {
        // The objective is quadratic, so central differences are exact up to
        // rounding; a largish probe step keeps the rounding term small.
        let params = PhysicalParams::natural();
        let truncation = 16;
        let energies = mode_energies(truncation, &params).unwrap();
        let probe = 1e-3;
        for seed in 0..100 {
            let point = random_start(truncation, seed, &params).unwrap();
            let c = point.coefficients();
            let mut expected = Vec::with_capacity(2 * truncation);
            let mut numeric = Vec::with_capacity(2 * truncation);
            for idx in 0..truncation {
                expected.push(2.0 * energies[idx] * c[idx].re);
                expected.push(2.0 * energies[idx] * c[idx].im);
                for im_part in [false, true] {
                    let delta = if im_part {
                        Complex64::new(0.0, probe)
                    } else {
                        Complex64::new(probe, 0.0)
                    };
                    let mut plus = c.to_vec();
                    let mut minus = c.to_vec();
                    plus[idx] += delta;
                    minus[idx] -= delta;
                    let e_plus = quadratic_energy(&energies, &plus);
                    let e_minus = quadratic_energy(&energies, &minus);
                    numeric.push((e_plus - e_minus) / (2.0 * probe));
                }
            }
            let diff: f64 = expected
                .iter()
                .zip(&numeric)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            let scale: f64 = expected.iter().map(|a| a * a).sum::<f64>().sqrt();
            assert!(
                diff <= 1e-6 * scale,
                "gradient check failed at seed {seed}: {diff} vs scale {scale}"
            );
        }
    }
}
