//! Seeded random trial states for the inequality property suites.
//!
//! Two families, matching what the verification suites need: sine series
//! with up to 12 modes and coefficients uniform on the unit sphere (drawn
//! from the ball and normalized), and polynomials x(L−x)·q(x) of total
//! degree ≤ 8 with q-coefficients uniform in [−1, 1). Trial `index` under a
//! base seed gets its own ChaCha stream via a SplitMix-style mix, so
//! batches are reproducible and order-independent.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Result;
use crate::params::{Grid, PhysicalParams};
use crate::wavefunction::{SampledWaveFunction, SineSeries};

/// Largest mode index drawn for sine trials.
pub const MAX_TRIAL_MODES: usize = 12;

/// Total degree bound of polynomial trials (x(L−x)·q with deg q ≤ 6).
pub const MAX_POLY_DEGREE: usize = 8;

/// Deterministic per-trial seed: the trial index mixed into the base seed.
pub fn trial_seed(base_seed: u64, index: u64) -> u64 {
    let mut z = base_seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One random admissible state, with the exact coefficient representation
/// kept alongside when the trial was generated in coefficient space.
#[derive(Debug, Clone)]
pub struct TrialState {
    sampled: SampledWaveFunction,
    series: Option<SineSeries>,
}

impl TrialState {
    pub fn sampled(&self) -> &SampledWaveFunction {
        &self.sampled
    }

    /// Exact sine coefficients, present for sine-series trials.
    pub fn series(&self) -> Option<&SineSeries> {
        self.series.as_ref()
    }
}

/// Random sine series: K uniform in 1..=`max_modes`, coefficients uniform
/// on the unit sphere.
pub fn random_sine_trial(
    rng: &mut ChaCha8Rng,
    params: &PhysicalParams,
    n_points: usize,
    max_modes: usize,
) -> Result<TrialState> {
    let truncation = rng.random_range(1..=max_modes);
    let series = loop {
        let coefficients: Vec<Complex64> = (0..truncation)
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(re, im)
            })
            .collect();
        let raw = SineSeries::new(coefficients, *params)?;
        if raw.norm_squared() > 1e-12 {
            break raw.normalized()?;
        }
    };
    let sampled = series.sample(n_points)?;
    Ok(TrialState {
        sampled,
        series: Some(series),
    })
}

/// Random polynomial x(L−x)·q(x/L) with deg q uniform in 0..=6 and
/// coefficients uniform in [−1, 1); vanishes exactly at both walls.
pub fn random_polynomial_trial(
    rng: &mut ChaCha8Rng,
    params: &PhysicalParams,
    n_points: usize,
) -> Result<TrialState> {
    let grid = Grid::new(n_points, *params)?;
    let length = params.length();
    let values = loop {
        let degree = rng.random_range(0..=MAX_POLY_DEGREE - 2);
        let poly: Vec<f64> = (0..=degree).map(|_| rng.random_range(-1.0..1.0)).collect();
        if poly.iter().map(|q| q.abs()).sum::<f64>() < 1e-6 {
            continue;
        }
        let values: Vec<Complex64> = (0..n_points)
            .map(|j| {
                let x = grid.point(j);
                let t = grid.fraction(j);
                // Horner evaluation of q(t).
                let q = poly.iter().rev().fold(0.0, |acc, c| acc * t + c);
                Complex64::new(x * (length - x) * q, 0.0)
            })
            .collect();
        if values.iter().any(|v| v.norm_sqr() > 0.0) {
            break values;
        }
    };
    let sampled = SampledWaveFunction::new(grid, values)?;
    Ok(TrialState {
        sampled,
        series: None,
    })
}

/// Trial `index` of a batch: alternates sine series (even indices) and
/// polynomials (odd indices), each on its own deterministic stream.
pub fn generate(
    base_seed: u64,
    index: u64,
    params: &PhysicalParams,
    n_points: usize,
) -> Result<TrialState> {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(base_seed, index));
    if index.is_multiple_of(2) {
        random_sine_trial(&mut rng, params, n_points, MAX_TRIAL_MODES)
    } else {
        random_polynomial_trial(&mut rng, params, n_points)
    }
}
