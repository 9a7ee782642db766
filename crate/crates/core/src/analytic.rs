//! Closed-form reference values: the exact spectrum, the exact ground
//! state, the ground-state momentum and the exact lower bound.
//!
//! This module is the only place the known eigenvalues enter the crate. The
//! minimizer must reach the same numbers without touching it (tests compare
//! the two paths; an architectural test keeps the dependency out).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::wavefunction::{SampledWaveFunction, SineSeries};

/// E_n = ħ²π²n²/(2mL²) for n ≥ 1.
pub fn energy_level(params: &PhysicalParams, n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::NonPositive {
            name: "quantum number n",
            value: n as f64,
        });
    }
    let n = n as f64;
    Ok(params.energy_unit() * PI * PI * n * n)
}

/// The normalized ground state √(2/L)·sin(πx/L) on an N-point grid.
///
/// Real and positive on (0, L), with exactly zero endpoint samples.
pub fn ground_state(params: &PhysicalParams, n_points: usize) -> Result<SampledWaveFunction> {
    SineSeries::pure_mode(1, 1, *params)?.sample(n_points)
}

/// The ground-state momentum ħπ/L = √(2mE₁).
pub fn ground_momentum(params: &PhysicalParams) -> f64 {
    let p = params.hbar() * PI / params.length();
    debug_assert!({
        let from_energy = (2.0 * params.mass() * energy_level(params, 1).unwrap()).sqrt();
        (p - from_energy).abs() <= 1e-12 * p
    });
    p
}

/// The exact lower bound ħ²π²/(2mL²) of the energy functional; coincides
/// with E₁.
pub fn exact_bound(params: &PhysicalParams) -> f64 {
    params.energy_unit() * PI * PI
}
