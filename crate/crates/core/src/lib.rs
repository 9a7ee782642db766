//! Variational treatment of a quantum particle in the infinite square well.
//!
//! The well confines the particle to [0, L] with hard walls, so admissible
//! wavefunctions vanish at both ends. Instead of solving the eigenvalue
//! problem, this crate
//!
//! * evaluates the kinetic-energy functional E(ψ) = (ħ²/2m)∫|ψ′|²dx on
//!   sampled states and, exactly, on basis coefficients ([`functionals`]),
//! * extends states oddly to [−L, L] and moves between grid samples, the
//!   real sine basis and the exponential Fourier basis ([`spectral`]),
//! * verifies the Wirtinger-type inequality ∫|ψ′|² ≥ (π²/L²)∫|ψ|² both as a
//!   grid-side ratio and as the exact coefficient sum Σ(k²−1)|a_k|² ≥ 0,
//! * finds the ground state by projected gradient descent on the unit
//!   sphere of sine coefficients ([`minimize`]), reproducing
//!   √(2/L)·sin(πx/L) and E₁ = ħ²π²/(2mL²) by pure energy minimization,
//! * keeps the closed-form spectrum in a quarantined reference module
//!   ([`analytic`]) used only for cross-checks.
//!
//! Everything is pure and immutable after construction; all operations are
//! safe to call from multiple threads.

pub mod analytic;
pub mod error;
pub mod functionals;
pub mod io;
pub mod minimize;
pub mod params;
pub mod quadrature;
pub mod spectral;
pub mod trials;
pub mod wavefunction;

pub use error::{Error, Result};
pub use functionals::{BoundsReport, EnergyReport};
pub use minimize::{MinimizationResult, MinimizerConfig, Start};
pub use params::{Grid, PhysicalParams};
pub use wavefunction::{ExpCoefficients, SampledWaveFunction, SineSeries};

/// Re-exported complex sample type used throughout the public API.
pub use num_complex::Complex64;
