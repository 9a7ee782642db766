//! Physical parameters of the well and the uniform sampling grid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimum number of grid points for any sampled state.
pub const MIN_GRID_POINTS: usize = 3;

/// ħ, m and L defining the units and the well geometry.
///
/// All three are strictly positive; the default is natural units
/// ħ = m = L = 1. Fields are private so a constructed value is always valid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    hbar: f64,
    mass: f64,
    length: f64,
}

impl PhysicalParams {
    /// Validates and builds a parameter set. Each argument must be > 0.
    pub fn new(hbar: f64, mass: f64, length: f64) -> Result<Self> {
        check_positive("hbar", hbar)?;
        check_positive("mass", mass)?;
        check_positive("length", length)?;
        Ok(Self { hbar, mass, length })
    }

    /// Natural units ħ = m = L = 1.
    pub fn natural() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
            length: 1.0,
        }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// The characteristic energy ħ²/(2mL²).
    ///
    /// This is both the crude uncertainty-relation bound and the unit in
    /// which the exact spectrum reads π²n².
    pub fn energy_unit(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mass * self.length * self.length)
    }
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self::natural()
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value <= 0.0 || !value.is_finite() {
        return Err(Error::NonPositive { name, value });
    }
    Ok(())
}

/// Uniform grid of N ≥ 3 points over [0, L], both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    n_points: usize,
    params: PhysicalParams,
}

impl Grid {
    pub fn new(n_points: usize, params: PhysicalParams) -> Result<Self> {
        if n_points < MIN_GRID_POINTS {
            return Err(Error::GridTooSmall {
                min: MIN_GRID_POINTS,
                got: n_points,
            });
        }
        Ok(Self { n_points, params })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    /// Spacing h = L/(N−1).
    pub fn spacing(&self) -> f64 {
        self.params.length() / (self.n_points - 1) as f64
    }

    /// j-th point, computed as L·(j/(N−1)) so that x₀ = 0 and x_{N−1} = L
    /// are exact.
    pub fn point(&self, j: usize) -> f64 {
        debug_assert!(j < self.n_points);
        self.params.length() * (j as f64 / (self.n_points - 1) as f64)
    }

    /// x_j / L in [0, 1], exact at both ends.
    pub fn fraction(&self, j: usize) -> f64 {
        debug_assert!(j < self.n_points);
        j as f64 / (self.n_points - 1) as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |j| self.point(j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_units_default() {
        let p = PhysicalParams::default();
        assert_eq!((p.hbar(), p.mass(), p.length()), (1.0, 1.0, 1.0));
    }

    #[test]
    fn accepts_nonunit_length() {
        let p = PhysicalParams::new(1.0, 1.0, 2.0).unwrap();
        assert_eq!(p.length(), 2.0);
        assert_eq!(p.energy_unit(), 0.125);
    }

    #[test]
    fn rejects_nonpositive_mass() {
        let err = PhysicalParams::new(1.0, 0.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("mass must be positive"));
    }

    #[test]
    fn rejects_nan_params() {
        assert!(PhysicalParams::new(f64::NAN, 1.0, 1.0).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn grid_endpoints_are_exact() {
        let p = PhysicalParams::new(1.0, 1.0, 3.0).unwrap();
        let g = Grid::new(7, p).unwrap();
        assert_eq!(g.point(0), 0.0);
        assert_eq!(g.point(6), 3.0);
        assert!(g.spacing() > 0.0);
    }

    #[test]
    fn grid_needs_three_points() {
        let err = Grid::new(2, PhysicalParams::natural()).unwrap_err();
        assert!(matches!(err, Error::GridTooSmall { min: 3, got: 2 }));
    }
}
