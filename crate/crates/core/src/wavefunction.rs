//! The three wavefunction representations and the conversions between a
//! sine series and its grid samples.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{Grid, PhysicalParams};

/// Complex samples of ψ on a uniform grid over [0, L].
///
/// Invariants: the first and last value are exactly zero (the hard-wall
/// boundary condition) and every entry is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledWaveFunction {
    grid: Grid,
    values: Vec<Complex64>,
}

impl SampledWaveFunction {
    /// Validates samples against the grid and the admissibility invariants.
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::LengthMismatch {
                expected: grid.n_points(),
                got: values.len(),
            });
        }
        if values
            .iter()
            .any(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(Error::NonFinite {
                what: "wavefunction samples",
            });
        }
        for (x, v) in [
            (0.0, values[0]),
            (grid.params().length(), values[values.len() - 1]),
        ] {
            if v != Complex64::ZERO {
                return Err(Error::BoundaryViolation {
                    x,
                    magnitude: v.norm(),
                });
            }
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn params(&self) -> &PhysicalParams {
        self.grid.params()
    }

    pub fn n_points(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Same state multiplied by a complex factor (endpoints stay zero).
    pub fn scaled(&self, factor: Complex64) -> Self {
        let values = self.values.iter().map(|v| v * factor).collect();
        Self {
            grid: self.grid,
            values,
        }
    }
}

/// Coefficients c_n of ψ(x) = Σ_{n=1}^{K} c_n √(2/L) sin(nπx/L).
///
/// The basis functions vanish at both walls, so any series is admissible by
/// construction. Index n is 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct SineSeries {
    coefficients: Vec<Complex64>,
    params: PhysicalParams,
}

impl SineSeries {
    pub fn new(coefficients: Vec<Complex64>, params: PhysicalParams) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::TruncationTooSmall { got: 0 });
        }
        if coefficients
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::NonFinite {
                what: "sine coefficients",
            });
        }
        Ok(Self {
            coefficients,
            params,
        })
    }

    /// The single basis mode n within a series truncated at K ≥ n.
    pub fn pure_mode(n: usize, truncation: usize, params: PhysicalParams) -> Result<Self> {
        if truncation < 1 {
            return Err(Error::TruncationTooSmall { got: truncation });
        }
        assert!(n >= 1 && n <= truncation, "mode index out of range");
        let mut coefficients = vec![Complex64::ZERO; truncation];
        coefficients[n - 1] = Complex64::ONE;
        Self::new(coefficients, params)
    }

    /// Number of retained modes K.
    pub fn truncation(&self) -> usize {
        self.coefficients.len()
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// c_n for 1-based n; zero beyond the truncation.
    pub fn coefficient(&self, n: usize) -> Complex64 {
        assert!(n >= 1, "sine modes are 1-based");
        self.coefficients
            .get(n - 1)
            .copied()
            .unwrap_or(Complex64::ZERO)
    }

    /// Σ|c_n|², the [0, L] squared norm of the represented function.
    pub fn norm_squared(&self) -> f64 {
        self.coefficients.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Rescaled to Σ|c_n|² = 1; errors on the zero series.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm_squared().sqrt();
        if norm == 0.0 {
            return Err(Error::DegenerateInput);
        }
        let coefficients = self.coefficients.iter().map(|c| c / norm).collect();
        Ok(Self {
            coefficients,
            params: self.params,
        })
    }

    /// Same coefficients zero-padded or truncated to K = `truncation`.
    pub fn resized(&self, truncation: usize) -> Result<Self> {
        if truncation < 1 {
            return Err(Error::TruncationTooSmall { got: truncation });
        }
        let mut coefficients = self.coefficients.clone();
        coefficients.resize(truncation, Complex64::ZERO);
        Self::new(coefficients, self.params)
    }

    /// Evaluates the series on a uniform N-point grid.
    ///
    /// The two endpoint samples are set to exactly zero rather than to the
    /// rounded sin(nπ) values.
    pub fn sample(&self, n_points: usize) -> Result<SampledWaveFunction> {
        let grid = Grid::new(n_points, self.params)?;
        let amplitude = (2.0 / self.params.length()).sqrt();
        let mut values = vec![Complex64::ZERO; n_points];
        for (j, slot) in values.iter_mut().enumerate().take(n_points - 1).skip(1) {
            let frac = grid.fraction(j);
            let mut acc = Complex64::ZERO;
            for (idx, c) in self.coefficients.iter().enumerate() {
                let n = (idx + 1) as f64;
                acc += c * (n * PI * frac).sin();
            }
            *slot = acc * amplitude;
        }
        SampledWaveFunction::new(grid, values)
    }
}

/// Coefficients a_k, k = −K..K, of the odd extension ψ̃ on [−L, L] in the
/// basis φ_k(x) = exp(iπkx/L)/√(2L).
///
/// Stored densely with a_k at index k + K. For any odd extension a₀ = 0;
/// the quadrature projection reports its (tiny) computed value rather than
/// forcing it.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpCoefficients {
    coefficients: Vec<Complex64>,
    params: PhysicalParams,
}

impl ExpCoefficients {
    /// Builds from a dense vector of length 2K+1 (k = −K..K).
    pub fn new(coefficients: Vec<Complex64>, params: PhysicalParams) -> Result<Self> {
        if coefficients.len() < 3 || coefficients.len().is_multiple_of(2) {
            return Err(Error::TruncationTooSmall {
                got: coefficients.len() / 2,
            });
        }
        if coefficients
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::NonFinite {
                what: "exponential coefficients",
            });
        }
        Ok(Self {
            coefficients,
            params,
        })
    }

    /// Truncation K; indices run over −K..K.
    pub fn truncation(&self) -> usize {
        self.coefficients.len() / 2
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    /// Dense storage, a_k at index k + K.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// a_k; zero outside the truncation.
    pub fn coefficient(&self, k: isize) -> Complex64 {
        let half = self.truncation() as isize;
        if k < -half || k > half {
            return Complex64::ZERO;
        }
        self.coefficients[(k + half) as usize]
    }

    /// Iterate (k, a_k) pairs from −K to K.
    pub fn indexed(&self) -> impl Iterator<Item = (isize, Complex64)> + '_ {
        let half = self.truncation() as isize;
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as isize - half, c))
    }
}
