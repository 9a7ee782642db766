//! CSV formats for states, coefficients, spectra and trajectories.
//!
//! All floats are written with Rust's shortest round-trip formatting, so a
//! written file reproduces the original bits when read back and identical
//! runs produce byte-identical files.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{Grid, PhysicalParams};
use crate::wavefunction::{ExpCoefficients, SampledWaveFunction, SineSeries};

/// |ψ| accepted as zero at the walls when validating file states.
pub const ENDPOINT_TOLERANCE: f64 = 1e-12;

/// Relative slack (in units of L) for grid-uniformity validation.
const UNIFORMITY_TOLERANCE: f64 = 1e-9;

/// Shortest round-trip float with −0.0 flushed to 0.
fn fmt(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Writes `x,re,im` rows, one per grid point.
pub fn write_wavefunction_csv<W: Write>(mut out: W, psi: &SampledWaveFunction) -> Result<()> {
    writeln!(out, "x,re,im")?;
    let grid = psi.grid();
    for (j, v) in psi.values().iter().enumerate() {
        writeln!(out, "{},{},{}", grid.point(j), fmt(v.re), fmt(v.im))?;
    }
    Ok(())
}

/// Reads and validates a wavefunction CSV.
///
/// The well length is taken from the final sample's x; the grid must start
/// at 0 and be uniform, every value finite, and both endpoint samples zero
/// within [`ENDPOINT_TOLERANCE`] (they are snapped to exact zeros).
pub fn read_wavefunction_csv<R: BufRead>(
    input: R,
    hbar: f64,
    mass: f64,
) -> Result<SampledWaveFunction> {
    const WHAT: &str = "wavefunction CSV";
    let mut lines = input.lines().enumerate();
    let header = match lines.next() {
        Some((_, line)) => line?,
        None => {
            return Err(Error::Parse {
                what: WHAT,
                line: 1,
                detail: "empty file".into(),
            })
        }
    };
    if header.trim() != "x,re,im" {
        return Err(Error::Parse {
            what: WHAT,
            line: 1,
            detail: format!("expected header 'x,re,im', got '{}'", header.trim()),
        });
    }

    let mut xs = Vec::new();
    let mut values = Vec::new();
    for (idx, line) in lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                what: WHAT,
                line: idx + 1,
                detail: format!("expected 3 comma-separated fields, got {}", fields.len()),
            });
        }
        let mut parsed = [0.0f64; 3];
        for (slot, field) in parsed.iter_mut().zip(&fields) {
            *slot = field.trim().parse().map_err(|e| Error::Parse {
                what: WHAT,
                line: idx + 1,
                detail: format!("bad float '{}': {e}", field.trim()),
            })?;
        }
        xs.push(parsed[0]);
        values.push(Complex64::new(parsed[1], parsed[2]));
    }

    if xs.len() < 3 {
        return Err(Error::GridTooSmall {
            min: 3,
            got: xs.len(),
        });
    }
    if values
        .iter()
        .any(|v| !v.re.is_finite() || !v.im.is_finite())
        || xs.iter().any(|x| !x.is_finite())
    {
        return Err(Error::NonFinite { what: "file state" });
    }

    let length = *xs.last().expect("checked non-empty");
    if length <= 0.0 || length.is_nan() {
        return Err(Error::NonPositive {
            name: "length (final x of file state)",
            value: length,
        });
    }
    let params = PhysicalParams::new(hbar, mass, length)?;
    let grid = Grid::new(xs.len(), params)?;
    for (j, &x) in xs.iter().enumerate() {
        let expected = grid.point(j);
        if (x - expected).abs() > UNIFORMITY_TOLERANCE * length {
            return Err(Error::NonUniformGrid {
                index: j,
                x,
                expected,
            });
        }
    }
    let n = values.len();
    for j in [0, n - 1] {
        let magnitude = values[j].norm();
        if magnitude > ENDPOINT_TOLERANCE {
            return Err(Error::BoundaryViolation {
                x: xs[j],
                magnitude,
            });
        }
        values[j] = Complex64::ZERO;
    }
    SampledWaveFunction::new(grid, values)
}

/// Writes `n,re,im` rows for sine coefficients, n = 1..K.
pub fn write_sine_csv<W: Write>(mut out: W, series: &SineSeries) -> Result<()> {
    writeln!(out, "n,re,im")?;
    for (idx, c) in series.coefficients().iter().enumerate() {
        writeln!(out, "{},{},{}", idx + 1, fmt(c.re), fmt(c.im))?;
    }
    Ok(())
}

/// Writes `k,re,im` rows for exponential coefficients, k = −K..K.
pub fn write_exp_csv<W: Write>(mut out: W, coefficients: &ExpCoefficients) -> Result<()> {
    writeln!(out, "k,re,im")?;
    for (k, a) in coefficients.indexed() {
        writeln!(out, "{},{},{}", k, fmt(a.re), fmt(a.im))?;
    }
    Ok(())
}

/// Writes `iteration,energy` rows; iteration 0 is the starting energy.
pub fn write_trajectory_csv<W: Write>(mut out: W, energies: &[f64]) -> Result<()> {
    writeln!(out, "iteration,energy")?;
    for (i, e) in energies.iter().enumerate() {
        writeln!(out, "{},{}", i, fmt(*e))?;
    }
    Ok(())
}

/// Writes `n,energy` rows.
pub fn write_spectrum_csv<W: Write>(mut out: W, levels: &[(usize, f64)]) -> Result<()> {
    writeln!(out, "n,energy")?;
    for (n, e) in levels {
        writeln!(out, "{},{}", n, fmt(*e))?;
    }
    Ok(())
}
