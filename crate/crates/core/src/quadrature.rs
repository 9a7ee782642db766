//! Composite quadrature and finite-difference stencils on uniform grids.
//!
//! Simpson's rule (O(h⁴)) is used whenever the sample count is odd, which the
//! grid constructors arrange for in the default configurations; an even count
//! falls back to the composite trapezoid rule with its O(h²) error. The
//! derivative stencil is second-order central with second-order one-sided
//! stencils at the two endpoints, so the grid-side error model is uniformly
//! O(h²).

use std::ops::{Add, Mul};

/// Scalar sample: f64 or Complex64.
pub trait Sample: Copy + Default + Add<Output = Self> + Mul<f64, Output = Self> {}

impl<T> Sample for T where T: Copy + Default + Add<Output = T> + Mul<f64, Output = T> {}

/// Integrates uniformly spaced samples over their span.
///
/// Odd sample count → composite Simpson; even → composite trapezoid.
/// Panics if fewer than two samples are given.
pub fn integrate<T: Sample>(values: &[T], spacing: f64) -> T {
    assert!(values.len() >= 2, "need at least two samples to integrate");
    if values.len() % 2 == 1 {
        simpson(values, spacing)
    } else {
        trapezoid(values, spacing)
    }
}

fn simpson<T: Sample>(values: &[T], h: f64) -> T {
    let n = values.len();
    let mut acc = values[0] + values[n - 1];
    for (j, &v) in values.iter().enumerate().take(n - 1).skip(1) {
        let w = if j % 2 == 1 { 4.0 } else { 2.0 };
        acc = acc + v * w;
    }
    acc * (h / 3.0)
}

fn trapezoid<T: Sample>(values: &[T], h: f64) -> T {
    let n = values.len();
    let mut acc = (values[0] + values[n - 1]) * 0.5;
    for &v in &values[1..n - 1] {
        acc = acc + v;
    }
    acc * h
}

/// First derivative of uniformly spaced samples.
///
/// Central differences in the interior, second-order one-sided stencils at
/// the two ends. Needs at least three samples.
pub fn differentiate<T>(values: &[T], spacing: f64) -> Vec<T>
where
    T: Sample + std::ops::Sub<Output = T>,
{
    let n = values.len();
    assert!(n >= 3, "need at least three samples to differentiate");
    let half = 0.5 / spacing;
    let mut out = Vec::with_capacity(n);
    // (−3f₀ + 4f₁ − f₂)/(2h)
    out.push((values[1] * 4.0 - values[0] * 3.0 - values[2]) * half);
    for j in 1..n - 1 {
        out.push((values[j + 1] - values[j - 1]) * half);
    }
    // (3f_{N−1} − 4f_{N−2} + f_{N−3})/(2h)
    out.push((values[n - 1] * 3.0 - values[n - 2] * 4.0 + values[n - 3]) * half);
    out
}
