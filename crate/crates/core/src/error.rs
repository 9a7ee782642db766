//! Error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when constructing states or evaluating
/// functionals on them.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A physical parameter (ħ, m, L) or scale factor was not strictly positive.
    #[error("{name} must be positive (got {value})")]
    NonPositive { name: &'static str, value: f64 },

    /// Too few grid points for the requested operation.
    #[error("grid needs at least {min} points (got {got})")]
    GridTooSmall { min: usize, got: usize },

    /// Basis truncation K must be at least 1.
    #[error("truncation must be at least 1 (got {got})")]
    TruncationTooSmall { got: usize },

    /// A sample or coefficient vector contained NaN or infinity.
    #[error("{what} must contain only finite values")]
    NonFinite { what: &'static str },

    /// ψ(0) = ψ(L) = 0 does not hold.
    #[error("boundary condition violated: |psi({x})| = {magnitude}, expected 0")]
    BoundaryViolation { x: f64, magnitude: f64 },

    /// Number of sample values disagrees with the grid.
    #[error("expected {expected} sample values for the grid, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Identically zero wavefunction where a quotient is requested.
    #[error("degenerate input: wavefunction has zero norm")]
    DegenerateInput,

    /// Operation requires a normalized state (∫|ψ|²dx = 1).
    #[error("state must be normalized: norm^2 = {norm_squared}, expected 1")]
    NotNormalized { norm_squared: f64 },

    /// Sample points of a file state are not uniform over [0, L].
    #[error("non-uniform grid in input: point {index} is at x = {x}, expected {expected}")]
    NonUniformGrid { index: usize, x: f64, expected: f64 },

    /// Malformed CSV input.
    #[error("malformed {what} at line {line}: {detail}")]
    Parse {
        what: &'static str,
        line: usize,
        detail: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
