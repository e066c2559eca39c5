//! Shared error type for all numerical operations.

use num_complex::Complex64;
use thiserror::Error;

/// Errors surfaced by the library's numerical operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside a function's validated domain (branch cut, radius, sign).
    #[error("domain error: {0}")]
    DomainError(String),

    /// A parameter violates an operation's stated range or ordering.
    #[error("bad argument: {0}")]
    BadArgument(String),

    /// A winding-number probe point sits within the guard distance of the curve.
    #[error("probe point {point} is within {distance:e} of the curve")]
    TooCloseToBoundary { point: Complex64, distance: f64 },

    /// The angle sum around a curve did not round to an integer winding number.
    #[error("winding number residue {residue} exceeds 0.25; degenerate curve")]
    NonIntegerWinding { residue: f64 },

    /// Operation not defined for the given region tag.
    #[error("unsupported region for this operation: {0}")]
    Unsupported(String),

    /// Derivative stencil of radius h does not fit inside the unit disk.
    #[error("derivative stencil around |z| = {modulus} leaves the unit disk")]
    StencilOutOfDomain { modulus: f64 },

    /// Endpoint comparison requires real values on the real axis.
    #[error("function is not real on the axis: |Im| = {imag:e} at z = {at}")]
    NotRealOnAxis { at: f64, imag: f64 },

    /// A Briot-Bouquet denominator passed below the safe threshold.
    #[error("denominator vanished (|value| = {magnitude:e}) at t = {at}")]
    DenominatorVanishes { at: f64, magnitude: f64 },

    /// A principal-branch evaluation landed on the negative real axis.
    #[error("value {0} lies on the principal branch cut")]
    BranchCut(Complex64),

    /// Adaptive quadrature exhausted its depth budget above tolerance.
    #[error("quadrature failed to converge: error estimate {estimate:e} > tol {tol:e}")]
    QuadratureFailure { estimate: f64, tol: f64 },

    /// An integral value too close to zero to invert.
    #[error("integral magnitude {0:e} too small to invert")]
    NearZeroDenominator(f64),

    /// Evaluation at a pole on the boundary.
    #[error("pole at boundary point z = {0}")]
    PoleAtBoundary(Complex64),
}

pub type Result<T> = std::result::Result<T, Error>;
