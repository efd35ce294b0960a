//! Error type shared by all evaluation and solver paths.

use num_complex::Complex64;
use thiserror::Error;

/// Errors from lattice construction, function evaluation and solving.
#[derive(Debug, Clone, Error)]
pub enum EllipticError {
    /// Periods are zero, non-finite, or lie on a line through the origin.
    #[error("degenerate lattice: {0}")]
    LatticeDegenerate(String),

    /// A derived lattice constant violated its construction invariant.
    #[error("lattice invariant failure: {0}")]
    InvariantFailure(String),

    /// Evaluation point closer to a lattice point (or other pole) than the
    /// pole-exclusion radius. Deterministic failure beats silent precision
    /// loss.
    #[error("pole proximity: |z - pole| = {distance:.3e} at z = {z}")]
    PoleProximity { z: Complex64, distance: f64 },

    /// exp of the assembled logarithm would overflow binary64. The log value
    /// is reported so callers can keep working in log space.
    #[error("magnitude overflow: log value {log_value} exceeds f64 range")]
    Overflow { log_value: Complex64 },

    /// Ansatz parameters violate the distinctness or size invariants.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Shift parameters coincide modulo the lattice (within δ_sep).
    #[error("degenerate parameters: {0}")]
    Degeneracy(String),

    /// A contour could not be placed clear of neighbouring singularities.
    #[error("contour placement: {0}")]
    ContourPlacement(String),

    /// Non-finite value encountered where a finite one is required.
    #[error("non-finite input: {0}")]
    NonFinite(String),

    /// Linear system in the Newton step is numerically singular.
    #[error("singular linear system in Newton step")]
    SingularSystem,

    /// Fewer converged branches than an operation requires.
    #[error("partial result: {0}")]
    PartialResult(String),
}

pub type Result<T> = std::result::Result<T, EllipticError>;
