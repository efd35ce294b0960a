//! Exact solutions of the separated third-order ODE of the elliptic
//! three-particle Calogero-Moser problem at integer coupling g ≥ 2.
//!
//! The equation
//!
//! ```text
//! ψ'''(x) − ih₁ψ''(x) − (h₂ + 3g(g−1)℘(x))ψ'(x)
//!         + [ih₃ + ig(g−1)h₁℘(x) + g(g−1)(g−2)℘'(x)]ψ(x) = 0
//! ```
//!
//! has doubly quasi-periodic solutions of Hermite type,
//!
//! ```text
//! ψ(x) = exp(γx) · ∏ₛ σ(x+λₛ) / σ(x)^{g−1},
//! ```
//!
//! once the g parameters (γ, λ₁, …, λ_{g−1}) solve a system of g
//! transcendental equations. This crate provides
//!
//! * [`lattice`], [`weierstrass`], [`oracle`] — evaluation of ℘, ℘', ζ, σ on an
//!   arbitrary period lattice via theta series, with independent lattice-sum
//!   oracles for validation;
//! * [`ansatz`] — the trial solution ψ and its exact logarithmic derivatives;
//! * [`solver`] — multi-start damped Newton iteration in ℂ^g on the
//!   transcendental system;
//! * [`verifier`] — certification of candidates by contour-integral Laurent
//!   analysis, ODE residuals, Bloch factors and Wronskians;
//! * [`manufactured`] — construction of problems with known planted solutions.
//!
//! Period convention: ω₁ and ω₂ are **full periods** generating the lattice
//! ℤω₁ + ℤω₂. Quasi-period constants ηₖ are the increments of ζ over a full
//! period, so the Legendre relation reads η₁ω₂ − η₂ω₁ = 2πi. Readers used to
//! half-period conventions should substitute ωₖ = 2ωₖ^{half}.

pub mod ansatz;
pub mod error;
pub mod lattice;
pub mod manufactured;
pub mod oracle;
pub mod solver;
mod theta;
pub mod verifier;
pub mod weierstrass;

pub use error::{EllipticError, Result};
pub use lattice::{CellReducedPoint, PeriodLattice};

/// Complex scalar used throughout: IEEE 754 binary64 components.
pub type C64 = num_complex::Complex64;
