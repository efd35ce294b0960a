//! Jacobi θ₁ series and its first three derivatives in the argument.
//!
//! All Weierstrass functions on the lattice ℤω₁ + ℤω₂ reduce to θ₁ at
//! u = πz/ω₁ with nome q = exp(iπτ), τ = ω₂/ω₁:
//!
//! ```text
//! θ₁(u, q)   =  2 Σ_{n≥0} (−1)ⁿ q^{(n+1/2)²} sin((2n+1)u)
//! θ₁'(u, q)  =  2 Σ_{n≥0} (−1)ⁿ (2n+1)  q^{(n+1/2)²} cos((2n+1)u)
//! θ₁''(u, q) = −2 Σ_{n≥0} (−1)ⁿ (2n+1)² q^{(n+1/2)²} sin((2n+1)u)
//! θ₁'''(u,q) = −2 Σ_{n≥0} (−1)ⁿ (2n+1)³ q^{(n+1/2)²} cos((2n+1)u)
//! ```
//!
//! For cell-reduced arguments (|Im u| ≤ π·Im τ/2) the terms decay like
//! exp(−π·Im τ·(n² − 1/4)), so the series length needed for a fixed relative
//! target depends on |q| only.

use num_complex::Complex64;

/// Series term count giving relative truncation below ~1e-15 for
/// cell-reduced arguments: smallest N with |q|^{N²} ≤ 1e-17.
pub fn term_count(nome_abs: f64) -> usize {
    let log_q = -nome_abs.ln(); // = π·Im τ > 0
    let n = (39.2_f64 / log_q).sqrt().ceil() as usize + 2;
    n.clamp(6, 256)
}

/// θ₁ and its first three u-derivatives at a single argument.
#[derive(Debug, Clone, Copy)]
pub struct Theta1Values {
    pub t: Complex64,
    pub dt: Complex64,
    pub d2t: Complex64,
    pub d3t: Complex64,
}

/// Evaluate θ₁, θ₁', θ₁'', θ₁''' at u for nome q, summing `n_terms` terms.
pub fn theta1_all(u: Complex64, q: Complex64, n_terms: usize) -> Theta1Values {
    let mut t = Complex64::new(0.0, 0.0);
    let mut dt = Complex64::new(0.0, 0.0);
    let mut d2t = Complex64::new(0.0, 0.0);
    let mut d3t = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for n in 0..n_terms {
        let m = (2 * n + 1) as f64;
        // q^{(n+1/2)²} via powc keeps accuracy for complex nomes.
        let qp = q.powf(m * m / 4.0);
        let (s, c) = sin_cos(m * u);
        t += sign * qp * s;
        dt += sign * m * qp * c;
        d2t -= sign * m * m * qp * s;
        d3t -= sign * m * m * m * qp * c;
        sign = -sign;
    }
    Theta1Values {
        t: 2.0 * t,
        dt: 2.0 * dt,
        d2t: 2.0 * d2t,
        d3t: 2.0 * d3t,
    }
}

/// θ₁'(0) and θ₁'''(0), the only null values needed for lattice constants.
pub fn theta1_null(q: Complex64, n_terms: usize) -> (Complex64, Complex64) {
    let mut dt = Complex64::new(0.0, 0.0);
    let mut d3t = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for n in 0..n_terms {
        let m = (2 * n + 1) as f64;
        let qp = q.powf(m * m / 4.0);
        dt += sign * m * qp;
        d3t -= sign * m * m * m * qp;
        sign = -sign;
    }
    (2.0 * dt, 2.0 * d3t)
}

fn sin_cos(w: Complex64) -> (Complex64, Complex64) {
    (w.sin(), w.cos())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: f64 = 0.043213918263772250; // exp(-π), square lattice ω₂/ω₁ = i

    #[test]
    fn theta1_odd_in_u() {
        let q = Complex64::new(Q, 0.0);
        let n = term_count(Q);
        let u = Complex64::new(0.37, 0.21);
        let a = theta1_all(u, q, n);
        let b = theta1_all(-u, q, n);
        assert!((a.t + b.t).norm() < 1e-15);
        assert!((a.dt - b.dt).norm() < 1e-14);
        assert!((a.d2t + b.d2t).norm() < 1e-14);
        assert!((a.d3t - b.d3t).norm() < 1e-13);
    }

    #[test]
    fn theta1_small_u_slope_matches_null_derivative() {
        let q = Complex64::new(Q, 0.0);
        let n = term_count(Q);
        let (dt0, _) = theta1_null(q, n);
        let u = Complex64::new(1e-6, 0.0);
        let v = theta1_all(u, q, n);
        assert!((v.t / u - dt0).norm() < 1e-9 * dt0.norm());
    }

    #[test]
    fn theta1_quasi_period_in_pi() {
        // θ₁(u + π) = −θ₁(u)
        let q = Complex64::new(Q, 0.0);
        let n = term_count(Q);
        let u = Complex64::new(0.4, -0.3);
        let a = theta1_all(u, q, n);
        let b = theta1_all(u + std::f64::consts::PI, q, n);
        assert!((a.t + b.t).norm() < 1e-13 * a.t.norm().max(1.0));
    }
}
