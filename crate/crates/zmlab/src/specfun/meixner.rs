//! Meixner orthogonal polynomials on ℤ₊, their negative-binomial weight,
//! and the orthonormalized functions M̃_n used by the degenerate-parameter
//! kernels and the birth–death propagators.

use crate::error::Error;
use crate::specfun::gamma::log_gamma_real;

/// W_{α,ξ}(x̃) = (α+1)_{x̃} ξ^{x̃} / x̃! for x̃ ∈ ℤ₊, α > −1, ξ ∈ (0,1).
pub fn meixner_weight(xt: u64, alpha: f64, xi: f64) -> f64 {
    let mut w = 1.0;
    for k in 0..xt {
        w *= xi * (alpha + 1.0 + k as f64) / (k as f64 + 1.0);
    }
    w
}

/// M_n(x̃; α, ξ) = F(−n, −x̃; α+1; (ξ−1)/ξ) — a terminating sum over
/// k ≤ min(n, x̃).
pub fn meixner_poly(n: u64, xt: u64, alpha: f64, xi: f64) -> f64 {
    let arg = (xi - 1.0) / xi;
    let kmax = n.min(xt);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..kmax {
        let kf = k as f64;
        term *= (kf - n as f64) * (kf - xt as f64) / ((alpha + 1.0 + kf) * (kf + 1.0)) * arg;
        sum += term;
    }
    if kmax == 0 {
        1.0
    } else {
        sum
    }
}

/// ‖M_n‖⁻² = ξⁿ (1−ξ)^{α+1} Γ(α+n+1) / (Γ(α+1) n!).
fn inv_norm_sq(n: u64, alpha: f64, xi: f64) -> f64 {
    (n as f64 * xi.ln()
        + (alpha + 1.0) * (1.0 - xi).ln()
        + log_gamma_real(alpha + n as f64 + 1.0)
        - log_gamma_real(alpha + 1.0)
        - log_gamma_real(n as f64 + 1.0))
    .exp()
}

/// M̃_n(x̃; α, ξ) = (−1)ⁿ M_n(x̃) √(ξⁿ(1−ξ)^{α+1}Γ(α+n+1)/(Γ(α+1) n!)) √W(x̃):
/// an orthonormal basis of ℓ²(ℤ₊).
pub fn meixner_tilde(n: u64, xt: u64, alpha: f64, xi: f64) -> Result<f64, Error> {
    if !(alpha > -1.0) {
        return Err(Error::domain(format!("Meixner parameter needs α > −1, got {alpha}")));
    }
    if !(0.0 < xi && xi < 1.0) {
        return Err(Error::domain(format!("xi must lie in (0,1), got {xi}")));
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign
        * meixner_poly(n, xt, alpha, xi)
        * inv_norm_sq(n, alpha, xi).sqrt()
        * meixner_weight(xt, alpha, xi).sqrt())
}
