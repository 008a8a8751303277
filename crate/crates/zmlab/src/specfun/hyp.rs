//! Regularized Gauss hypergeometric series.
//!
//! `hyp2f1_reg` sums Σ_k (a)_k (b)_k x^k / (Γ(c+k) k!), the entire-in-c
//! regularization of ₂F₁(a,b;c;x)/Γ(c). When c is a nonpositive integer −m
//! the reciprocal gammas kill the first m+1 terms and the sum starts at
//! k = m+1; the reciprocal-gamma recurrence steps across that pole chain
//! exactly instead of dividing by zero.

use num_complex::Complex64;

use crate::error::Error;
use crate::specfun::gamma::log_gamma;

const TERM_CAP: usize = 100_000;

fn is_nonpositive_int(z: Complex64) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        Some((-z.re) as u64)
    } else {
        None
    }
}

/// Σ_{k≥0} (a)_k (b)_k x^k / (Γ(c+k) k!) for |x| < 1 (and any x when a or b
/// is a nonpositive integer, where the series terminates).
pub fn hyp2f1_reg(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
) -> Result<Complex64, Error> {
    let (v, s) = hyp2f1_reg_scaled(a, b, c, x)?;
    Ok(v * s.exp())
}

/// Scaled form of the regularized sum: returns (v, s, κ) with the value
/// equal to v·e^s. The real log-scale s absorbs the 1/Γ(c) seed so that
/// large c (where the value underflows f64) still carries full relative
/// accuracy; callers compose s with their own log-scale prefactors.
///
/// κ is the summation condition number Σ|t_k| / |Σ t_k| (≥ 1): the value
/// carries rounding noise of order κ·ε relative to itself, so callers
/// auditing exact identities must widen their tolerances accordingly.
///
/// The terms follow the ratio recurrence t_{k+1} = t_k (a+k)(b+k)x /
/// ((c+k)(k+1)) seeded at the first nonvanishing index, so no intermediate
/// factorial can overflow. Truncation: stop after three consecutive terms
/// fall below 1e−17 times the largest partial-sum magnitude seen so far;
/// error out at 10⁵ terms.
pub fn hyp2f1_reg_scaled(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
) -> Result<(Complex64, f64, f64), Error> {
    // Natural termination index if a or b is a nonpositive integer.
    let stop = [a, b]
        .into_iter()
        .filter_map(is_nonpositive_int)
        .map(|m| m as usize + 1)
        .min();
    if stop.is_none() && x.norm() >= 1.0 {
        return Err(Error::domain(format!(
            "hypergeometric series needs |x| < 1 (got |x| = {}) unless it terminates",
            x.norm()
        )));
    }

    // First index with a nonzero term: k₀ = m+1 when c = −m (the reciprocal
    // gammas kill k ≤ m), else 0; there 1/Γ(c+k₀) = 1/Γ(1) = 1.
    let k0 = match is_nonpositive_int(c) {
        Some(m) => m as usize + 1,
        None => 0,
    };
    if stop.is_some_and(|s| s <= k0) || (x.norm() == 0.0 && k0 > 0) {
        return Ok((Complex64::new(0.0, 0.0), 0.0));
    }
    // Seed t_{k₀} = (a)_{k₀}(b)_{k₀} x^{k₀}/k₀! (or 1/Γ(c)), in log space.
    let mut seed_log = Complex64::new(0.0, 0.0);
    if k0 == 0 {
        seed_log = -log_gamma(c);
    } else {
        for j in 0..k0 {
            seed_log += ((a + j as f64) * (b + j as f64) * x / (j as f64 + 1.0)).ln();
        }
    }

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut peak: f64 = 0.0;
    let mut quiet = 0;
    for k in k0..TERM_CAP {
        if let Some(m) = stop {
            if k >= m {
                break;
            }
        }
        sum += term;
        if !sum.is_finite() {
            return Err(Error::numerical(
                "hypergeometric partial sums overflowed".to_string(),
            ));
        }
        peak = peak.max(sum.norm());
        if term.norm() < 1e-17 * peak.max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= 3 && k > k0 + 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        term *= (a + k as f64) * (b + k as f64) * x / ((c + k as f64) * (k as f64 + 1.0));
        if k + 1 == TERM_CAP {
            return Err(Error::numerical(format!(
                "hypergeometric series did not converge within {TERM_CAP} terms (|x| = {})",
                x.norm()
            )));
        }
    }
    let phase = Complex64::new(0.0, seed_log.im).exp();
    Ok((sum * phase, seed_log.re))
}
