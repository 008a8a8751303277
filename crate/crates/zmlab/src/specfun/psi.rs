//! The discrete hypergeometric wave functions ψ_a(x; z, z′, ξ) on the
//! half-integer lattice: an orthonormal eigenbasis of a second-order
//! difference operator, with two independent evaluation routes (a
//! terminating/convergent series and a contour integral).

use num_complex::Complex64;

use crate::error::Error;
use crate::half::HalfInt;
use crate::measure::{Series, ZParams};
use crate::quad::{circle_integral, QuadConfig};
use crate::specfun::gamma::log_gamma;
use crate::specfun::hyp::hyp2f1_reg_scaled;

/// Tolerance for the audit that a mathematically real quantity came out
/// real; the imaginary residue is rounding noise from complex arithmetic.
const REALNESS_TOL: f64 = 1e-8;

fn half(v: HalfInt) -> f64 {
    v.to_f64()
}

/// True when z = N makes ψ_a vanish identically (a ≥ N + ½) — the
/// reciprocal of Γ(z − a + ½) kills the whole expression.
fn vanishes_by_index(p: &ZParams, a: HalfInt) -> bool {
    for v in [p.z, p.zp] {
        if v.im == 0.0 && v.re > 0.0 && v.re.fract() == 0.0 && half(a) > v.re - 0.5 + 1e-9 {
            return true;
        }
    }
    false
}

/// True when z = N makes ψ vanish at x below the wall x = −N + ½
/// (lattice sites the degenerate family never occupies).
fn vanishes_by_site(p: &ZParams, x: HalfInt) -> bool {
    for v in [p.z, p.zp] {
        if v.im == 0.0 && v.re > 0.0 && v.re.fract() == 0.0 && half(x) < -v.re + 0.5 - 1e-9 {
            return true;
        }
    }
    false
}

/// True when v is a nonpositive integer on the real axis (a terminating
/// upper parameter or a gamma pole).
fn is_nonpos_int(v: Complex64) -> bool {
    v.im == 0.0 && v.re <= 0.0 && v.re.fract() == 0.0
}

fn take_real(v: Complex64, what: &str) -> Result<f64, Error> {
    let scale = v.norm().max(1e-30);
    if v.im.abs() > REALNESS_TOL * scale.max(1.0) {
        return Err(Error::numerical(format!(
            "{what} should be real; got imaginary part {} at magnitude {scale}",
            v.im
        )));
    }
    Ok(v.re)
}

/// Log of the positive square root of Γ(x+z+½)Γ(x+z′+½) /
/// (Γ(z−a+½)Γ(z′−a+½)), as half the real part of the log-gamma
/// combination (admissibility makes both pairings positive).
fn log_sqrt_gamma_prefactor(p: &ZParams, a: HalfInt, x: HalfInt) -> f64 {
    let s = log_gamma(p.z + (half(x) + 0.5)).re + log_gamma(p.zp + (half(x) + 0.5)).re
        - log_gamma(p.z - half(a) + 0.5).re
        - log_gamma(p.zp - half(a) + 0.5).re;
    0.5 * s
}

/// ψ_a(x; z, z′, ξ) via the hypergeometric series, transformed to argument
/// ξ so it converges for every ξ ∈ (0, 1):
///
///   ψ_a(x) = √{…} ξ^{(x+a)/2} (1−ξ)^{(z′−z+1)/2}
///            Σ_k (−z+a+½)_k (x+z′+½)_k ξ^k / (Γ(x+a+1+k) k!).
pub fn psi_series(a: HalfInt, x: HalfInt, p: &ZParams, xi: f64) -> Result<f64, Error> {
    check_xi(xi)?;
    if matches!(p.series, Series::DegenerateColumns(_)) {
        // ψ_a(x; z, z′) = (−1)^{x+a} ψ_{−a}(−x; −z, −z′).
        let sign = if (x.plus(a)) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * psi_series(a.neg(), x.neg(), &p.flip(), xi)?);
    }
    if vanishes_by_index(p, a) || vanishes_by_site(p, x) {
        return Ok(0.0);
    }
    if x.plus(a) + 1 <= 0 && !matches!(p.series, Series::DegenerateRows(_)) {
        // Deep below the diagonal x + a = 0 the regularized series seeds
        // through its pole chain and cancels catastrophically; the negation
        // identity ψ_a(x; z, z′) = (−1)^{x+a} ψ_{−a}(−x; −z, −z′) moves the
        // evaluation to the cancellation-free side.  (Rows-degenerate pairs
        // are excluded: their series terminates, stays real-exact, and their
        // flip is the columns case, which reflects back here.)
        let sign = if (x.plus(a)) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * psi_series(a.neg(), x.neg(), &p.flip(), xi)?);
    }
    let big_a = -p.z + (half(a) + 0.5);
    let cb = p.zp + (half(x) + 0.5);
    let cint = x.plus(a) + 1;
    let c = Complex64::new(cint as f64, 0.0);
    let terminating = is_nonpos_int(big_a) || is_nonpos_int(cb);
    let conditioning = big_a.re.min(cb.re);
    let (f, f_scale, pfaff_log) = if cint >= 1 && !terminating && conditioning <= -5.0 {
        if xi >= 0.5 {
            // The Pfaff argument ξ/(ξ−1) leaves the unit disk here, but the
            // contour route is well conditioned in this corner (its two
            // binomial exponents balance as ξ → 1).
            return psi_contour(a, x, p, xi);
        }
        // One upper parameter has a large negative real part, so the series
        // in ξ cancels catastrophically.  The Pfaff transformation
        //   F_reg(A,B;C;ξ) = (1−ξ)^{−A} F_reg(A, C−B; C; ξ/(ξ−1))
        // pairs it with C−B = A + (z−z′), its near-conjugate: the product
        // of their Pochhammer factors keeps a stable sign.
        let (bad, good) = if big_a.re <= cb.re { (big_a, cb) } else { (cb, big_a) };
        let xp = Complex64::new(xi / (xi - 1.0), 0.0);
        let (v, s) = hyp2f1_reg_scaled(bad, c - good, c, xp)?;
        (v, s, -bad * (1.0 - xi).ln())
    } else {
        let (v, s) = hyp2f1_reg_scaled(big_a, cb, c, Complex64::new(xi, 0.0))?;
        (v, s, Complex64::new(0.0, 0.0))
    };
    if f.norm() == 0.0 {
        return Ok(0.0);
    }
    // Compose every large factor in log space: the final value is O(1) even
    // when the gamma prefactor and the regularized sum separately overflow.
    let edge = (p.zp - p.z + 1.0) * 0.5 * (1.0 - xi).ln();
    let log_mag = log_sqrt_gamma_prefactor(p, a, x)
        + 0.5 * (half(x) + half(a)) * xi.ln()
        + f_scale
        + f.norm().ln()
        + edge.re
        + pfaff_log.re;
    let dir = (f / f.norm()) * Complex64::new(0.0, edge.im + pfaff_log.im).exp();
    take_real(dir * log_mag.exp(), "wave function (series route)")
}

/// ψ_a(x; z, z′, ξ) via the contour integral
///
///   √{…} · Γ(z′−a+½)/Γ(z′+x+½) · (1−ξ)^{(z′−z+1)/2}
///   · (1/2πi) ∮ (1−√ξ ω)^{−z′+a−½} (1−√ξ/ω)^{z−a−½} ω^{−x−a−1} dω
///
/// over a circle |ω| = r with √ξ < r < 1/√ξ; there both binomial factors
/// stay in the right half-plane, so principal powers realize the branch
/// with argument 0 at negative real ω, and ω^{−x−a−1} is an integer power.
pub fn psi_contour(a: HalfInt, x: HalfInt, p: &ZParams, xi: f64) -> Result<f64, Error> {
    check_xi(xi)?;
    if matches!(p.series, Series::DegenerateColumns(_)) {
        let sign = if (x.plus(a)) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * psi_contour(a.neg(), x.neg(), &p.flip(), xi)?);
    }
    if vanishes_by_index(p, a) || vanishes_by_site(p, x) {
        return Ok(0.0);
    }
    let sq = xi.sqrt();
    let radius = 0.5 * (sq + 1.0 / sq);
    let e1 = -p.zp + (half(a) - 0.5);
    let e2 = p.z - (half(a) + 0.5);
    let m = x.plus(a); // ω exponent −m−1, an integer power
    let cfg = QuadConfig::default();
    let integral = circle_integral(Complex64::new(0.0, 0.0), radius, &cfg, |w| {
        (Complex64::new(1.0, 0.0) - sq * w).powc(e1)
            * (Complex64::new(1.0, 0.0) - sq / w).powc(e2)
            * w.powi(-(m as i32) - 1)
    })?;
    let log_pref = log_sqrt_gamma_prefactor(p, a, x) + log_gamma(p.zp - half(a) + 0.5)
        - log_gamma(p.zp + (half(x) + 0.5))
        + (p.zp - p.z + 1.0) * 0.5 * (1.0 - xi).ln();
    take_real(log_pref.exp() * integral, "wave function (contour route)")
}

/// Evaluation route selector for the wave functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiRoute {
    Series,
    Contour,
}

/// ψ_a(x; z, z′, ξ) by the requested route (series is the default choice).
pub fn psi_route(a: HalfInt, x: HalfInt, p: &ZParams, xi: f64, route: PsiRoute) -> Result<f64, Error> {
    match route {
        PsiRoute::Series => psi_series(a, x, p, xi),
        PsiRoute::Contour => psi_contour(a, x, p, xi),
    }
}

/// ψ_a(x; z, z′, ξ) — series route.
pub fn psi(a: HalfInt, x: HalfInt, p: &ZParams, xi: f64) -> Result<f64, Error> {
    psi_series(a, x, p, xi)
}

fn check_xi(xi: f64) -> Result<(), Error> {
    if !(0.0 < xi && xi < 1.0) {
        return Err(Error::domain(format!("xi must lie in (0,1), got {xi}")));
    }
    Ok(())
}

/// The second-order difference operator whose eigenfunctions the wave
/// functions are:
///
///   (Df)(x) = √(ξ(z+x+½)(z′+x+½)) f(x+1) + √(ξ(z+x−½)(z′+x−½)) f(x−1)
///             − (x + ξ(z+z′+x)) f(x),
///
/// with D ψ_a = a(1−ξ) ψ_a.
pub fn apply_diff_op(
    f: &dyn Fn(HalfInt) -> Result<f64, Error>,
    x: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    let coeff = |shift: f64| -> Result<f64, Error> {
        let prod = (p.z + (half(x) + shift)) * (p.zp + (half(x) + shift));
        let v = take_real(prod, "hopping coefficient")?;
        if v < 0.0 && v > -1e-12 {
            return Ok(0.0);
        }
        if v < 0.0 {
            return Err(Error::numerical(format!(
                "negative hopping weight {v} at x = {x}"
            )));
        }
        Ok((xi * v).sqrt())
    };
    let up = coeff(0.5)? * f(x.shift(1))?;
    let dn = coeff(-0.5)? * f(x.shift(-1))?;
    let zsum = take_real(p.z + p.zp, "z + z'")?;
    Ok(up + dn - (half(x) + xi * (zsum + half(x))) * f(x)?)
}
