//! Scaled Whittaker functions on (0, ∞) — the continuum limits of the
//! lattice wave functions under (1−ξ)x → u — evaluated through a
//! branch-tracked loop integral around the positive real axis.

use num_complex::Complex64;

use crate::error::Error;
use crate::half::HalfInt;
use crate::measure::ZParams;
use crate::quad::{positive_axis_loop_at, QuadConfig};
use crate::specfun::gamma::log_gamma;

/// w_a(u; z, z′) = (Γ(z−a+½)Γ(z′−a+½))^{−1/2} u^{−1/2} W_{(z+z′)/2−a, (z−z′)/2}(u),
/// computed from the loop representation
///
///   w_a(u) = Γ(z′−a+½) e^{πi(z′−a)} u^{(z−z′)/2}
///            / (2π (Γ(z−a+½)Γ(z′−a+½))^{1/2})
///            · ∫_{+∞}^{0−} ζ^{−z′+a−½} (1+ζ)^{z−a−½} e^{−u(ζ+½)} dζ,
///
/// where the loop comes in from +∞ (arg ζ = 2π), circles the origin
/// clockwise, and returns to +∞ on the principal branch (arg ζ = 0).
pub fn whittaker_w(a: HalfInt, u: f64, p: &ZParams) -> Result<f64, Error> {
    if !(u > 0.0) {
        return Err(Error::domain(format!("whittaker_w needs u > 0, got {u}")));
    }
    let af = a.to_f64();
    // z = N makes the family terminate: w_a ≡ 0 for a ≥ N + ½.
    for v in [p.z, p.zp] {
        if v.im == 0.0 && v.re > 0.0 && v.re.fract() == 0.0 && af > v.re - 0.5 + 1e-9 {
            return Ok(0.0);
        }
    }
    let e1 = -p.zp + (af - 0.5); // exponent of ζ
    let e2 = p.z - (af + 0.5); // exponent of 1 + ζ
    let cfg = QuadConfig::default();
    let leg = ((45.0 / u + 2.0).ln()).max(5.0);
    // For a = −(m+½) the integrand is ((1+ζ)/ζ)^m e^{−uζ}-shaped: on the
    // small circle it reaches 5^m while the integral stays O(1).  The
    // balanced circle size is the Cauchy-estimate minimizer r(1+r) = m/u;
    // shifting the center to r keeps the branch point −1 just outside while
    // (1+ζ)^{m+z} vanishes at the leftmost point, so the integrand peaks at
    // only ~e^{√(mu)} on the contour.  Nonnegative indices keep the small
    // circle (their mass sits on the legs, already well conditioned).
    let m = (-af - 0.5).max(0.0);
    let (center, radius) = if m >= 1.0 {
        let r = 0.5 * ((1.0 + 4.0 * m / u).sqrt() - 1.0);
        (r, r + 0.875)
    } else {
        (0.0, 0.25)
    };
    let integral = positive_axis_loop_at(center, radius, leg, &cfg, |zeta, arg| {
        let ln_zeta = Complex64::new(zeta.norm().ln(), arg);
        ((e1 * ln_zeta).exp())
            * (Complex64::new(1.0, 0.0) + zeta).powc(e2)
            * (-u * (zeta + 0.5)).exp()
    })?;
    // Positive square root of Γ(z−a+½)Γ(z′−a+½) via the real parts.
    let half_log = 0.5 * (log_gamma(p.z - af + 0.5).re + log_gamma(p.zp - af + 0.5).re);
    let pref = (log_gamma(p.zp - af + 0.5)
        + Complex64::new(0.0, std::f64::consts::PI) * (p.zp - af)
        + (p.z - p.zp) * 0.5 * u.ln()
        - half_log)
        .exp()
        / (2.0 * std::f64::consts::PI);
    let v = pref * integral;
    let scale = v.norm().max(1e-30);
    if v.im.abs() > 1e-8 * scale.max(1.0) {
        return Err(Error::numerical(format!(
            "scaled Whittaker value should be real; got {v}"
        )));
    }
    Ok(v.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::classify;
    use crate::specfun::psi::psi_series;

    fn h(n: i64) -> HalfInt {
        HalfInt::new(n)
    }
    fn params(zr: f64, zi: f64, pr: f64, pi: f64) -> ZParams {
        classify(Complex64::new(zr, zi), Complex64::new(pr, pi)).unwrap()
    }

    // Reference values computed with 30-digit arithmetic (mpmath whitw).
    #[test]
    fn matches_reference_values() {
        let cases: [(ZParams, i64, f64, f64); 9] = [
            (params(1.0, 1.0, 1.0, -1.0), 0, 0.8, 0.4634992622767810499941),
            (params(1.0, 1.0, 1.0, -1.0), -2, 2.3, -0.3493115180938010403973),
            (params(1.0, 1.0, 1.0, -1.0), 2, 0.15, 0.5893751973949451930129),
            (params(0.3, 0.0, 0.8, 0.0), 0, 1.1, 0.2733333189665623668439),
            (params(0.3, 0.0, 0.8, 0.0), -3, 0.4, 0.5146094355357483311471),
            (params(-0.3, 0.0, -0.8, 0.0), 1, 2.0, 0.003803428254431566307514),
            (params(-1.0, -1.0, -1.0, 1.0), -1, 0.6, 0.5330853518584274365473),
            // Deeply negative indices exercise the saddle-adapted circle.
            (params(1.0, 1.0, 1.0, -1.0), -21, 0.9, -0.02509683777701188762557),
            (params(0.3, 0.0, 0.8, 0.0), -16, 1.3, -0.2527719753017797586341),
        ];
        for (p, af, u, want) in cases {
            let got = whittaker_w(h(af), u, &p).unwrap();
            assert!(
                (got - want).abs() < 1e-10 * want.abs().max(1.0),
                "w(a={}, u={u}) = {got}, want {want}",
                h(af)
            );
        }
    }

    #[test]
    fn symmetric_in_the_two_parameters() {
        let p = params(0.3, 0.0, 0.8, 0.0);
        let q = params(0.8, 0.0, 0.3, 0.0);
        for (af, u) in [(0, 0.9), (-2, 1.7), (1, 0.25)] {
            let a = whittaker_w(h(af), u, &p).unwrap();
            let b = whittaker_w(h(af), u, &q).unwrap();
            assert!((a - b).abs() < 1e-10 * a.abs().max(1.0));
        }
    }

    #[test]
    fn lattice_functions_converge_to_whittaker() {
        // ψ_a(x; z, z′, ξ) ≈ √(1−ξ) w_a(u) as ξ↑1 with (1−ξ)x → u.
        let p = params(1.0, 1.0, 1.0, -1.0);
        let a = h(1); // a = 3/2
        let u = 1.2;
        let mut errs = Vec::new();
        for xi in [0.9_f64, 0.99, 0.999] {
            // Choose the lattice site nearest u/(1−ξ) and use its exact u.
            let xf = (u / (1.0 - xi)).round() as i64;
            let x = HalfInt::new(xf);
            let ueff = (1.0 - xi) * x.to_f64();
            let lhs = psi_series(a, x, &p, xi).unwrap() / (1.0 - xi).sqrt();
            let rhs = whittaker_w(a, ueff, &p).unwrap();
            errs.push((lhs - rhs).abs() / rhs.abs().max(1.0));
        }
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "no decay: {errs:?}");
        assert!(errs[2] < 1e-2, "final gap {}", errs[2]);
    }
}

