//! The fixed-time correlation kernel of the lattice point process, in four
//! independent routes: the wave-function series, the double contour
//! integral (gauged), the integrable two-term form, and the finite Meixner
//! sum for integral parameters.

use num_complex::Complex64;

use crate::error::Error;
use crate::half::HalfInt;
use crate::measure::{Series, ZParams};
use crate::quad::{double_circle_integral, QuadConfig};
use crate::specfun::meixner::meixner_tilde;
use crate::specfun::psi::psi_series;

use super::{gauge_phi, sum_certified, take_real};

/// Relative tail target for certified series truncation.
pub(crate) const SERIES_TOL: f64 = 1e-12;

/// For a rows-degenerate pair (z = N) the series representation is only
/// valid on sites x ≥ −N + ½: everything below that wall is frozen (always
/// occupied) while the wave functions vanish there identically.
pub(crate) fn check_wall(p: &ZParams, pts: &[HalfInt]) -> Result<(), Error> {
    if let Series::DegenerateRows(n) = p.series {
        for &x in pts {
            if x.to_f64() < -(n as f64) + 0.5 - 1e-9 {
                return Err(Error::domain(format!(
                    "site {x} lies below the frozen wall -{n}+1/2; \
                     the series route does not represent the kernel there"
                )));
            }
        }
    }
    Ok(())
}

/// unK(x, y) = Σ_{a ∈ ℤ′₊} ψ_a(x) ψ_a(y), tail-certified.  Symmetric in
/// (x, y) and a projection kernel; for rows-degenerate parameters the sum
/// truncates naturally after N terms.
pub fn static_kernel_series(x: HalfInt, y: HalfInt, p: &ZParams, xi: f64) -> Result<f64, Error> {
    if !(0.0 < xi && xi < 1.0) {
        return Err(Error::domain(format!("xi must lie in (0,1), got {xi}")));
    }
    check_wall(p, &[x, y])?;
    let stop = p.max_rows().map(|n| n as usize);
    sum_certified(SERIES_TOL, stop, |k| {
        let a = HalfInt::new(k as i64);
        Ok(psi_series(a, x, p, xi)? * psi_series(a, y, p, xi)?)
    })
}

/// The gauged kernel K̂(x, y) as a double contour integral over two circles
/// |ω| = (1 + ξ^{−1/2})/2 (both enclosing √ξ and 0, excluding ξ^{−1/2},
/// with |ω₁ω₂| > 1 so the coupling denominator never vanishes):
///
///   K̂(x,y) = (2πi)^{−2} ∮∮ (1−√ξ ω₁)^{−z′}(1−√ξ/ω₁)^{z}
///             (1−√ξ ω₂)^{−z}(1−√ξ/ω₂)^{z′}
///             ω₁^{−x−½} ω₂^{−y−½} / (ω₁ω₂ − 1) dω₁ dω₂.
///
/// Related to the series route by unK = φ(x,y)·K̂ (gauge transformation).
pub fn static_kernel_contour(
    x: HalfInt,
    y: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<Complex64, Error> {
    if !(0.0 < xi && xi < 1.0) {
        return Err(Error::domain(format!("xi must lie in (0,1), got {xi}")));
    }
    let srt = xi.sqrt();
    let r = 0.5 * (1.0 + 1.0 / srt);
    let cfg = QuadConfig::default();
    let nx = i32::try_from(x.floor() + 1).map_err(|_| Error::domain("site out of range"))?;
    let ny = i32::try_from(y.floor() + 1).map_err(|_| Error::domain("site out of range"))?;
    let z = p.z;
    let zp = p.zp;
    let zero = Complex64::new(0.0, 0.0);
    double_circle_integral(zero, r, zero, r, &cfg, move |w1, w2| {
        let logs = (1.0 - srt * w1).ln() * (-zp)
            + (1.0 - srt / w1).ln() * z
            + (1.0 - srt * w2).ln() * (-z)
            + (1.0 - srt / w2).ln() * zp;
        logs.exp() * w1.powi(-nx) * w2.powi(-ny) / (w1 * w2 - 1.0)
    })
}

/// The contour route expressed in the series gauge:
/// unK(x, y) = φ(x, y) K̂(x, y), audited real.
pub fn static_kernel_contour_ungauged(
    x: HalfInt,
    y: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    let hat = static_kernel_contour(x, y, p, xi)?;
    take_real(gauge_phi(p, x, y) * hat, "static kernel (contour route)")
}

/// The integrable two-term form (a Christoffel–Darboux-style collapse of
/// the series): unK(x,y) = √(zz′ξ)/(1−ξ) · (ψ_{−½}(x)ψ_{½}(y) −
/// ψ_{½}(x)ψ_{−½}(y))/(x − y), valid off-diagonal.
pub fn static_kernel_integrable(
    x: HalfInt,
    y: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    if x == y {
        return Err(Error::domain(
            "integrable form has a removable singularity on the diagonal; use the series",
        ));
    }
    check_wall(p, &[x, y])?;
    let c = take_real(p.z * p.zp, "zz' in the integrable prefactor")?;
    let plus = HalfInt::HALF;
    let minus = HalfInt::MINUS_HALF;
    let num = psi_series(minus, x, p, xi)? * psi_series(plus, y, p, xi)?
        - psi_series(plus, x, p, xi)? * psi_series(minus, y, p, xi)?;
    Ok((c * xi).sqrt() / (1.0 - xi) * num / (x.minus(y) as f64))
}

/// The Meixner kernel on ℤ₊ × ℤ₊: the rank-N projection
/// Σ_{m=0}^{N−1} M̃_m(x̃) M̃_m(ỹ) onto the lowest N orthonormal Meixner
/// functions.  Under x̃ = x + N − ½ it equals the lattice kernel at the
/// integral pair (N, N+α).
pub fn meixner_kernel(xt: u64, yt: u64, nrows: u32, alpha: f64, xi: f64) -> Result<f64, Error> {
    if nrows == 0 {
        return Err(Error::domain("the Meixner kernel needs at least one row"));
    }
    let mut sum = 0.0;
    for m in 0..nrows as u64 {
        sum += meixner_tilde(m, xt, alpha, xi)? * meixner_tilde(m, yt, alpha, xi)?;
    }
    Ok(sum)
}
