//! Scaling limit of the particle–hole kernel on the punctured real line:
//! the lattice is compressed by (1−ξ) as ξ↑1 and the wave functions turn
//! into scaled Whittaker functions.  Three routes are provided: the
//! sign-block series (the damping e^{−a|s−t|} survives the limit), double
//! loop integrals around the positive axis obtained by resumming the series
//! as a geometric progression, and the two-term closed forms at equal
//! times.  Mixed-sign blocks have no equal-time value — their series
//! diverges — and are rejected there.

use num_complex::Complex64;

use crate::error::Error;
use crate::half::HalfInt;
use crate::kernel::static_kernel::SERIES_TOL;
use crate::kernel::{damped_pair_sum, take_real};
use crate::measure::{Series, ZParams};
use crate::quad::{double_positive_axis_loop, LoopSpec, QuadConfig};
use crate::specfun::whittaker::whittaker_w;

const PI: f64 = std::f64::consts::PI;

fn require_non_degenerate(p: &ZParams) -> Result<(), Error> {
    if matches!(
        p.series,
        Series::DegenerateRows(_) | Series::DegenerateColumns(_)
    ) {
        return Err(Error::domain(
            "the continuum kernel needs a non-degenerate parameter pair",
        ));
    }
    Ok(())
}

fn check_args(s: f64, u: f64, t: f64, v: f64) -> Result<(), Error> {
    if !s.is_finite() || !t.is_finite() {
        return Err(Error::domain("kernel times must be finite"));
    }
    if u == 0.0 || v == 0.0 || !u.is_finite() || !v.is_finite() {
        return Err(Error::domain(
            "continuum space arguments live on the punctured real line",
        ));
    }
    Ok(())
}

fn pair_sum(
    gap: f64,
    alternating: bool,
    left: impl FnMut(HalfInt) -> Result<f64, Error>,
    right: impl FnMut(HalfInt) -> Result<f64, Error>,
) -> Result<f64, Error> {
    damped_pair_sum(SERIES_TOL, gap, alternating, left, right)
}

/// Series route for the continuum kernel, mirroring the lattice sign
/// blocks: positive arguments carry the original parameters, negative ones
/// the negated pair, mixed blocks alternate in sign.  The equal-time
/// doubly-negative block is routed through the negated-parameter ascending
/// series (the analog of the orthonormal completion on the lattice);
/// equal-time mixed blocks are rejected.
pub fn whittaker_kernel(s: f64, u: f64, t: f64, v: f64, p: &ZParams) -> Result<f64, Error> {
    require_non_degenerate(p)?;
    check_args(s, u, t, v)?;
    let upper = s >= t;
    let gap = (s - t).abs();
    let fp = p.flip();
    match (u > 0.0, v > 0.0) {
        (true, true) => {
            if upper {
                pair_sum(
                    gap,
                    false,
                    |a| whittaker_w(a, u, p),
                    |a| whittaker_w(a, v, p),
                )
            } else {
                Ok(-pair_sum(
                    gap,
                    false,
                    |a| whittaker_w(a.neg(), u, p),
                    |a| whittaker_w(a.neg(), v, p),
                )?)
            }
        }
        (true, false) => {
            let vm = -v;
            if s == t {
                return Err(Error::domain(
                    "mixed-sign blocks have no equal-time value: the series diverges",
                ));
            }
            if upper {
                pair_sum(
                    gap,
                    true,
                    |a| whittaker_w(a, u, p),
                    |a| whittaker_w(a.neg(), vm, &fp),
                )
            } else {
                pair_sum(
                    gap,
                    true,
                    |a| whittaker_w(a.neg(), u, p),
                    |a| whittaker_w(a, vm, &fp),
                )
            }
        }
        (false, true) => {
            let um = -u;
            if s == t {
                return Err(Error::domain(
                    "mixed-sign blocks have no equal-time value: the series diverges",
                ));
            }
            if upper {
                Ok(-pair_sum(
                    gap,
                    true,
                    |a| whittaker_w(a.neg(), um, &fp),
                    |a| whittaker_w(a, v, p),
                )?)
            } else {
                Ok(-pair_sum(
                    gap,
                    true,
                    |a| whittaker_w(a, um, &fp),
                    |a| whittaker_w(a.neg(), v, p),
                )?)
            }
        }
        (false, false) => {
            let (um, vm) = (-u, -v);
            if s == t {
                pair_sum(
                    0.0,
                    false,
                    |a| whittaker_w(a, um, &fp),
                    |a| whittaker_w(a, vm, &fp),
                )
            } else if upper {
                Ok(-pair_sum(
                    gap,
                    false,
                    |a| whittaker_w(a.neg(), um, &fp),
                    |a| whittaker_w(a.neg(), vm, &fp),
                )?)
            } else {
                pair_sum(
                    gap,
                    false,
                    |a| whittaker_w(a, um, &fp),
                    |a| whittaker_w(a, vm, &fp),
                )
            }
        }
    }
}

/// Two-term closed form of the equal-time continuum kernel (w̃ carries the
/// negated parameters):
///
///   K(u,v)   =  √(zz′) (w_{−½}(u) w_{½}(v) − w_{½}(u) w_{−½}(v)) / (u−v),
///   K(u,−v)  =  √(zz′) (w_{−½}(u) w̃_{−½}(v) + w_{½}(u) w̃_{½}(v)) / (u+v),
///   K(−u,v)  = −√(zz′) (w̃_{½}(u) w_{½}(v) + w̃_{−½}(u) w_{−½}(v)) / (u+v),
///   K(−u,−v) =  √(zz′) (w̃_{−½}(u) w̃_{½}(v) − w̃_{½}(u) w̃_{−½}(v)) / (u−v).
///
/// Same-sign blocks have a removable singularity on the diagonal; use the
/// series route there.
pub fn whittaker_kernel_integrable(u: f64, v: f64, p: &ZParams) -> Result<f64, Error> {
    require_non_degenerate(p)?;
    check_args(0.0, u, 0.0, v)?;
    let c = take_real(p.z * p.zp, "zz' in the integrable prefactor")?;
    let pref = c.sqrt();
    let fp = p.flip();
    let plus = HalfInt::HALF;
    let minus = HalfInt::MINUS_HALF;
    let diagonal = || {
        Error::domain("integrable form has a removable singularity on the diagonal; use the series")
    };
    match (u > 0.0, v > 0.0) {
        (true, true) => {
            if u == v {
                return Err(diagonal());
            }
            let num = whittaker_w(minus, u, p)? * whittaker_w(plus, v, p)?
                - whittaker_w(plus, u, p)? * whittaker_w(minus, v, p)?;
            Ok(pref * num / (u - v))
        }
        (true, false) => {
            let vm = -v;
            let num = whittaker_w(minus, u, p)? * whittaker_w(minus, vm, &fp)?
                + whittaker_w(plus, u, p)? * whittaker_w(plus, vm, &fp)?;
            Ok(pref * num / (u + vm))
        }
        (false, true) => {
            let um = -u;
            let num = whittaker_w(plus, um, &fp)? * whittaker_w(plus, v, p)?
                + whittaker_w(minus, um, &fp)? * whittaker_w(minus, v, p)?;
            Ok(-pref * num / (um + v))
        }
        (false, false) => {
            let (um, vm) = (-u, -v);
            if um == vm {
                return Err(diagonal());
            }
            let num = whittaker_w(minus, um, &fp)? * whittaker_w(plus, vm, &fp)?
                - whittaker_w(plus, um, &fp)? * whittaker_w(minus, vm, &fp)?;
            Ok(pref * num / (um - vm))
        }
    }
}

/// Loop holding the geometric-progression ratio |ζ/(1+ζ)| below q: a circle
/// about the origin to the right of the forbidden disk through −q/(q−1) and
/// −q/(q+1).
fn ratio_below_loop(q: f64, decay: f64) -> LoopSpec {
    LoopSpec {
        center: 0.0,
        radius: 0.5 * q / (q + 1.0),
        leg_len: ((45.0 / decay + 2.0).ln()).max(5.0),
    }
}

/// Loop holding |(1+ζ)/ζ| below q: the forbidden region is the closed disk
/// bounded by the Apollonius circle |1+ζ| = q|ζ| (center 1/(q²−1), radius
/// q/(q²−1)), so a concentric circle √q times larger encloses it while
/// still excluding −1.
fn ratio_above_loop(q: f64, decay: f64) -> LoopSpec {
    let denom = q * q - 1.0;
    LoopSpec {
        center: 1.0 / denom,
        radius: q.powf(1.5) / denom,
        leg_len: ((45.0 / decay + 2.0).ln()).max(5.0),
    }
}

fn branch_pow(zeta: Complex64, arg: f64, e: Complex64) -> Complex64 {
    (e * Complex64::new(zeta.norm().ln(), arg)).exp()
}

/// Same-parameter block (both arguments positive) by the resummed double
/// loop.  For s > t both loops keep |ζ/(1+ζ)| < e^{(s−t)/2}; for s < t both
/// keep |(1+ζ)/ζ| < e^{(t−s)/2}; the denominator then never vanishes.
fn contour_positive_positive(
    s: f64,
    u: f64,
    t: f64,
    v: f64,
    p: &ZParams,
    cfg: &QuadConfig,
) -> Result<f64, Error> {
    let q = (0.5 * (s - t).abs()).exp();
    let (spec1, spec2) = if s > t {
        (ratio_below_loop(q, u), ratio_below_loop(q, v))
    } else {
        (ratio_above_loop(q, u), ratio_above_loop(q, v))
    };
    let (z, zp) = (p.z, p.zp);
    let theta = (s - t).exp();
    let raw = double_positive_axis_loop(
        spec1,
        spec2,
        cfg,
        |zeta, arg| {
            branch_pow(zeta, arg, -zp)
                * (Complex64::new(1.0, 0.0) + zeta).powc(z)
                * (-u * (zeta + 0.5)).exp()
        },
        |zeta, arg| {
            branch_pow(zeta, arg, -z)
                * (Complex64::new(1.0, 0.0) + zeta).powc(zp)
                * (-v * (zeta + 0.5)).exp()
        },
        |z1, z2| {
            let one = Complex64::new(1.0, 0.0);
            ((one + z1) * (one + z2) * theta - z1 * z2).inv()
        },
    )?;
    let pref = (Complex64::new(0.0, PI) * (z + zp)).exp()
        * ((z - zp) * 0.5 * (u / v).ln()).exp()
        * (0.5 * (s - t)).exp();
    take_real(
        pref * raw / Complex64::new(-4.0 * PI * PI, 0.0),
        "continuum kernel (contour route, same-parameter block)",
    )
}

/// Mixed block (first argument positive, second negative with magnitude vm)
/// by the resummed double loop; the loops differ (one of each kind), the
/// second factor carries the negated exponents ζ^{z′}(1+ζ)^{−z}, and the
/// index-dependent gamma factors collapse through the reflection formula,
/// leaving the prefactor √(sin πz sin πz′)/sin πz′.
fn contour_positive_negative(
    s: f64,
    u: f64,
    t: f64,
    vm: f64,
    p: &ZParams,
    cfg: &QuadConfig,
) -> Result<f64, Error> {
    let q = (0.5 * (s - t).abs()).exp();
    let (spec1, spec2) = if s > t {
        (ratio_below_loop(q, u), ratio_above_loop(q, vm))
    } else {
        (ratio_above_loop(q, u), ratio_below_loop(q, vm))
    };
    let (z, zp) = (p.z, p.zp);
    let theta = (s - t).exp();
    let raw = double_positive_axis_loop(
        spec1,
        spec2,
        cfg,
        |zeta, arg| {
            branch_pow(zeta, arg, -zp)
                * (Complex64::new(1.0, 0.0) + zeta).powc(z)
                * (-u * (zeta + 0.5)).exp()
        },
        |zeta, arg| {
            branch_pow(zeta, arg, zp)
                * (Complex64::new(1.0, 0.0) + zeta).powc(-z)
                * (-vm * (zeta + 0.5)).exp()
        },
        |z1, z2| {
            let one = Complex64::new(1.0, 0.0);
            ((one + z1) * z2 * theta - z1 * (one + z2)).inv()
        },
    )?;
    let sines = (PI * z).sin() * (PI * zp).sin();
    if sines.im.abs() > 1e-12 * sines.norm().max(1.0) || sines.re <= 0.0 {
        return Err(Error::numerical(format!(
            "sine product for the mixed-block prefactor should be real positive; got {sines}"
        )));
    }
    let pref = sines.re.sqrt() / (PI * zp).sin()
        * ((z - zp) * 0.5 * (u / vm).ln()).exp()
        * (0.5 * (s - t)).exp();
    take_real(
        pref * raw / Complex64::new(4.0 * PI * PI, 0.0),
        "continuum kernel (contour route, mixed block)",
    )
}

/// Double-loop route for the continuum kernel at unequal times.  The two
/// directly resummed blocks are (+,+) and (+,−); the remaining blocks
/// follow from the antisymmetry K(s,−u;t,v) = −K(s,v;t,−u) and the
/// parameter-negation relation K(s,−u;t,−v) = K_flip(t,u;s,v).
pub fn whittaker_kernel_contour(
    s: f64,
    u: f64,
    t: f64,
    v: f64,
    p: &ZParams,
    cfg: &QuadConfig,
) -> Result<f64, Error> {
    require_non_degenerate(p)?;
    check_args(s, u, t, v)?;
    if s == t {
        return Err(Error::domain(
            "the loop geometry degenerates at equal times; use the series or closed form",
        ));
    }
    match (u > 0.0, v > 0.0) {
        (true, true) => contour_positive_positive(s, u, t, v, p, cfg),
        (true, false) => contour_positive_negative(s, u, t, -v, p, cfg),
        (false, true) => Ok(-contour_positive_negative(s, v, t, -u, p, cfg)?),
        (false, false) => contour_positive_positive(t, -u, s, -v, &p.flip(), cfg),
    }
}
