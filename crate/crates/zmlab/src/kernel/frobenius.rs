//! Space–time correlation kernel of the stationary process in the finite
//! particle–hole encoding (the symmetric difference of the dense
//! configuration with the negative half-lattice).  The kernel splits into
//! four sign blocks: arguments on the positive axis keep the original
//! parameters, arguments on the negative axis see the negated pair, and the
//! mixed blocks alternate in sign along the series.  Equal-time values
//! reproduce the static particle–hole kernel, whose two-term closed form is
//! also provided as an independent route.

use crate::error::Error;
use crate::half::HalfInt;
use crate::kernel::static_kernel::SERIES_TOL;
use crate::kernel::{damped_pair_sum, take_real};
use crate::measure::{Series, ZParams};
use crate::specfun::psi::psi_series;

fn require_non_degenerate(p: &ZParams) -> Result<(), Error> {
    if matches!(
        p.series,
        Series::DegenerateRows(_) | Series::DegenerateColumns(_)
    ) {
        return Err(Error::domain(
            "the particle-hole kernel needs a non-degenerate parameter pair: \
             the negated pair must also carry wave functions",
        ));
    }
    Ok(())
}

fn require_stationary_xi(xi: f64) -> Result<(), Error> {
    if !(xi > 0.0 && xi < 1.0) || !xi.is_finite() {
        return Err(Error::domain("the stationary mixing parameter must lie in (0, 1)"));
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

/// Both arguments positive.  Ascending branch (s ≥ t):
/// Σ e^{−a|s−t|} ψ_a(x) ψ_a(y); descending: −Σ e^{−a|s−t|} ψ_{−a}(x) ψ_{−a}(y).
fn block_positive_positive(
    upper: bool,
    gap: f64,
    x: HalfInt,
    y: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    if upper {
        pair_sum(
            gap,
            false,
            |a| psi_series(a, x, p, xi),
            |a| psi_series(a, y, p, xi),
        )
    } else {
        Ok(-pair_sum(
            gap,
            false,
            |a| psi_series(a.neg(), x, p, xi),
            |a| psi_series(a.neg(), y, p, xi),
        )?)
    }
}

/// First argument positive, second negative (magnitude ya).  The series
/// alternates: Σ (−1)^k e^{−a|s−t|} ψ_{±a}(x) ψ_{∓a}(ya; negated pair) with
/// the index signs tied to the time order.
fn block_positive_negative(
    upper: bool,
    gap: f64,
    x: HalfInt,
    ya: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    let fp = p.flip();
    if upper {
        pair_sum(
            gap,
            true,
            |a| psi_series(a, x, p, xi),
            |a| psi_series(a.neg(), ya, &fp, xi),
        )
    } else {
        pair_sum(
            gap,
            true,
            |a| psi_series(a.neg(), x, p, xi),
            |a| psi_series(a, ya, &fp, xi),
        )
    }
}

/// First argument negative (magnitude xa), second positive.  Equal to minus
/// the transposed mixed block.
fn block_negative_positive(
    upper: bool,
    gap: f64,
    xa: HalfInt,
    y: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    let fp = p.flip();
    if upper {
        Ok(-pair_sum(
            gap,
            true,
            |a| psi_series(a.neg(), xa, &fp, xi),
            |a| psi_series(a, y, p, xi),
        )?)
    } else {
        Ok(-pair_sum(
            gap,
            true,
            |a| psi_series(a, xa, &fp, xi),
            |a| psi_series(a.neg(), y, p, xi),
        )?)
    }
}

/// Both arguments negative (magnitudes xa, ya), strictly distinct times.
/// At equal times this branch must not be used: the ascending form sums the
/// complementary projector and lands off by a Kronecker delta (the
/// orthonormal completion identity), so the router substitutes the negated
/// static series instead.
fn block_negative_negative(
    upper: bool,
    gap: f64,
    xa: HalfInt,
    ya: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    if gap == 0.0 {
        return Err(Error::numerical(
            "equal-time lower-right block reached the unequal-time series; \
             this branch omits the on-diagonal delta and must be rerouted",
        ));
    }
    let fp = p.flip();
    if upper {
        Ok(-pair_sum(
            gap,
            false,
            |a| psi_series(a.neg(), xa, &fp, xi),
            |a| psi_series(a.neg(), ya, &fp, xi),
        )?)
    } else {
        pair_sum(
            gap,
            false,
            |a| psi_series(a, xa, &fp, xi),
            |a| psi_series(a, ya, &fp, xi),
        )
    }
}

/// Space–time kernel of the stationary process in the particle–hole
/// encoding, dispatching on the signs of the space arguments.  The
/// ascending branch applies for s ≥ t and the descending for s < t; the
/// equal-time doubly-negative block is routed through the orthonormal
/// completion (it equals the static series with negated parameters).
pub fn frobenius_kernel(
    s: f64,
    x: HalfInt,
    t: f64,
    y: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    require_non_degenerate(p)?;
    require_stationary_xi(xi)?;
    if !s.is_finite() || !t.is_finite() {
        return Err(Error::domain("kernel times must be finite"));
    }
    let upper = s >= t;
    let gap = (s - t).abs();
    match (x.is_positive(), y.is_positive()) {
        (true, true) => block_positive_positive(upper, gap, x, y, p, xi),
        (true, false) => block_positive_negative(upper, gap, x, y.neg(), p, xi),
        (false, true) => block_negative_positive(upper, gap, x.neg(), y, p, xi),
        (false, false) => {
            if s == t {
                block_positive_positive(true, 0.0, x.neg(), y.neg(), &p.flip(), xi)
            } else {
                block_negative_negative(upper, gap, x.neg(), y.neg(), p, xi)
            }
        }
    }
}

/// Two-term closed form of the equal-time particle–hole kernel.  Writing
/// ψ̃ for the wave functions with negated parameters, the four sign blocks
/// collapse to ratios of ψ_{±½}, ψ̃_{±½} over x∓y, with a common prefactor
/// √(zz′ξ)/(1−ξ).  Same-sign blocks have a removable singularity on the
/// diagonal; use the series route there.
pub fn frobenius_kernel_integrable(
    x: HalfInt,
    y: HalfInt,
    p: &ZParams,
    xi: f64,
) -> Result<f64, Error> {
    require_non_degenerate(p)?;
    require_stationary_xi(xi)?;
    let c = take_real(p.z * p.zp, "zz' in the integrable prefactor")?;
    let pref = (c * xi).sqrt() / (1.0 - xi);
    let fp = p.flip();
    let plus = HalfInt::HALF;
    let minus = HalfInt::MINUS_HALF;
    let diagonal = || {
        Error::domain("integrable form has a removable singularity on the diagonal; use the series")
    };
    match (x.is_positive(), y.is_positive()) {
        (true, true) => {
            if x == y {
                return Err(diagonal());
            }
            let num = psi_series(minus, x, p, xi)? * psi_series(plus, y, p, xi)?
                - psi_series(plus, x, p, xi)? * psi_series(minus, y, p, xi)?;
            Ok(pref * num / (x.minus(y) as f64))
        }
        (true, false) => {
            let ya = y.neg();
            let num = psi_series(minus, x, p, xi)? * psi_series(minus, ya, &fp, xi)?
                + psi_series(plus, x, p, xi)? * psi_series(plus, ya, &fp, xi)?;
            Ok(pref * num / (x.plus(ya) as f64))
        }
        (false, true) => {
            let xa = x.neg();
            let num = psi_series(plus, xa, &fp, xi)? * psi_series(plus, y, p, xi)?
                + psi_series(minus, xa, &fp, xi)? * psi_series(minus, y, p, xi)?;
            Ok(-pref * num / (xa.plus(y) as f64))
        }
        (false, false) => {
            let xa = x.neg();
            let ya = y.neg();
            if xa == ya {
                return Err(diagonal());
            }
            let num = psi_series(minus, xa, &fp, xi)? * psi_series(plus, ya, &fp, xi)?
                - psi_series(plus, xa, &fp, xi)? * psi_series(minus, ya, &fp, xi)?;
            Ok(pref * num / (xa.minus(ya) as f64))
        }
    }
}
