//! Admissible time curves ξ(t).
//!
//! A curve is stored as the exponent A(t) = −½ ln ξ(t), piecewise linear
//! between breakpoints and constant beyond them.  Admissibility requires
//! A(t) > 0 (so ξ ∈ (0,1)) and |Ȧ| ≤ 1 on every segment; the slope bound
//! keeps both jump-rate factors of the associated birth–death process
//! nonnegative.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Piecewise-linear admissible curve A(t) = −½ ln ξ(t).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XiCurve {
    /// Strictly increasing (time, A) pairs; a single pair is a constant curve.
    breakpoints: Vec<(f64, f64)>,
}

/// Slope tolerance: |Ȧ| may equal 1 exactly (pure birth / pure death), and
/// floating-point construction of such curves must not be rejected.
const SLOPE_EPS: f64 = 1e-12;

impl XiCurve {
    /// Build a curve from (time, A) breakpoints, validating admissibility.
    pub fn new(breakpoints: Vec<(f64, f64)>) -> Result<Self, Error> {
        if breakpoints.is_empty() {
            return Err(Error::domain("a curve needs at least one breakpoint"));
        }
        for &(t, a) in &breakpoints {
            if !t.is_finite() || !a.is_finite() {
                return Err(Error::domain("curve breakpoints must be finite"));
            }
            if a <= 0.0 {
                return Err(Error::domain(format!(
                    "curve exponent must stay positive, got A({t}) = {a}"
                )));
            }
        }
        for w in breakpoints.windows(2) {
            let (t0, a0) = w[0];
            let (t1, a1) = w[1];
            if t1 <= t0 {
                return Err(Error::domain(format!(
                    "breakpoint times must increase strictly: {t0} then {t1}"
                )));
            }
            let slope = (a1 - a0) / (t1 - t0);
            if slope.abs() > 1.0 + SLOPE_EPS {
                return Err(Error::domain(format!(
                    "curve slope {slope} exceeds the admissible bound |slope| <= 1"
                )));
            }
        }
        Ok(XiCurve { breakpoints })
    }

    /// Build from (time, ξ) samples: A = −½ ln ξ, linear in between.
    pub fn from_xi_points(points: &[(f64, f64)]) -> Result<Self, Error> {
        let bps = points
            .iter()
            .map(|&(t, xi)| {
                if !(0.0 < xi && xi < 1.0) {
                    return Err(Error::domain(format!("xi must lie in (0,1), got {xi}")));
                }
                Ok((t, -0.5 * xi.ln()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        XiCurve::new(bps)
    }

    /// The constant curve ξ(t) ≡ ξ.
    pub fn stationary(xi: f64) -> Result<Self, Error> {
        XiCurve::from_xi_points(&[(0.0, xi)])
    }

    /// ξ increasing at the maximal admissible speed (Ȧ = −1) on [t0, t1],
    /// ending at `xi_end`; constant outside.
    pub fn ascending(xi_end: f64, t0: f64, t1: f64) -> Result<Self, Error> {
        if t1 <= t0 {
            return Err(Error::domain("ascending segment needs t0 < t1"));
        }
        let a_end = -0.5 * xi_end.ln();
        if !(0.0 < xi_end && xi_end < 1.0) {
            return Err(Error::domain(format!("xi must lie in (0,1), got {xi_end}")));
        }
        XiCurve::new(vec![(t0, a_end + (t1 - t0)), (t1, a_end)])
    }

    /// ξ decreasing at the maximal admissible speed (Ȧ = +1) on [t0, t1],
    /// starting from `xi_start`; constant outside.
    pub fn descending(xi_start: f64, t0: f64, t1: f64) -> Result<Self, Error> {
        if t1 <= t0 {
            return Err(Error::domain("descending segment needs t0 < t1"));
        }
        if !(0.0 < xi_start && xi_start < 1.0) {
            return Err(Error::domain(format!("xi must lie in (0,1), got {xi_start}")));
        }
        let a0 = -0.5 * xi_start.ln();
        XiCurve::new(vec![(t0, a0), (t1, a0 + (t1 - t0))])
    }

    /// A(t), extended by constants beyond the first/last breakpoint.
    pub fn a(&self, t: f64) -> f64 {
        let bps = &self.breakpoints;
        if t <= bps[0].0 {
            return bps[0].1;
        }
        if t >= bps[bps.len() - 1].0 {
            return bps[bps.len() - 1].1;
        }
        let i = bps.partition_point(|&(bt, _)| bt <= t);
        let (t0, a0) = bps[i - 1];
        let (t1, a1) = bps[i];
        a0 + (a1 - a0) * (t - t0) / (t1 - t0)
    }

    /// Ȧ(t): the segment slope, 0 beyond the ends; at a breakpoint the
    /// right-hand slope (rates are càdlàg in time).
    pub fn a_dot(&self, t: f64) -> f64 {
        let bps = &self.breakpoints;
        if t < bps[0].0 || t >= bps[bps.len() - 1].0 {
            return 0.0;
        }
        let i = bps.partition_point(|&(bt, _)| bt <= t);
        let (t0, a0) = bps[i - 1];
        let (t1, a1) = bps[i];
        (a1 - a0) / (t1 - t0)
    }

    /// ξ(t) = e^{−2A(t)} ∈ (0, 1).
    pub fn xi(&self, t: f64) -> f64 {
        (-2.0 * self.a(t)).exp()
    }

    /// Up-jump rate factor α(t) = (1 − Ȧ(t)) ξ(t)/(1 − ξ(t)) ≥ 0.
    pub fn alpha(&self, t: f64) -> f64 {
        let xi = self.xi(t);
        ((1.0 - self.a_dot(t)) * xi / (1.0 - xi)).max(0.0)
    }

    /// Down-jump rate factor β(t) = (1 + Ȧ(t))/(1 − ξ(t)) ≥ 0.
    pub fn beta(&self, t: f64) -> f64 {
        ((1.0 + self.a_dot(t)) / (1.0 - self.xi(t))).max(0.0)
    }

    /// True when A is constant (a single breakpoint or all equal values).
    pub fn is_stationary(&self) -> bool {
        self.breakpoints.windows(2).all(|w| w[0].1 == w[1].1)
    }

    /// Breakpoint times strictly inside (lo, hi), in increasing order; these
    /// are the only points where the rate functions lose smoothness.
    pub fn interior_breakpoints(&self, lo: f64, hi: f64) -> Vec<f64> {
        self.breakpoints
            .iter()
            .map(|&(t, _)| t)
            .filter(|&t| lo < t && t < hi)
            .collect()
    }
}
