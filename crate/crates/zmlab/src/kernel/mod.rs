//! Correlation kernels of the lattice point processes: the static kernel,
//! its space-time extension, the particle–hole (Frobenius) kernel, the
//! Meixner specialization, and the two continuum scaling limits.  Every
//! kernel ships at least two independent evaluation routes (series vs
//! contour integral vs closed form) together with the gauge functions that
//! relate them, plus the determinant evaluator producing correlation
//! functions.

pub mod extended;
pub mod frobenius;
pub mod gamma_kernel;
pub mod static_kernel;
pub mod whittaker_kernel;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::half::HalfInt;
use crate::measure::ZParams;
use crate::specfun::gamma::log_gamma;

/// Imaginary residue allowed when a provably real kernel value is assembled
/// from complex arithmetic; anything larger fails loudly.
pub const KERNEL_REALNESS_TOL: f64 = 1e-9;

/// One space-time argument (t, x) of an extended kernel.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpacetimeArg {
    pub t: f64,
    pub x: HalfInt,
}

impl SpacetimeArg {
    pub fn new(t: f64, x: HalfInt) -> Self {
        SpacetimeArg { t, x }
    }
}

/// Which kernel family a matrix tabulates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelTag {
    Static,
    Extended,
    Frobenius,
    MeixnerExt,
    Whittaker,
    Gamma,
}

/// Which evaluation route produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    Series,
    Contour,
    Closed,
    Auto,
}

/// A square table values[i][j] = K(args[i]; args[j]) for the tagged kernel.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KernelMatrix {
    pub args: Vec<SpacetimeArg>,
    pub values: Vec<Vec<Complex64>>,
    pub tag: KernelTag,
}

impl KernelMatrix {
    /// Assemble the table by calling `eval` on every argument pair.
    pub fn build(
        args: Vec<SpacetimeArg>,
        tag: KernelTag,
        mut eval: impl FnMut(SpacetimeArg, SpacetimeArg) -> Result<Complex64, Error>,
    ) -> Result<Self, Error> {
        let mut values = Vec::with_capacity(args.len());
        for &ai in &args {
            let mut row = Vec::with_capacity(args.len());
            for &aj in &args {
                row.push(eval(ai, aj)?);
            }
            values.push(row);
        }
        Ok(KernelMatrix { args, values, tag })
    }
}

/// Audit that a mathematically real kernel value came out real; the
/// imaginary residue must be rounding noise.
pub(crate) fn take_real(v: Complex64, what: &str) -> Result<f64, Error> {
    let scale = v.norm().max(1.0);
    if !v.is_finite() {
        return Err(Error::numerical(format!("{what} is not finite: {v}")));
    }
    if v.im.abs() > KERNEL_REALNESS_TOL * scale {
        return Err(Error::numerical(format!(
            "{what} should be real; got {v} (imaginary residue {:.3e})",
            v.im
        )));
    }
    Ok(v.re)
}

/// log f̂(x) where f̂(x) = Γ(x+z′+½)/√(Γ(x+z+½)Γ(x+z′+½)) is the spatial
/// part of the gauge function (the square root is the positive root of the
/// positive product, taken as half the real part of the log sum).
fn log_space_gauge(p: &ZParams, x: HalfInt) -> Complex64 {
    let xz = log_gamma(p.z + (x.to_f64() + 0.5));
    let xzp = log_gamma(p.zp + (x.to_f64() + 0.5));
    xzp - 0.5 * (xz.re + xzp.re)
}

/// The gauge function f(s, x) = e^{−s/2} Γ(x+z′+½)/√(Γ(x+z+½)Γ(x+z′+½));
/// determinants of gauged kernels are invariant because it enters as
/// f(s,x)/f(t,y) on matched index pairs.
pub fn gauge_f(p: &ZParams, s: f64, x: HalfInt) -> Complex64 {
    (log_space_gauge(p, x) - 0.5 * s).exp()
}

/// The symmetric-route gauge factor
/// φ(x, y) = √(Γ(x+z+½)Γ(x+z′+½)Γ(y+z+½)Γ(y+z′+½)) / (Γ(x+z′+½)Γ(y+z+½)),
/// so that unK(s,x;t,y) = e^{(s−t)/2} φ(x,y) K̂(s,x;t,y) (statically
/// unK = φ·K̂).
pub fn gauge_phi(p: &ZParams, x: HalfInt, y: HalfInt) -> Complex64 {
    (log_space_gauge(p, y) - log_space_gauge(p, x)).exp()
}

/// Determinant by partially pivoted Gaussian elimination.
fn det_pivoted(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].norm().partial_cmp(&m[j][col].norm()).unwrap())
            .unwrap();
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for i in col + 1..n {
            let factor = m[i][col] / m[col][col];
            for j in col..n {
                let sub = factor * m[col][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}

/// Correlation function det[K(args_i; args_j)] with the realness audit;
/// the arguments must be pairwise distinct for the determinant to be a
/// correlation value.
pub fn corr_det(k: &KernelMatrix) -> Result<f64, Error> {
    let n = k.args.len();
    if n == 0 {
        return Err(Error::domain("correlation determinant needs arguments"));
    }
    if k.values.len() != n || k.values.iter().any(|row| row.len() != n) {
        return Err(Error::domain("kernel matrix is not square"));
    }
    for i in 0..n {
        for j in i + 1..n {
            if k.args[i] == k.args[j] {
                return Err(Error::domain(format!(
                    "correlation arguments must be pairwise distinct; {} repeats",
                    k.args[i].x
                )));
            }
        }
    }
    take_real(det_pivoted(k.values.clone()), "correlation determinant")
}

/// Σ_{k≥0} term(k) for a series with eventually geometric decay, truncated
/// once the tail is certified.  The certificate fits a geometric ratio to
/// the last ten |terms| (via five-term block maxima, robust to sign
/// oscillation): with per-term ratio r < 0.95 the bound m·r/(1−r) must fall
/// below tol·scale; slower decay up to r < 1 − 1e−6 is accepted with a
/// hundredfold stricter bound (near-critical mixing parameters and the
/// subgeometric continuum series need this).  Five consecutive exactly-zero
/// terms end the sum (degenerate families truncate naturally).
pub(crate) fn sum_certified(
    tol: f64,
    hard_stop: Option<usize>,
    mut term: impl FnMut(usize) -> Result<f64, Error>,
) -> Result<f64, Error> {
    const HISTORY: usize = 10;
    const CAP: usize = 500_000;
    if let Some(n) = hard_stop {
        let mut sum = 0.0;
        for k in 0..n {
            sum += term(k)?;
        }
        return Ok(sum);
    }
    let mut sum = 0.0;
    let mut scale: f64 = 0.0;
    let mut hist: Vec<f64> = Vec::with_capacity(HISTORY);
    let mut zero_run = 0usize;
    for k in 0..CAP {
        let t = term(k)?;
        if !t.is_finite() {
            return Err(Error::numerical(format!("series term {k} is not finite")));
        }
        sum += t;
        scale = scale.max(sum.abs()).max(t.abs());
        if t == 0.0 {
            zero_run += 1;
            if zero_run >= 5 {
                return Ok(sum);
            }
        } else {
            zero_run = 0;
        }
        if hist.len() == HISTORY {
            hist.remove(0);
        }
        hist.push(t.abs());
        if hist.len() == HISTORY {
            let m1 = hist[..5].iter().cloned().fold(0.0, f64::max);
            let m2 = hist[5..].iter().cloned().fold(0.0, f64::max);
            if m1 > 0.0 && m2 < m1 {
                let r = (m2 / m1).powf(0.2);
                let budget = tol * scale.max(1e-300);
                let tail = 5.0 * m2 * (m2 / m1) / (1.0 - m2 / m1);
                let certified = (r < 0.95 && tail <= budget)
                    || (r < 1.0 - 1e-6 && tail <= 0.01 * budget);
                if certified {
                    return Ok(sum);
                }
            }
        }
    }
    Err(Error::numerical(
        "series tail certification failed within the term cap",
    ))
}

/// Σ_{a ∈ ℤ′₊} (±1)^k e^{−a·gap} left(a) right(a), the common shape of the
/// sign-block series shared by the lattice particle–hole kernel and its
/// continuum limit (a = k + ½ over k = 0, 1, …).
pub(crate) fn damped_pair_sum(
    tol: f64,
    gap: f64,
    alternating: bool,
    mut left: impl FnMut(HalfInt) -> Result<f64, Error>,
    mut right: impl FnMut(HalfInt) -> Result<f64, Error>,
) -> Result<f64, Error> {
    sum_certified(tol, None, |k| {
        let a = HalfInt::new(k as i64);
        let sign = if alternating && k % 2 == 1 { -1.0 } else { 1.0 };
        Ok(sign * (-a.to_f64() * gap).exp() * left(a)? * right(a)?)
    })
}
