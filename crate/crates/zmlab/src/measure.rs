//! z-measures on partitions: admissibility of (z, z′), weights on the
//! floors Y_n, the mixed measure on all of Y, transition/cotransition
//! probabilities of the Young graph, and exact samplers.
//!
//! The measure on the n-th floor is
//!
//!   M⁽ⁿ⁾(λ) = (z)_λ (z′)_λ / (zz′)_n · (dim λ)² / n! ,
//!
//! and mixing the floors by the negative binomial π_{zz′,ξ} gives
//!
//!   M_{z,z′,ξ}(λ) = (1−ξ)^{zz′} ξ^{|λ|} (z)_λ (z′)_λ (dim λ / |λ|!)² .
//!
//! Weights are accumulated in log-space box by box; for admissible
//! parameters every per-box factor (z + c)(z′ + c) is real and nonnegative,
//! which the code audits at tolerance 1e−13 before taking logarithms.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::{log_biguint, YoungDiagram};

/// Admissibility class of a parameter pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Series {
    /// z′ = z̄, z non-real.
    Principal,
    /// z, z′ real, non-integral, in the same open interval (m, m+1).
    Complementary,
    /// z or z′ a positive integer; support is diagrams with at most N rows.
    DegenerateRows(u32),
    /// z or z′ a negative integer; support is diagrams with at most N columns.
    DegenerateColumns(u32),
}

/// An admissible parameter pair (z, z′) with its classification.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZParams {
    pub z: Complex64,
    pub zp: Complex64,
    pub series: Series,
}

/// An admissible pair together with a mixing parameter ξ ∈ (0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixedParams {
    pub params: ZParams,
    pub xi: f64,
}

impl MixedParams {
    pub fn new(params: ZParams, xi: f64) -> Result<Self, Error> {
        if !(0.0 < xi && xi < 1.0) {
            return Err(Error::domain(format!("xi must lie in (0,1), got {xi}")));
        }
        Ok(MixedParams { params, xi })
    }
}

fn is_exact_int(v: f64) -> bool {
    v.fract() == 0.0 && v.is_finite()
}

/// Classify (z, z′); errors if no admissibility condition holds.
///
/// The three classes:
/// * principal — z′ = z̄ with z non-real;
/// * complementary — z, z′ real inside the same open interval (m, m+1)
///   (endpoint integers are rejected, not special-cased);
/// * degenerate — one of them a nonzero integer k, the other real of the
///   same sign with |other| > |k| − 1.
pub fn classify(z: Complex64, zp: Complex64) -> Result<ZParams, Error> {
    if !(z.is_finite() && zp.is_finite()) {
        return Err(Error::not_admissible("parameters must be finite"));
    }
    if z.im != 0.0 || zp.im != 0.0 {
        if z.im != 0.0 && zp.re == z.re && zp.im == -z.im {
            return Ok(ZParams { z, zp, series: Series::Principal });
        }
        return Err(Error::not_admissible(format!(
            "non-real pair ({z}, {zp}) is admissible only when z' = conj(z)"
        )));
    }

    // Both real from here on.
    let (a, b) = (z.re, zp.re);
    if a == 0.0 || b == 0.0 {
        return Err(Error::not_admissible("zz' > 0 fails when either parameter is 0"));
    }

    // Degenerate: try integer slots in increasing magnitude; the smaller
    // passing integer is the binding support bound.
    let mut ints: Vec<f64> = [a, b].into_iter().filter(|v| is_exact_int(*v)).collect();
    ints.sort_by(|p, q| p.abs().partial_cmp(&q.abs()).unwrap());
    for k in ints {
        let other = if k == a { b } else { a };
        if k.signum() == other.signum() && other.abs() > k.abs() - 1.0 {
            let n = k.abs() as u32;
            let series = if k > 0.0 {
                Series::DegenerateRows(n)
            } else {
                Series::DegenerateColumns(n)
            };
            return Ok(ZParams { z, zp, series });
        }
    }
    if is_exact_int(a) || is_exact_int(b) {
        return Err(Error::not_admissible(format!(
            "integral pair ({a}, {b}) violates the sign/magnitude conditions"
        )));
    }

    // Complementary: same open unit interval between consecutive integers.
    if a.floor() == b.floor() {
        return Ok(ZParams { z, zp, series: Series::Complementary });
    }
    Err(Error::not_admissible(format!(
        "real pair ({a}, {b}) does not lie in one open interval (m, m+1)"
    )))
}

impl ZParams {
    /// c = zz′ > 0.
    pub fn c(&self) -> f64 {
        (self.z * self.zp).re
    }

    /// The pair (−z, −z′), admissible whenever (z, z′) is; the measure
    /// satisfies M_{z,z′}(λ) = M_{−z,−z′}(λ′).
    pub fn flip(&self) -> ZParams {
        classify(-self.z, -self.zp).expect("negation preserves admissibility")
    }

    /// Maximum number of rows in the support (None = unbounded).
    pub fn max_rows(&self) -> Option<u32> {
        match self.series {
            Series::DegenerateRows(n) => Some(n),
            _ => None,
        }
    }

    /// Maximum number of columns in the support (None = unbounded).
    pub fn max_cols(&self) -> Option<u32> {
        match self.series {
            Series::DegenerateColumns(n) => Some(n),
            _ => None,
        }
    }

    /// True iff λ carries positive weight.
    pub fn supports(&self, la: &YoungDiagram) -> bool {
        match self.series {
            Series::DegenerateRows(n) => la.len() <= n as usize,
            Series::DegenerateColumns(n) => la.row(1) <= n,
            _ => true,
        }
    }
}

/// Audited real part of a product that must be real nonnegative for
/// admissible parameters; tiny negatives within 1e−13 are clamped to zero.
fn real_nonneg(v: Complex64, what: &str) -> f64 {
    let scale = v.norm().max(1.0);
    debug_assert!(
        v.im.abs() <= 1e-12 * scale,
        "{what}: imaginary residue {} too large",
        v.im
    );
    if v.re < 0.0 && v.re > -1e-13 * scale {
        0.0
    } else {
        v.re
    }
}

/// ln[(z)_λ (z′)_λ] accumulated box by box; −∞ outside the support.
///
/// Negative-integer z is routed through the transposition identity
/// (z)_λ (z′)_λ = (−z)_{λ′} (−z′)_{λ′}, whose per-box factors are positive,
/// so the log-space accumulation never sees a negative factor.
fn log_pochhammer_pair(p: &ZParams, la: &YoungDiagram) -> f64 {
    if !p.supports(la) {
        return f64::NEG_INFINITY;
    }
    if matches!(p.series, Series::DegenerateColumns(_)) {
        return log_pochhammer_pair(&p.flip(), &la.transpose());
    }
    let mut acc = 0.0;
    for b in la.boxes() {
        let c = b.content() as f64;
        let f = real_nonneg((p.z + c) * (p.zp + c), "per-box factor");
        if f <= 0.0 {
            return f64::NEG_INFINITY;
        }
        acc += f.ln();
    }
    acc
}

fn log_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// ln(c)_n for real c > 0.
fn log_rising(c: f64, n: u64) -> f64 {
    (0..n).map(|k| (c + k as f64).ln()).sum()
}

/// ln M⁽ⁿ⁾_{z,z′}(λ) with n = |λ| (−∞ outside the support).
pub fn log_mn_weight(la: &YoungDiagram, p: &ZParams) -> f64 {
    let n = la.size();
    log_pochhammer_pair(p, la) - log_rising(p.c(), n) + 2.0 * log_biguint(&la.dim())
        - log_factorial(n)
}

/// M⁽ⁿ⁾_{z,z′}(λ), the z-measure on the floor Y_{|λ|}.
pub fn mn_weight(la: &YoungDiagram, p: &ZParams) -> f64 {
    log_mn_weight(la, p).exp()
}

/// ln M_{z,z′,ξ}(λ) (−∞ outside the support).
pub fn log_mixed_weight(la: &YoungDiagram, mp: &MixedParams) -> f64 {
    let n = la.size();
    let c = mp.params.c();
    c * (1.0 - mp.xi).ln() + n as f64 * mp.xi.ln() + log_pochhammer_pair(&mp.params, la)
        + 2.0 * (log_biguint(&la.dim()) - log_factorial(n))
}

/// M_{z,z′,ξ}(λ) = (1−ξ)^{zz′} ξ^{|λ|} (z)_λ(z′)_λ (dim λ/|λ|!)².
pub fn mixed_weight(la: &YoungDiagram, mp: &MixedParams) -> f64 {
    log_mixed_weight(la, mp).exp()
}

/// Negative binomial π_{c,ξ}(n) = (1−ξ)^c (c)_n ξⁿ / n!.
pub fn neg_binom(c: f64, xi: f64, n: u64) -> f64 {
    // Stable multiplicative recurrence π(n+1) = π(n)·ξ(c+n)/(n+1).
    let mut p = (1.0 - xi).powf(c);
    for k in 0..n {
        p *= xi * (c + k as f64) / (k as f64 + 1.0);
    }
    p
}

/// Transition probability p↑(λ, ν) = (z+c(b))(z′+c(b)) dim ν / ((zz′+n)(n+1) dim λ)
/// where b is the box added to λ; vanishes when ν leaves the degenerate support.
pub fn p_up(la: &YoungDiagram, nu: &YoungDiagram, p: &ZParams) -> Result<f64, Error> {
    let b = la.added_box(nu)?;
    let c = b.content() as f64;
    let factor = real_nonneg((p.z + c) * (p.zp + c), "p_up factor");
    if factor <= 0.0 {
        return Ok(0.0);
    }
    let n = la.size() as f64;
    Ok(factor * dim_ratio(nu, la) / ((p.c() + n) * (n + 1.0)))
}

/// Cotransition probability p↓(λ, μ) = dim μ / dim λ for μ ↗ λ, else 0.
pub fn p_down(la: &YoungDiagram, mu: &YoungDiagram) -> f64 {
    if la.size() != mu.size() + 1 || !la.contains(mu) {
        return 0.0;
    }
    dim_ratio(mu, la)
}

/// dim a / dim b as f64, via logs when the exact integers overflow f64.
fn dim_ratio(a: &YoungDiagram, b: &YoungDiagram) -> f64 {
    use num_traits::ToPrimitive;
    let da = a.dim();
    let db = b.dim();
    match (da.to_f64(), db.to_f64()) {
        (Some(x), Some(y)) if x.is_finite() && y.is_finite() => x / y,
        _ => (log_biguint(&da) - log_biguint(&db)).exp(),
    }
}

/// Draw λ with |λ| = n from M⁽ⁿ⁾ by growing from ∅ with p↑ (coherency of
/// the family makes the chain's marginal at step n exactly M⁽ⁿ⁾).
pub fn sample_mn<R: Rng + ?Sized>(n: u64, p: &ZParams, rng: &mut R) -> YoungDiagram {
    let mut la = YoungDiagram::empty();
    for _ in 0..n {
        let ups = la.up_neighbors();
        let probs: Vec<f64> = ups
            .iter()
            .map(|nu| p_up(&la, nu, p).expect("up_neighbors produces covers"))
            .collect();
        la = ups[categorical(&probs, rng)].clone();
    }
    la
}

/// Draw λ from the mixed measure: n from π_{zz′,ξ} by inverse CDF
/// (truncated when the remaining tail < 1e−15), then a floor sample.
pub fn sample_mixed<R: Rng + ?Sized>(mp: &MixedParams, rng: &mut R) -> YoungDiagram {
    let n = sample_neg_binom(mp.params.c(), mp.xi, rng);
    sample_mn(n, &mp.params, rng)
}

/// Inverse-CDF sampler for π_{c,ξ}.
pub fn sample_neg_binom<R: Rng + ?Sized>(c: f64, xi: f64, rng: &mut R) -> u64 {
    let u: f64 = rng.gen();
    let mut p = (1.0 - xi).powf(c);
    let mut cdf = p;
    let mut n = 0u64;
    // Extend until the draw is covered or the tail is below 1e−15.
    while u > cdf && 1.0 - cdf > 1e-15 {
        p *= xi * (c + n as f64) / (n as f64 + 1.0);
        cdf += p;
        n += 1;
    }
    n
}

fn categorical<R: Rng + ?Sized>(probs: &[f64], rng: &mut R) -> usize {
    let total: f64 = probs.iter().sum();
    let u: f64 = rng.gen::<f64>() * total;
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if u <= acc {
            return i;
        }
    }
    probs.len() - 1
}

/// Structured configuration for a mixed measure and a master seed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MeasureConfig {
    pub z_re: f64,
    #[serde(default)]
    pub z_im: f64,
    pub zprime_re: f64,
    #[serde(default)]
    pub zprime_im: f64,
    pub xi: f64,
    #[serde(default)]
    pub seed: u64,
}

impl MeasureConfig {
    pub fn mixed_params(&self) -> Result<MixedParams, Error> {
        let p = classify(
            Complex64::new(self.z_re, self.z_im),
            Complex64::new(self.zprime_re, self.zprime_im),
        )?;
        MixedParams::new(p, self.xi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{diagrams_of_size, diagrams_up_to};
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    pub(crate) fn principal() -> ZParams {
        classify(Complex64::new(1.0, 1.0), Complex64::new(1.0, -1.0)).unwrap()
    }
    fn complementary() -> ZParams {
        classify(Complex64::new(0.3, 0.0), Complex64::new(0.8, 0.0)).unwrap()
    }
    fn degenerate() -> ZParams {
        classify(Complex64::new(3.0, 0.0), Complex64::new(3.7, 0.0)).unwrap()
    }

    fn d(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify(Complex64::new(1.5, 0.7), Complex64::new(1.5, -0.7)).unwrap().series,
            Series::Principal
        );
        assert_eq!(complementary().series, Series::Complementary);
        assert_eq!(degenerate().series, Series::DegenerateRows(3));
        assert_eq!(
            classify(Complex64::new(-3.0, 0.0), Complex64::new(-3.7, 0.0)).unwrap().series,
            Series::DegenerateColumns(3)
        );
        // Degenerate detection is symmetric in the two slots.
        assert_eq!(
            classify(Complex64::new(3.7, 0.0), Complex64::new(3.0, 0.0)).unwrap().series,
            Series::DegenerateRows(3)
        );
        // Both integral: the smaller magnitude is the binding bound.
        assert_eq!(
            classify(Complex64::new(5.0, 0.0), Complex64::new(3.0, 0.0)).unwrap().series,
            Series::DegenerateRows(3)
        );
    }

    #[test]
    fn inadmissible_pairs_rejected() {
        // Non-conjugate complex pair.
        assert!(classify(Complex64::new(1.0, 1.0), Complex64::new(1.0, 1.0)).is_err());
        // Different unit intervals.
        assert!(classify(Complex64::new(0.3, 0.0), Complex64::new(1.2, 0.0)).is_err());
        // Opposite signs.
        assert!(classify(Complex64::new(2.0, 0.0), Complex64::new(-2.5, 0.0)).is_err());
        // Integer magnitude condition |z′| > |z| − 1 violated.
        assert!(classify(Complex64::new(3.0, 0.0), Complex64::new(1.5, 0.0)).is_err());
        // Zero parameter.
        assert!(classify(Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0)).is_err());
        // Boundary pairs outside every admissibility case: an endpoint
        // integer whose partner fails the |z′| > |z| − 1 condition.
        assert!(classify(Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.0)).is_err());
        assert!(classify(Complex64::new(0.5, 0.0), Complex64::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn floor_weights_basic_values() {
        for p in [principal(), complementary(), degenerate()] {
            assert!((mn_weight(&YoungDiagram::empty(), &p) - 1.0).abs() < 1e-14);
            assert!((mn_weight(&d(&[1]), &p) - 1.0).abs() < 1e-13);
        }
        // M⁽²⁾((2)) for real z = z′ = r: r²(r+1)² / (r²(r²+1)) · 1/2.
        let r = 0.8;
        let p = classify(Complex64::new(r, 0.0), Complex64::new(r, 0.0)).unwrap();
        let want = (r * r * (r + 1.0) * (r + 1.0)) / (r * r * (r * r + 1.0)) / 2.0;
        assert!((mn_weight(&d(&[2]), &p) - want).abs() < 1e-14);
    }

    #[test]
    fn floor_normalization() {
        for p in [principal(), complementary(), degenerate()] {
            for n in 0..=8u64 {
                let total: f64 = diagrams_of_size(n).iter().map(|la| mn_weight(la, &p)).sum();
                assert!(
                    (total - 1.0).abs() < 1e-10,
                    "floor {n} sums to {total} for {:?}",
                    p.series
                );
            }
        }
    }

    #[test]
    fn coherency_and_balance() {
        for p in [principal(), complementary(), degenerate()] {
            // Coherency: M⁽ⁿ⁾(μ) = Σ_{ν: μ↗ν} M⁽ⁿ⁺¹⁾(ν) p↓(ν, μ).
            for mu in diagrams_up_to(5) {
                let lhs = mn_weight(&mu, &p);
                let rhs: f64 = mu
                    .up_neighbors()
                    .iter()
                    .map(|nu| mn_weight(nu, &p) * p_down(nu, &mu))
                    .sum();
                assert!((lhs - rhs).abs() <= 1e-10 * lhs.max(1e-30), "coherency at {mu}");
            }
            // Balance: M⁽ⁿ⁾(λ) p↑(λ, ν) = p↓(ν, λ) M⁽ⁿ⁺¹⁾(ν).
            for la in diagrams_up_to(5) {
                for nu in la.up_neighbors() {
                    let lhs = mn_weight(&la, &p) * p_up(&la, &nu, &p).unwrap();
                    let rhs = p_down(&nu, &la) * mn_weight(&nu, &p);
                    assert!(
                        (lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1e-30),
                        "balance at {la}↗{nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn transition_probabilities_normalize() {
        for p in [principal(), complementary(), degenerate()] {
            for la in diagrams_up_to(6) {
                let total: f64 = la
                    .up_neighbors()
                    .iter()
                    .map(|nu| p_up(&la, nu, &p).unwrap())
                    .sum();
                assert!((total - 1.0).abs() < 1e-12, "Σ p_up = {total} at {la}");
                if !la.is_empty() {
                    let down: f64 = la.down_neighbors().iter().map(|mu| p_down(&la, mu)).sum();
                    assert!((down - 1.0).abs() < 1e-12, "Σ p_down = {down} at {la}");
                }
            }
        }
    }

    #[test]
    fn degenerate_support_is_exact() {
        // z = 1 with a fractional partner is degenerate: one-row support.
        let p = classify(Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)).unwrap();
        assert_eq!(p.series, Series::DegenerateRows(1));
        assert_eq!(p_up(&d(&[1]), &d(&[1, 1]), &p).unwrap(), 0.0);
        assert_eq!(mn_weight(&d(&[1, 1]), &p), 0.0);
        let p3 = degenerate();
        for la in diagrams_up_to(7) {
            let w = mixed_weight(&la, &MixedParams::new(p3, 0.3).unwrap());
            if la.len() > 3 {
                assert_eq!(w, 0.0, "support violation at {la}");
            } else {
                assert!(w > 0.0);
            }
        }
    }

    #[test]
    fn transposition_covariance() {
        let pairs = [
            (principal(), principal().flip()),
            (complementary(), complementary().flip()),
            (degenerate(), degenerate().flip()),
        ];
        for (p, q) in pairs {
            for la in diagrams_up_to(6) {
                let a = mn_weight(&la, &p);
                let b = mn_weight(&la.transpose(), &q);
                assert!((a - b).abs() <= 1e-12 * a.max(1e-30), "involution at {la}");
            }
        }
    }

    #[test]
    fn negative_binomial() {
        let (c, xi) = (2.5, 0.4);
        assert!((neg_binom(c, xi, 0) - (1.0 - xi).powf(c)).abs() < 1e-15);
        assert!((neg_binom(c, xi, 1) - (1.0 - xi).powf(c) * c * xi).abs() < 1e-15);
        let total: f64 = (0..=200).map(|n| neg_binom(c, xi, n)).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_weight_consistency() {
        for p in [principal(), complementary(), degenerate()] {
            let mp = MixedParams::new(p, 0.3).unwrap();
            assert!(
                (mixed_weight(&YoungDiagram::empty(), &mp) - (1.0 - 0.3f64).powf(p.c())).abs()
                    < 1e-14
            );
            for la in diagrams_up_to(6) {
                let a = mixed_weight(&la, &mp);
                let b = mn_weight(&la, &p) * neg_binom(p.c(), 0.3, la.size());
                assert!((a - b).abs() <= 1e-12 * a.max(1e-30), "mixture split at {la}");
            }
        }
    }

    #[test]
    fn mixed_normalization_truncated() {
        let mp = MixedParams::new(principal(), 0.3).unwrap();
        let total: f64 = diagrams_up_to(40).iter().map(|la| mixed_weight(la, &mp)).sum();
        assert!((total - 1.0).abs() < 1e-10, "Σ_{{|λ|≤40}} = {total}");
    }

    #[test]
    fn samplers_are_deterministic_and_supported() {
        let mp = MixedParams::new(degenerate(), 0.5).unwrap();
        let mut r1 = ChaCha12Rng::seed_from_u64(7);
        let mut r2 = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = sample_mixed(&mp, &mut r1);
            let b = sample_mixed(&mp, &mut r2);
            assert_eq!(a, b);
            assert!(a.len() <= 3, "sample {a} escapes the ≤3-row support");
        }
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        assert_eq!(sample_mn(0, &principal(), &mut rng), YoungDiagram::empty());
        assert_eq!(sample_mn(1, &principal(), &mut rng), d(&[1]));
    }

    #[test]
    fn sampler_matches_floor_weights_small() {
        // n = 3 floor, modest sample: 3 diagrams, compare within 4 SE.
        let p = principal();
        let mut rng = ChaCha12Rng::seed_from_u64(42);
        let trials = 20_000;
        let mut counts = std::collections::HashMap::new();
        for _ in 0..trials {
            *counts.entry(sample_mn(3, &p, &mut rng)).or_insert(0usize) += 1;
        }
        for la in diagrams_of_size(3) {
            let want = mn_weight(&la, &p);
            let got = *counts.get(&la).unwrap_or(&0) as f64 / trials as f64;
            let se = (want * (1.0 - want) / trials as f64).sqrt();
            assert!(
                (got - want).abs() < 4.0 * se,
                "frequency of {la}: {got} vs {want} (se {se})"
            );
        }
    }

    #[test]
    fn config_parsing() {
        let json = r#"{"z_re":1.0,"z_im":1.0,"zprime_re":1.0,"zprime_im":-1.0,"xi":0.3,"seed":5}"#;
        let cfg: MeasureConfig = serde_json::from_str(json).unwrap();
        let mp = cfg.mixed_params().unwrap();
        assert_eq!(mp.params.series, Series::Principal);
        assert_eq!(mp.xi, 0.3);
    }
}
