//! Points of the half-integer lattice ℤ′ = ℤ + ½.
//!
//! All kernels and point configurations live on ℤ′. A point is stored by
//! its floor, so `HalfInt { floor: k }` represents the value k + ½. This
//! keeps every lattice operation exact: negation, shifts by integers, and
//! the frequently needed integer combinations x + ½ and x − ½.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A half-integer x = floor + ½ ∈ ℤ′.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt {
    floor: i64,
}

impl HalfInt {
    /// The point k + ½.
    pub const fn new(floor: i64) -> Self {
        HalfInt { floor }
    }

    /// ½, the smallest positive point.
    pub const HALF: HalfInt = HalfInt::new(0);

    /// −½, the largest negative point.
    pub const MINUS_HALF: HalfInt = HalfInt::new(-1);

    /// Floor of the value: x − ½ as an integer.
    pub const fn floor(self) -> i64 {
        self.floor
    }

    /// Ceiling of the value: x + ½ as an integer.
    pub const fn ceil(self) -> i64 {
        self.floor + 1
    }

    pub fn to_f64(self) -> f64 {
        self.floor as f64 + 0.5
    }

    /// Exact conversion from a float that must be a half-integer.
    pub fn from_f64(v: f64) -> Result<Self, Error> {
        let doubled = 2.0 * v;
        if doubled.fract() != 0.0 || !doubled.is_finite() || (doubled as i64) % 2 == 0 {
            return Err(Error::parse(format!("{v} is not a half-integer")));
        }
        Ok(HalfInt::new(((doubled as i64) - 1) / 2))
    }

    /// x > 0, i.e. x ∈ ℤ′₊ = {½, 3/2, 5/2, …}.
    pub const fn is_positive(self) -> bool {
        self.floor >= 0
    }

    /// Shift by an integer amount.
    pub const fn shift(self, by: i64) -> Self {
        HalfInt::new(self.floor + by)
    }

    /// Negation −x (also a half-integer).
    pub const fn neg(self) -> Self {
        HalfInt::new(-self.floor - 1)
    }

    /// The integer x + a for another half-integer a.
    pub const fn plus(self, other: HalfInt) -> i64 {
        self.floor + other.floor + 1
    }

    /// The integer x − a for another half-integer a.
    pub const fn minus(self, other: HalfInt) -> i64 {
        self.floor - other.floor
    }

    /// All points of ℤ′ in the closed interval [lo, hi].
    pub fn range_inclusive(lo: HalfInt, hi: HalfInt) -> impl Iterator<Item = HalfInt> {
        (lo.floor..=hi.floor).map(HalfInt::new)
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Always one decimal place: "1.5", "-0.5".
        write!(f, "{:.1}", self.to_f64())
    }
}

impl FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("cannot parse half-integer from {s:?}")))?;
        HalfInt::from_f64(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representation_round_trips() {
        for k in -5..5 {
            let x = HalfInt::new(k);
            assert_eq!(x.to_f64(), k as f64 + 0.5);
            assert_eq!(HalfInt::from_f64(x.to_f64()).unwrap(), x);
            assert_eq!(x.to_string().parse::<HalfInt>().unwrap(), x);
        }
        assert!(HalfInt::from_f64(1.0).is_err());
        assert!(HalfInt::from_f64(0.25).is_err());
    }

    #[test]
    fn negation_and_sums() {
        let x = HalfInt::new(2); // 2.5
        assert_eq!(x.neg().to_f64(), -2.5);
        assert_eq!(x.neg().neg(), x);
        let a = HalfInt::new(-1); // -0.5
        assert_eq!(x.plus(a), 2); // 2.5 + (-0.5)
        assert_eq!(x.minus(a), 3); // 2.5 - (-0.5)
        assert_eq!(HalfInt::HALF.to_f64(), 0.5);
        assert_eq!(HalfInt::MINUS_HALF.to_f64(), -0.5);
        assert!(HalfInt::HALF.is_positive());
        assert!(!HalfInt::MINUS_HALF.is_positive());
    }

    #[test]
    fn ranges_are_inclusive() {
        let pts: Vec<f64> = HalfInt::range_inclusive(HalfInt::new(-2), HalfInt::new(1))
            .map(|p| p.to_f64())
            .collect();
        assert_eq!(pts, vec![-1.5, -0.5, 0.5, 1.5]);
    }
}
