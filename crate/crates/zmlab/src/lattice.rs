//! The two encodings of a Young diagram as a point configuration on ℤ′.
//!
//! * `to_underline_x`: λ ↦ {λᵢ − i + ½ : i = 1, 2, …} ⊂ ℤ′ — a densely
//!   packed ("sea") configuration that agrees with ℤ′₋ = {−½, −3/2, …} far
//!   below zero. This encoding is a bijection onto configurations whose
//!   symmetric difference with ℤ′₋ is balanced (equally many particles
//!   added above zero and holes created below zero).
//! * `to_frobenius_x`: λ ↦ unX(λ) △ ℤ′₋ — the finite particle/hole
//!   configuration with points {aᵢ} ∪ {−bᵢ} given by the modified Frobenius
//!   coordinates aᵢ = λᵢ − i + ½, bᵢ = λ′ᵢ − i + ½. It satisfies
//!   X(λ′) = −X(λ).
//!
//! Configurations are stored on a finite caller-chosen window together with
//! a tail convention describing the configuration below the window.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::half::HalfInt;
use crate::partition::YoungDiagram;

/// What the configuration looks like below the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tail {
    /// Below the window the configuration agrees with ℤ′₋ (sea encoding).
    NegativeSea,
    /// Below the window the configuration is empty (finite encoding).
    Empty,
}

/// A closed interval of ℤ′.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: HalfInt,
    pub hi: HalfInt,
}

impl Window {
    pub fn new(lo: HalfInt, hi: HalfInt) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::domain(format!("empty window [{lo}, {hi}]")));
        }
        Ok(Window { lo, hi })
    }

    /// Symmetric window [−L−½, L+½] with L = max(ℓ(λ), λ₁) + 2, large
    /// enough to contain every deviation of λ's encodings from the vacuum.
    pub fn default_for(la: &YoungDiagram) -> Window {
        let l = la.len().max(la.row(1) as usize) as i64 + 2;
        Window { lo: HalfInt::new(-l - 1), hi: HalfInt::new(l) }
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn points(&self) -> impl Iterator<Item = HalfInt> {
        HalfInt::range_inclusive(self.lo, self.hi)
    }
}

/// A point configuration on a window of ℤ′ with a tail convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    pub window: Window,
    pub members: BTreeSet<HalfInt>,
    pub tail: Tail,
}

impl PointConfig {
    pub fn new(window: Window, members: BTreeSet<HalfInt>, tail: Tail) -> Result<Self, Error> {
        if let Some(bad) = members.iter().find(|m| !window.contains(**m)) {
            return Err(Error::domain(format!("member {bad} outside window")));
        }
        Ok(PointConfig { window, members, tail })
    }

    /// Membership of an arbitrary point, using the tail convention outside
    /// the window from below; points above the window are reported absent.
    pub fn contains(&self, x: HalfInt) -> bool {
        if x < self.window.lo {
            match self.tail {
                Tail::NegativeSea => !x.is_positive(),
                Tail::Empty => false,
            }
        } else {
            self.members.contains(&x)
        }
    }

    /// Members sorted in decreasing order.
    pub fn members_desc(&self) -> Vec<HalfInt> {
        self.members.iter().rev().copied().collect()
    }
}

impl fmt::Display for PointConfig {
    /// Members only, sorted decreasing, e.g. "1.5,-0.5".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in self.members.iter().rev() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parse a comma-separated list of half-integers ("1.5,-0.5"); order-free.
pub fn parse_points(s: &str) -> Result<Vec<HalfInt>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(HalfInt::from_str).collect()
}

/// The sea encoding unX(λ) = {λᵢ − i + ½} restricted to `window`.
pub fn to_underline_x(la: &YoungDiagram, window: Window) -> PointConfig {
    let mut members = BTreeSet::new();
    // Rows of λ contribute λᵢ − i + ½; beyond ℓ(λ) the points −i + ½ simply
    // continue the sea. Stop once points drop below the window.
    let mut i: i64 = 1;
    loop {
        let r = la.row(i as usize) as i64;
        let x = HalfInt::new(r - i); // λᵢ − i + ½
        if x < window.lo {
            if i > la.len() as i64 {
                break;
            }
        } else if x <= window.hi {
            members.insert(x);
        }
        i += 1;
    }
    PointConfig { window, members, tail: Tail::NegativeSea }
}

/// Inverse of [`to_underline_x`]. The window must contain every deviation of
/// the configuration from ℤ′₋ (equivalently, below the window the sea is
/// intact); rejects unbalanced configurations.
pub fn from_underline_x(config: &PointConfig) -> Result<YoungDiagram, Error> {
    if config.tail != Tail::NegativeSea {
        return Err(Error::domain("sea decoding requires the NegativeSea tail convention"));
    }
    let members = config.members_desc();
    let m = members.len() as i64;
    // The largest sea point below the window is min(lo, ½) − 1 in floor
    // units; for the configuration to be unX(λ) it must continue the rows
    // at exactly −(m+1) + ½.
    let tail_top_floor = config.window.lo.floor().min(0) - 1;
    if tail_top_floor != -m - 1 {
        return Err(Error::domain(format!(
            "unbalanced configuration: {m} members in window but sea resumes at {}",
            HalfInt::new(tail_top_floor)
        )));
    }
    let mut rows = Vec::new();
    for (idx, x) in members.iter().enumerate() {
        let i = idx as i64 + 1;
        let row = x.floor() + i; // λᵢ = xᵢ + i − ½
        if row < 0 {
            return Err(Error::domain(format!("negative row length at member {x}")));
        }
        rows.push(row as u32);
    }
    YoungDiagram::new(rows)
}

/// The finite particle/hole encoding X(λ) = unX(λ) △ ℤ′₋ on `window`.
pub fn to_frobenius_x(la: &YoungDiagram, window: Window) -> PointConfig {
    let mut members = BTreeSet::new();
    let lat = la.transpose();
    // Particles aᵢ = λᵢ − i + ½ > 0 and holes −bᵢ = −(λ′ᵢ − i + ½) < 0,
    // for i up to the Durfee square side.
    for i in 1..=la.len() {
        let a = la.row(i) as i64 - i as i64; // floor of λᵢ − i + ½
        if a >= 0 {
            let x = HalfInt::new(a);
            if window.contains(x) {
                members.insert(x);
            }
        }
    }
    for i in 1..=lat.len() {
        let b = lat.row(i) as i64 - i as i64;
        if b >= 0 {
            let x = HalfInt::new(b).neg();
            if window.contains(x) {
                members.insert(x);
            }
        }
    }
    PointConfig { window, members, tail: Tail::Empty }
}

/// Symmetric difference with ℤ′₋ on the window, toggling the tail
/// convention. Applying it to unX(λ) yields X(λ) and vice versa.
pub fn toggle_sea(config: &PointConfig) -> PointConfig {
    let mut members = BTreeSet::new();
    for x in config.window.points() {
        let in_sea = !x.is_positive();
        if config.members.contains(&x) != in_sea {
            members.insert(x);
        }
    }
    let tail = match config.tail {
        Tail::NegativeSea => Tail::Empty,
        Tail::Empty => Tail::NegativeSea,
    };
    PointConfig { window: config.window, members, tail }
}
