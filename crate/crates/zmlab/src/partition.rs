//! Young diagrams and exact combinatorics on the Young graph.
//!
//! `YoungDiagram` is the state of every Markov process in this crate. The
//! operations here are exact: dimensions (standard-tableau counts) and path
//! counts use unbounded integers, Pochhammer symbols use complex floats but
//! are finite products over boxes.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_ℓ ≥ 1), stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

/// A box (i, j) of a diagram, 1-based; its content is c = j − i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramBox {
    pub i: u32,
    pub j: u32,
}

impl DiagramBox {
    /// Content j − i of the box.
    pub fn content(self) -> i64 {
        self.j as i64 - self.i as i64
    }
}

impl YoungDiagram {
    /// The empty diagram ∅.
    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Build from row lengths; trailing zeros are dropped.
    pub fn new(rows: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut rows = rows.into();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("rows {rows:?} are not weakly decreasing")));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Row length λᵢ (1-based), zero beyond ℓ(λ).
    pub fn row(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.rows.len() {
            self.rows[i - 1]
        } else {
            0
        }
    }

    /// Number of boxes |λ|.
    pub fn size(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }

    /// Number of nonzero rows ℓ(λ).
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The transposed (conjugate) diagram λ′.
    pub fn transpose(&self) -> YoungDiagram {
        let cols = self.rows.first().copied().unwrap_or(0) as usize;
        let mut t = Vec::with_capacity(cols);
        for j in 1..=cols {
            t.push(self.rows.iter().take_while(|&&r| r as usize >= j).count() as u32);
        }
        YoungDiagram { rows: t }
    }

    /// Iterator over all boxes of λ in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = DiagramBox> + '_ {
        self.rows.iter().enumerate().flat_map(|(i0, &r)| {
            (1..=r).map(move |j| DiagramBox { i: i0 as u32 + 1, j })
        })
    }

    /// True iff μ ⊆ λ rowwise.
    pub fn contains(&self, mu: &YoungDiagram) -> bool {
        mu.rows.len() <= self.rows.len()
            && mu.rows.iter().zip(&self.rows).all(|(&m, &l)| m <= l)
    }

    /// Rowwise minimum λ ∩ ν (the largest diagram contained in both).
    pub fn intersect(&self, other: &YoungDiagram) -> YoungDiagram {
        let rows: Vec<u32> = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(&a, &b)| a.min(b))
            .collect();
        YoungDiagram { rows }
    }

    /// Diagrams ν with λ ↗ ν (one box added at an addable corner).
    pub fn up_neighbors(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        for i in 0..=self.rows.len() {
            let here = self.rows.get(i).copied().unwrap_or(0);
            let above = if i == 0 { u32::MAX } else { self.rows[i - 1] };
            if here < above {
                let mut rows = self.rows.clone();
                if i == rows.len() {
                    rows.push(1);
                } else {
                    rows[i] += 1;
                }
                out.push(YoungDiagram { rows });
            }
        }
        out
    }

    /// Diagrams μ with λ ↘ μ (one box removed from a removable corner).
    pub fn down_neighbors(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        for i in 0..self.rows.len() {
            let below = self.rows.get(i + 1).copied().unwrap_or(0);
            if self.rows[i] > below {
                let mut rows = self.rows.clone();
                rows[i] -= 1;
                while rows.last() == Some(&0) {
                    rows.pop();
                }
                out.push(YoungDiagram { rows });
            }
        }
        out
    }

    /// The box added when passing from λ to ν, for λ ↗ ν.
    pub fn added_box(&self, bigger: &YoungDiagram) -> Result<DiagramBox, Error> {
        if bigger.size() != self.size() + 1 || !bigger.contains(self) {
            return Err(Error::domain(format!("{bigger} does not cover {self}")));
        }
        for i in 1..=bigger.len() {
            if bigger.row(i) != self.row(i) {
                return Ok(DiagramBox { i: i as u32, j: bigger.row(i) });
            }
        }
        unreachable!("covering pair must differ in some row")
    }

    /// Number of standard Young tableaux of shape λ, exactly.
    ///
    /// Uses the stable product formula with N = ℓ(λ): writing lᵢ = λᵢ + N − i,
    ///
    ///   dim λ = |λ|! · Π_{i<j} (lᵢ − lⱼ) / Π_i lᵢ! .
    pub fn dim(&self) -> BigUint {
        let n_rows = self.rows.len();
        if n_rows == 0 {
            return BigUint::one();
        }
        let l: Vec<u64> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &r)| r as u64 + (n_rows - 1 - i) as u64)
            .collect();
        let mut num = factorial(self.size());
        for i in 0..n_rows {
            for j in (i + 1)..n_rows {
                num *= BigUint::from(l[i] - l[j]);
            }
        }
        let mut den = BigUint::one();
        for &li in &l {
            den *= factorial(li);
        }
        // The quotient is an integer (a tableau count); division is exact.
        num / den
    }

    /// All subdiagrams μ ⊆ λ (including ∅ and λ itself).
    pub fn sub_diagrams(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = Vec::new();
        fn rec(la: &[u32], row: usize, cap: u32, current: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if row == la.len() {
                let mut rows = current.clone();
                while rows.last() == Some(&0) {
                    rows.pop();
                }
                out.push(YoungDiagram { rows });
                return;
            }
            let hi = cap.min(la[row]);
            for v in (0..=hi).rev() {
                current.push(v);
                rec(la, row + 1, v, current, out);
                current.pop();
                if v == 0 {
                    break; // all later rows are forced to 0 as well
                }
            }
        }
        rec(&self.rows, 0, u32::MAX, &mut current, &mut out);
        out
    }

    /// Generalized Pochhammer symbol (z)_λ = Π_{(i,j)∈λ} (z + j − i).
    pub fn pochhammer(&self, z: Complex64) -> Complex64 {
        self.boxes()
            .map(|b| z + b.content() as f64)
            .product()
    }

    /// Skew Pochhammer symbol (z)_{λ∖μ}, the product over boxes of λ not in μ.
    pub fn pochhammer_skew(&self, mu: &YoungDiagram, z: Complex64) -> Result<Complex64, Error> {
        if !self.contains(mu) {
            return Err(Error::domain(format!("{mu} is not contained in {self}")));
        }
        let mut acc = Complex64::new(1.0, 0.0);
        for b in self.boxes() {
            if b.j > mu.row(b.i as usize) {
                acc *= z + b.content() as f64;
            }
        }
        Ok(acc)
    }
}

/// n! as an unbounded integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Natural log of an unbounded nonnegative integer (−∞ for zero).
pub fn log_biguint(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    match v.to_f64() {
        Some(f) if f.is_finite() => f.ln(),
        _ => {
            // Too large for f64: take the top 64 bits and account for the shift.
            let bits = v.bits();
            let shift = bits - 64;
            let top = (v >> shift).to_f64().expect("64-bit mantissa fits");
            top.ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

/// Number of ascending paths μ → λ in the Young graph (0 if μ ⊄ λ).
///
/// Dynamic programming on the interval [μ, λ] of the Young lattice:
/// paths(κ) = Σ over covers κ ↗ κ⁺ ⊆ λ of paths(κ⁺), with paths(λ) = 1.
pub fn dim_between(mu: &YoungDiagram, la: &YoungDiagram) -> BigUint {
    let mut memo = HashMap::new();
    dim_between_memo(mu, la, &mut memo)
}

/// Memo-sharing variant of [`dim_between`] for bulk computations
/// (transition-matrix rows, enumerative correlation sums).
pub fn dim_between_memo(
    mu: &YoungDiagram,
    la: &YoungDiagram,
    memo: &mut HashMap<(YoungDiagram, YoungDiagram), BigUint>,
) -> BigUint {
    if !la.contains(mu) {
        return BigUint::zero();
    }
    if mu == la {
        return BigUint::one();
    }
    let key = (mu.clone(), la.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = BigUint::zero();
    for kappa in mu.up_neighbors() {
        if la.contains(&kappa) {
            acc += dim_between_memo(&kappa, la, memo);
        }
    }
    memo.insert(key, acc.clone());
    acc
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Parses the `Display` form "[3,1,1]" (whitespace tolerated); "[]" is ∅.
    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("diagram must look like [3,1,1], got {s:?}")))?;
        let mut rows = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            rows.push(
                part.parse::<u32>()
                    .map_err(|_| Error::parse(format!("bad row length {part:?} in {s:?}")))?,
            );
        }
        YoungDiagram::new(rows)
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;
    fn try_from(rows: Vec<u32>) -> Result<Self, Error> {
        YoungDiagram::new(rows)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Vec<u32> {
        d.rows
    }
}

/// All diagrams with exactly n boxes.
pub fn diagrams_of_size(n: u64) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, cap: u64, current: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        if remaining == 0 {
            out.push(YoungDiagram { rows: current.clone() });
            return;
        }
        let hi = cap.min(remaining);
        for v in (1..=hi).rev() {
            current.push(v as u32);
            rec(remaining - v, v, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// All diagrams with at most n boxes, in increasing size order.
pub fn diagrams_up_to(n: u64) -> Vec<YoungDiagram> {
    (0..=n).flat_map(diagrams_of_size).collect()
}
