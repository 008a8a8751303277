//! Numerical laboratory for z-measures and Markov dynamics on partitions.
//!
//! The library is organized bottom-up:
//!
//! * [`half`], [`partition`], [`lattice`] — exact combinatorics of Young
//!   diagrams, the Young graph, and the two lattice encodings of a diagram
//!   as a point configuration on ℤ′ = ℤ + ½.
//! * [`measure`] — the z-measures on partitions (fixed size and mixed over
//!   sizes), admissibility classification of the parameters (z, z′), and
//!   exact samplers.
//! * [`specfun`] — the analytic layer: complex log-gamma, the regularized
//!   Gauss hypergeometric series used throughout, the ψ eigenfunctions,
//!   Meixner polynomials, and Whittaker functions.
//! * [`quad`] — contour quadrature: circles, double circles, Hankel-type
//!   loops, and the annulus-with-keyhole contour used in scaling limits.
//! * [`kernel`] — all correlation kernels (static, extended in time,
//!   Frobenius/particle-hole blocks, Whittaker and gamma limits) in their
//!   series, contour-integral, and closed forms, plus determinant
//!   evaluation of correlation functions.
//! * [`dynamics`] — jump rates, transition matrices (spectral, closed-form,
//!   Karlin–McGregor determinant, explicit finite sum), and the
//!   continuous-time simulator.
//! * [`verify`] — brute-force enumerative oracles, Monte Carlo estimators,
//!   cross-assembly checks, and scaling-limit scans; powers the `verify`
//!   CLI subcommand and the acceptance suite.

pub mod half;
pub mod partition;
pub mod lattice;
pub mod measure;
pub mod specfun;
pub mod quad;
pub mod kernel;
pub mod dynamics;
pub mod verify;

mod error;
pub use error::Error;

/// Version stamp written into every machine-readable output (reports, CSV
/// headers, trajectory files) so downstream tooling can detect format drift.
pub const SCHEMA_VERSION: u32 = 1;
