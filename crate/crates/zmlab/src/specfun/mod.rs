//! Special functions: complex log-gamma, regularized Gauss hypergeometric
//! series, the discrete hypergeometric wave functions, Meixner polynomials,
//! and Whittaker functions.

pub mod gamma;
pub mod hyp;
pub mod meixner;
pub mod psi;
pub mod whittaker;
