//! Markov dynamics: rates, transition operators, and trajectory simulation.

pub mod curve;

pub use curve::XiCurve;
