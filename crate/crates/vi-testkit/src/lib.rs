//! Independent numerical oracles for the test suites.
//!
//! Everything here is deliberately written from scratch on `f64` slices and
//! shares no code with the production crates: naive projections (Michelot's
//! algorithm for the simplex instead of sort-and-threshold), a generic
//! projected-gradient argmin, straight-line transcriptions of every stepper,
//! and brute-force grid search. Test assertions compare the production path
//! against these independent routes.

pub mod argmin;
pub mod domain;
pub mod grid;
pub mod transcribe;

pub use argmin::minimize_on;
pub use domain::{naive_project, TestDomain};

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

pub fn norm(a: &[f64]) -> f64 {
    norm_sq(a).sqrt()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
