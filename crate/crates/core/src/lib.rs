//! Design and validation toolkit for discrete privacy mechanisms.
//!
//! The crate covers three layers:
//!
//! - [`prob`]: finite joint distributions, empirical estimation, l1 geometry,
//!   channels, rare-symbol merging, and l1-ball sampling;
//! - [`info`]: f-divergences, f-informations, and probability-of-correct-
//!   guessing leakage/utility metrics;
//! - [`bounds`] and [`solver`]: certified gap bounds between guarantees
//!   computed on an estimated distribution and the truth, privacy-utility
//!   trade-off solvers, and robust mechanism construction with uniform
//!   privacy guarantees over l1 neighborhoods.

pub mod bounds;
pub mod error;
pub mod info;
pub mod prob;
pub mod random;
pub mod solver;

pub use error::{Error, Result};
