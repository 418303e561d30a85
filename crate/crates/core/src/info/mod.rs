//! f-generators with certified constants, f-divergence and f-information,
//! and probability-of-correct-guessing functionals.

mod generator;
pub(crate) mod measures;
mod metric;

pub use generator::{builtin_generators, FGenerator};
pub use measures::{f_divergence, f_divergence_vec, f_information, pc, pc_given};
pub use metric::{leakage, utility, MetricSpec};
