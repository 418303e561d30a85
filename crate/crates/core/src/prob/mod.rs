//! Finite alphabets, joint distributions, empirical estimation, l1 geometry,
//! channels, rare-symbol merging, and l1-ball sampling.

mod alphabet;
pub mod ball;
pub mod binary;
mod devroye;
mod joint;
mod mechanism;
mod merge;
mod samples;

pub use alphabet::Alphabet;
pub use ball::{sample_ball, BallFamily};
pub use devroye::{devroye_radius, DevroyeReport};
pub use joint::{Axis, JointPmf, PROB_TOLERANCE};
pub use mechanism::{default_output_alphabet, push_through, Keep, Mechanism};
pub use merge::{apply_merge, merge_rare_symbols, MergeMap};
pub use samples::{empirical_from_samples, SampleSet};
