//! The two-parameter binary family: S ~ Bernoulli(p) observed through a
//! binary symmetric channel with crossover probability q.

use crate::error::Result;
use crate::prob::{Alphabet, JointPmf};

/// Joint matrix `[[ (1-p)(1-q), (1-p)q ], [ pq, p(1-q) ]]`.
pub fn pq_matrix(p: f64, q: f64) -> Vec<Vec<f64>> {
    vec![
        vec![(1.0 - p) * (1.0 - q), (1.0 - p) * q],
        vec![p * q, p * (1.0 - q)],
    ]
}

/// The binary-family joint pmf over alphabets `{s1, s2} x {x1, x2}`.
pub fn pq_joint(p: f64, q: f64) -> Result<JointPmf> {
    JointPmf::new(
        Alphabet::numbered("s", 2)?,
        Alphabet::numbered("x", 2)?,
        pq_matrix(p, q),
    )
}

/// Recovers `(p, q)` when the 2x2 joint has the binary-family shape with
/// `p in [1/2, 1]`, `q in [0, 1/2]`, `p + q <= 1`; `None` otherwise.
pub fn pq_decompose(joint: &JointPmf) -> Option<(f64, f64)> {
    if joint.n_rows() != 2 || joint.n_cols() != 2 {
        return None;
    }
    let p = joint.get(1, 0) + joint.get(1, 1);
    let q = if 1.0 - p >= p {
        joint.get(0, 1) / (1.0 - p)
    } else {
        joint.get(1, 0) / p
    };
    if !q.is_finite() {
        return None;
    }
    let tol = 1e-9;
    let expected = pq_matrix(p, q);
    for r in 0..2 {
        for c in 0..2 {
            if (joint.get(r, c) - expected[r][c]).abs() > tol {
                return None;
            }
        }
    }
    let in_box = (0.5 - tol..=1.0 + tol).contains(&p)
        && (-tol..=0.5 + tol).contains(&q)
        && p + q <= 1.0 + tol;
    in_box.then(|| (p.clamp(0.5, 1.0), q.clamp(0.0, 0.5)))
}

/// Clamps a parameter pair back into the family box.
pub fn pq_clamp(p: f64, q: f64) -> (f64, f64) {
    let p = p.clamp(0.5, 1.0);
    let q = q.clamp(0.0, (1.0 - p).min(0.5));
    (p, q)
}
