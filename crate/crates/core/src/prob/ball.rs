//! Sampling from l1 neighborhoods of a distribution, optionally restricted
//! to a structured family of joints.

use rand::Rng;

use crate::error::{Error, Result};
use crate::prob::binary::{pq_clamp, pq_decompose, pq_joint};
use crate::prob::{Axis, JointPmf};
use crate::random::{random_simplex, stream_rng};

/// Prior knowledge about the joint distribution: the whole simplex, joints
/// whose S and X marginals are entrywise at least `gamma`, or the binary
/// Bernoulli-through-BSC family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BallFamily {
    Full,
    MarginalLowerBound(f64),
    BinaryPQ,
}

impl BallFamily {
    /// Checks membership; returns a human-readable reason on failure.
    pub fn check(&self, q: &JointPmf) -> std::result::Result<(), String> {
        match *self {
            BallFamily::Full => Ok(()),
            BallFamily::MarginalLowerBound(gamma) => {
                let row_min = min_entry(&q.marginal(Axis::Row));
                let col_min = min_entry(&q.marginal(Axis::Col));
                if row_min < gamma || col_min < gamma {
                    Err(format!(
                        "marginal lower bound {gamma} violated (min S mass {row_min}, min X mass {col_min})"
                    ))
                } else {
                    Ok(())
                }
            }
            BallFamily::BinaryPQ => match pq_decompose(q) {
                Some(_) => Ok(()),
                None => Err("distribution is not of the binary p#q form".to_string()),
            },
        }
    }

    pub fn contains(&self, q: &JointPmf) -> bool {
        self.check(q).is_ok()
    }
}

fn min_entry(v: &[f64]) -> f64 {
    v.iter().copied().fold(f64::INFINITY, f64::min)
}

/// Draws `count` members of the family within l1 distance `r` of `center`.
///
/// Element 0 is always the center itself; the remaining draws pick a random
/// direction toward a uniform simplex point, a target radius uniform in
/// [0, r], and bisect back toward the center until the family constraint and
/// the radius both hold. Deterministic given `seed`.
pub fn sample_ball(
    center: &JointPmf,
    r: f64,
    family: BallFamily,
    count: usize,
    seed: u64,
) -> Result<Vec<JointPmf>> {
    if r < 0.0 {
        return Err(Error::ParameterOutOfRange {
            name: "r",
            value: r,
            low: 0.0,
            high: f64::INFINITY,
        });
    }
    if count == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "count",
            value: 0.0,
            low: 1.0,
            high: f64::INFINITY,
        });
    }
    if let Err(message) = family.check(center) {
        return Err(Error::CenterOutsideFamily { message });
    }

    let mut out = Vec::with_capacity(count);
    out.push(center.clone());
    for i in 1..count {
        let mut rng = stream_rng(seed, i as u64);
        let q = match family {
            BallFamily::BinaryPQ => sample_binary_member(center, r, &mut rng)?,
            _ => sample_simplex_member(center, r, family, &mut rng)?,
        };
        debug_assert!(center.l1_distance(&q).unwrap() <= r + 1e-12);
        out.push(q);
    }
    Ok(out)
}

fn sample_simplex_member<R: Rng>(
    center: &JointPmf,
    r: f64,
    family: BallFamily,
    rng: &mut R,
) -> Result<JointPmf> {
    let cells = center.n_rows() * center.n_cols();
    let direction = random_simplex(rng, cells);
    let target: f64 = rng.gen::<f64>() * r;

    let endpoint = JointPmf::new(
        center.row_alphabet().clone(),
        center.col_alphabet().clone(),
        direction
            .chunks(center.n_cols())
            .map(<[f64]>::to_vec)
            .collect(),
    )?;
    let full_dist = center.l1_distance(&endpoint)?;
    if full_dist <= f64::EPSILON {
        return Ok(center.clone());
    }

    // Walking toward a simplex point keeps every iterate on the simplex, and
    // the l1 distance from the center is exactly linear in the step.
    let mut s = (target / full_dist).min(1.0);
    if let BallFamily::MarginalLowerBound(_) = family {
        // The family is convex and contains the center, so the feasible step
        // sizes form an interval [0, s*]; bisect for it.
        if !family.contains(&center.blend(&endpoint, s)?) {
            let (mut lo, mut hi) = (0.0f64, s);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if family.contains(&center.blend(&endpoint, mid)?) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            s = lo;
        }
    }
    let mut q = center.blend(&endpoint, s)?;
    // Final l1 clip; construction keeps this a no-op unless rounding bites.
    for _ in 0..60 {
        if center.l1_distance(&q)? <= r {
            break;
        }
        s *= 0.5;
        q = center.blend(&endpoint, s)?;
    }
    Ok(q)
}

fn sample_binary_member<R: Rng>(center: &JointPmf, r: f64, rng: &mut R) -> Result<JointPmf> {
    let (p_hat, q_hat) = pq_decompose(center).expect("center checked against family");
    let dp: f64 = rng.gen::<f64>() * 2.0 - 1.0;
    let dq: f64 = rng.gen::<f64>() * 2.0 - 1.0;
    let target: f64 = rng.gen::<f64>() * r;

    let member_at = |s: f64| -> Result<JointPmf> {
        let (p, q) = pq_clamp(p_hat + s * dp, q_hat + s * dq);
        pq_joint(p, q)
    };
    let dist_at = |s: f64| -> Result<f64> { center.l1_distance(&member_at(s)?) };

    // Bisect the parameter step until the matrix lands at the target radius.
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    if dist_at(hi)? <= target {
        lo = hi;
    } else {
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if dist_at(mid)? <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    let mut s = lo;
    let mut q = member_at(s)?;
    for _ in 0..60 {
        if center.l1_distance(&q)? <= r {
            break;
        }
        s *= 0.5;
        q = member_at(s)?;
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::Alphabet;

    fn center_2x2() -> JointPmf {
        JointPmf::new(
            Alphabet::numbered("s", 2).unwrap(),
            Alphabet::numbered("x", 2).unwrap(),
            vec![vec![0.4, 0.1], vec![0.2, 0.3]],
        )
        .unwrap()
    }

    #[test]
    fn zero_radius_returns_copies_of_center() {
        let c = center_2x2();
        let samples = sample_ball(&c, 0.0, BallFamily::Full, 5, 9).unwrap();
        assert_eq!(samples.len(), 5);
        for q in &samples {
            assert_eq!(c.l1_distance(q).unwrap(), 0.0);
        }
    }

    #[test]
    fn all_samples_respect_radius_and_center_first() {
        let c = center_2x2();
        let r = 0.3;
        let samples = sample_ball(&c, r, BallFamily::Full, 64, 17).unwrap();
        assert_eq!(samples[0], c);
        for q in &samples {
            assert!(c.l1_distance(q).unwrap() <= r + 1e-12);
        }
        // The sampler should actually explore, not sit at the center.
        let spread = samples
            .iter()
            .map(|q| c.l1_distance(q).unwrap())
            .fold(0.0f64, f64::max);
        assert!(spread > 0.05);
    }

    #[test]
    fn deterministic_given_seed() {
        let c = center_2x2();
        let a = sample_ball(&c, 0.2, BallFamily::Full, 16, 3).unwrap();
        let b = sample_ball(&c, 0.2, BallFamily::Full, 16, 3).unwrap();
        assert_eq!(a, b);
        let c2 = sample_ball(&c, 0.2, BallFamily::Full, 16, 4).unwrap();
        assert_ne!(a, c2);
    }

    #[test]
    fn marginal_family_respected() {
        let c = JointPmf::uniform(
            Alphabet::numbered("s", 2).unwrap(),
            Alphabet::numbered("x", 2).unwrap(),
        );
        let family = BallFamily::MarginalLowerBound(0.35);
        let samples = sample_ball(&c, 0.5, family, 64, 5).unwrap();
        for q in &samples {
            assert!(family.contains(q));
            assert!(c.l1_distance(q).unwrap() <= 0.5 + 1e-12);
        }
    }

    #[test]
    fn binary_family_outputs_stay_parametric() {
        let c = pq_joint(0.6, 0.2).unwrap();
        let samples = sample_ball(&c, 0.1, BallFamily::BinaryPQ, 64, 21).unwrap();
        for q in &samples {
            assert!(pq_decompose(q).is_some());
            assert!(c.l1_distance(q).unwrap() <= 0.1 + 1e-12);
        }
    }

    #[test]
    fn center_outside_family_rejected() {
        let c = center_2x2();
        let err = sample_ball(&c, 0.1, BallFamily::MarginalLowerBound(0.45), 4, 1).unwrap_err();
        assert!(matches!(err, Error::CenterOutsideFamily { .. }));
        let err = sample_ball(&c, 0.1, BallFamily::BinaryPQ, 4, 1).unwrap_err();
        assert!(matches!(err, Error::CenterOutsideFamily { .. }));
    }
}
