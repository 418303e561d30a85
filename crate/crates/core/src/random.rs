//! Seeded randomness and random instance generators.
//!
//! All randomness flows from a single `u64` seed through per-task streams, so
//! trials are reproducible independently of execution order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::prob::{Alphabet, JointPmf, Mechanism};

/// RNG for stream `stream` of master seed `seed`. Distinct streams are
/// statistically independent and may be consumed in any order.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform (Dirichlet(1,...,1)) point on the probability simplex.
pub fn random_simplex<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    let mut weights: Vec<f64> = (0..k)
        .map(|_| {
            let u: f64 = rng.gen();
            -(1.0 - u).ln()
        })
        .collect();
    let sum: f64 = weights.iter().sum();
    if sum <= 0.0 {
        return vec![1.0 / k as f64; k];
    }
    for w in &mut weights {
        *w /= sum;
    }
    weights
}

/// Random joint distribution over `s_size x x_size` with labels `s1..`, `x1..`.
pub fn random_joint<R: Rng>(rng: &mut R, s_size: usize, x_size: usize) -> JointPmf {
    let flat = random_simplex(rng, s_size * x_size);
    let p = flat.chunks(x_size).map(<[f64]>::to_vec).collect();
    JointPmf::new(
        Alphabet::numbered("s", s_size).expect("non-empty"),
        Alphabet::numbered("x", x_size).expect("non-empty"),
        p,
    )
    .expect("sampled pmf is valid")
}

/// Random mechanism with row-wise uniform Dirichlet rows.
pub fn random_mechanism<R: Rng>(rng: &mut R, input: &Alphabet, n_outputs: usize) -> Mechanism {
    let rows = (0..input.len())
        .map(|_| random_simplex(rng, n_outputs))
        .collect();
    Mechanism::new(
        input.clone(),
        Alphabet::numbered("y", n_outputs).expect("non-empty"),
        rows,
    )
    .expect("sampled rows are stochastic")
}

/// Draws `n` i.i.d. samples from a joint pmf and returns per-cell counts.
pub fn multinomial_counts<R: Rng>(rng: &mut R, p: &JointPmf, n: usize) -> Vec<Vec<u64>> {
    let mut counts = vec![vec![0u64; p.n_cols()]; p.n_rows()];
    // Cumulative distribution over flattened cells.
    let mut cdf = Vec::with_capacity(p.n_rows() * p.n_cols());
    let mut acc = 0.0;
    for row in p.matrix() {
        for &v in row {
            acc += v;
            cdf.push(acc);
        }
    }
    let ncols = p.n_cols();
    for _ in 0..n {
        let u: f64 = rng.gen();
        let cell = cdf.partition_point(|&c| c < u).min(cdf.len() - 1);
        counts[cell / ncols][cell % ncols] += 1;
    }
    counts
}

/// Empirical distribution of `n` i.i.d. draws from `p`, over the same alphabets.
pub fn sample_empirical<R: Rng>(rng: &mut R, p: &JointPmf, n: usize) -> JointPmf {
    let counts = multinomial_counts(rng, p, n);
    let rows = counts
        .into_iter()
        .map(|row| row.into_iter().map(|c| c as f64 / n as f64).collect())
        .collect();
    JointPmf::new(p.row_alphabet().clone(), p.col_alphabet().clone(), rows)
        .expect("empirical pmf is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<f64> = {
            let mut rng = stream_rng(7, 3);
            (0..4).map(|_| rng.gen()).collect()
        };
        let b: Vec<f64> = {
            let mut rng = stream_rng(7, 3);
            (0..4).map(|_| rng.gen()).collect()
        };
        assert_eq!(a, b);
        let c: Vec<f64> = {
            let mut rng = stream_rng(7, 4);
            (0..4).map(|_| rng.gen()).collect()
        };
        assert_ne!(a, c);
    }

    #[test]
    fn simplex_points_are_normalized() {
        let mut rng = stream_rng(1, 0);
        for k in 1..6 {
            let v = random_simplex(&mut rng, k);
            assert_eq!(v.len(), k);
            assert!(v.iter().all(|&x| x >= 0.0));
            assert_abs_diff_eq!(v.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn empirical_sample_tracks_distribution() {
        let mut rng = stream_rng(11, 0);
        let p = random_joint(&mut rng, 2, 2);
        let emp = sample_empirical(&mut rng, &p, 200_000);
        assert!(p.l1_distance(&emp).unwrap() < 0.02);
    }
}
