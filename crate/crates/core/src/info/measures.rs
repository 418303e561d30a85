use crate::error::{Error, Result};
use crate::info::FGenerator;
use crate::prob::JointPmf;

/// One cell of `sum q f(p/q)` under the standard conventions
/// `0 f(0/0) = 0` and `q f(0/q) = q f(0)`; a cell with `p > 0, q = 0`
/// contributes `p lim f(t)/t` when that limit is finite.
fn divergence_cell(f: &FGenerator, p: f64, q: f64, index: usize) -> Result<f64> {
    if q > 0.0 {
        if p == 0.0 {
            Ok(q * f.f_at_zero())
        } else {
            Ok(q * f.eval(p / q))
        }
    } else if p == 0.0 {
        Ok(0.0)
    } else {
        match f.slope_at_infinity() {
            Some(slope) => Ok(p * slope),
            None => Err(Error::AbsoluteContinuity { index, p }),
        }
    }
}

/// f-divergence between two probability vectors of the same length.
pub fn f_divergence_vec(f: &FGenerator, p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::AlphabetMismatch {
            context: "f-divergence".to_string(),
        });
    }
    let mut acc = 0.0;
    for (i, (&pi, &qi)) in p.iter().zip(q).enumerate() {
        acc += divergence_cell(f, pi, qi, i)?;
    }
    Ok(acc)
}

/// f-divergence between two joint distributions over the same alphabets.
pub fn f_divergence(f: &FGenerator, p: &JointPmf, q: &JointPmf) -> Result<f64> {
    if p.row_alphabet() != q.row_alphabet() || p.col_alphabet() != q.col_alphabet() {
        return Err(Error::AlphabetMismatch {
            context: "f-divergence".to_string(),
        });
    }
    let flat_p: Vec<f64> = p.matrix().iter().flatten().copied().collect();
    let flat_q: Vec<f64> = q.matrix().iter().flatten().copied().collect();
    f_divergence_vec(f, &flat_p, &flat_q)
}

/// f-information of a raw joint matrix: the f-divergence between the joint
/// and the product of its marginals. Never hits the absolute-continuity
/// error because a vanishing product forces a vanishing joint cell.
pub(crate) fn f_information_matrix(f: &FGenerator, m: &[Vec<f64>]) -> f64 {
    let n_cols = m.first().map_or(0, Vec::len);
    let rows: Vec<f64> = m.iter().map(|r| r.iter().sum()).collect();
    let cols: Vec<f64> = (0..n_cols)
        .map(|c| m.iter().map(|r| r[c]).sum())
        .collect();
    let mut acc = 0.0;
    for (r, row) in m.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            let q = rows[r] * cols[c];
            acc += divergence_cell(f, v, q, r * n_cols + c)
                .expect("joint cell vanishes whenever the marginal product does");
        }
    }
    acc
}

/// f-information `I_f` of a joint distribution.
pub fn f_information(f: &FGenerator, p_uv: &JointPmf) -> f64 {
    f_information_matrix(f, p_uv.matrix())
}

/// Probability of correctly guessing a variable from its marginal alone.
pub fn pc(marginal: &[f64]) -> f64 {
    marginal.iter().copied().fold(0.0, f64::max)
}

/// Probability of correctly guessing the row variable U after observing the
/// column variable V: the sum over columns of the column maximum.
pub(crate) fn pc_given_matrix(m: &[Vec<f64>]) -> f64 {
    let n_cols = m.first().map_or(0, Vec::len);
    (0..n_cols)
        .map(|c| m.iter().map(|r| r[c]).fold(0.0, f64::max))
        .sum()
}

/// Probability of correctly guessing U given V for a joint distribution.
pub fn pc_given(p_uv: &JointPmf) -> f64 {
    pc_given_matrix(p_uv.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::Alphabet;
    use crate::random::{random_joint, stream_rng};
    use approx::assert_abs_diff_eq;

    fn alpha(labels: &[&str]) -> Alphabet {
        Alphabet::new(labels.iter().copied()).unwrap()
    }

    #[test]
    fn divergence_of_equal_vectors_is_zero() {
        for f in crate::info::builtin_generators() {
            let p = [0.2, 0.3, 0.5];
            assert_abs_diff_eq!(f_divergence_vec(&f, &p, &p).unwrap(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn tv_divergence_equals_l1() {
        let tv = FGenerator::total_variation();
        let mut rng = stream_rng(5, 0);
        for _ in 0..50 {
            let p = random_joint(&mut rng, 2, 3);
            let q = random_joint(&mut rng, 2, 3);
            let div = f_divergence(&tv, &p, &q).unwrap();
            assert_abs_diff_eq!(div, p.l1_distance(&q).unwrap(), epsilon = 1e-12);
        }
    }

    #[test]
    fn chi2_divergence_hand_value() {
        let chi2 = FGenerator::chi_squared();
        let d = f_divergence_vec(&chi2, &[1.0, 0.0], &[0.5, 0.5]).unwrap();
        assert_abs_diff_eq!(d, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn chi2_blows_up_off_support() {
        let chi2 = FGenerator::chi_squared();
        let err = f_divergence_vec(&chi2, &[0.5, 0.5], &[1.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::AbsoluteContinuity { index: 1, .. }));
        // TV has linear growth, so the same pair is fine.
        let tv = FGenerator::total_variation();
        assert_abs_diff_eq!(
            f_divergence_vec(&tv, &[0.5, 0.5], &[1.0, 0.0]).unwrap(),
            1.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn information_of_product_is_zero() {
        let mut rng = stream_rng(6, 0);
        for f in crate::info::builtin_generators() {
            for _ in 0..20 {
                let p = random_joint(&mut rng, 3, 2);
                let product = p.product_of_marginals();
                assert_abs_diff_eq!(f_information(&f, &product), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn information_of_correlated_pair() {
        let p = JointPmf::new(
            alpha(&["0", "1"]),
            alpha(&["a", "b"]),
            vec![vec![0.5, 0.0], vec![0.0, 0.5]],
        )
        .unwrap();
        let tv = FGenerator::total_variation();
        assert_abs_diff_eq!(f_information(&tv, &p), 1.0, epsilon = 1e-15);
        let chi2 = FGenerator::chi_squared();
        assert_abs_diff_eq!(f_information(&chi2, &p), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn pc_values() {
        assert_abs_diff_eq!(pc(&[0.25; 4]), 0.25, epsilon = 1e-15);
        assert_eq!(pc(&[0.0, 1.0, 0.0]), 1.0);
        assert_eq!(pc(&[0.6, 0.2, 0.2]), 0.6);
    }

    #[test]
    fn pc_given_values() {
        // Independent: the maximum factors out.
        let independent = JointPmf::new(
            alpha(&["0", "1"]),
            alpha(&["a", "b"]),
            vec![vec![0.42, 0.28], vec![0.18, 0.12]],
        )
        .unwrap();
        assert_abs_diff_eq!(pc_given(&independent), 0.7, epsilon = 1e-12);

        let identical = JointPmf::new(
            alpha(&["0", "1"]),
            alpha(&["a", "b"]),
            vec![vec![0.5, 0.0], vec![0.0, 0.5]],
        )
        .unwrap();
        assert_abs_diff_eq!(pc_given(&identical), 1.0, epsilon = 1e-15);

        let mixed = JointPmf::new(
            alpha(&["0", "1"]),
            alpha(&["a", "b"]),
            vec![vec![0.4, 0.1], vec![0.2, 0.3]],
        )
        .unwrap();
        assert_abs_diff_eq!(pc_given(&mixed), 0.7, epsilon = 1e-15);
    }
}
