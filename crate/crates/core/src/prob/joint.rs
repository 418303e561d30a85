use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prob::Alphabet;

/// Tolerance for simplex membership: entry sums within this distance of the
/// target are renormalized on construction, anything further is rejected.
pub const PROB_TOLERANCE: f64 = 1e-12;

/// Axis selector for marginalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Col,
}

/// A joint probability mass function over `rows x cols`.
///
/// Rows play the role of the secret variable S and columns the observed
/// variable X (or, after a channel is applied, the released variable Y).
#[derive(Debug, Clone, PartialEq)]
pub struct JointPmf {
    row_alphabet: Alphabet,
    col_alphabet: Alphabet,
    p: Vec<Vec<f64>>,
}

/// On-disk schema: `{"s_labels": [...], "x_labels": [...], "pmf": [[...]]}`.
#[derive(Serialize, Deserialize)]
struct JointPmfFile {
    s_labels: Vec<String>,
    x_labels: Vec<String>,
    pmf: Vec<Vec<f64>>,
}

/// Validates entries and renormalizes a near-simplex vector in place.
///
/// Entries below `-PROB_TOLERANCE` and sums further than `PROB_TOLERANCE`
/// from `target` are rejected; small negatives are clamped to zero.
pub(crate) fn normalize_mass(entries: &mut [f64], target: f64) -> Result<()> {
    for &e in entries.iter() {
        if e < -PROB_TOLERANCE || !e.is_finite() {
            return Err(Error::NegativeEntry(e));
        }
    }
    for e in entries.iter_mut() {
        if *e < 0.0 {
            *e = 0.0;
        }
    }
    let sum: f64 = entries.iter().sum();
    if (sum - target).abs() > PROB_TOLERANCE {
        return Err(Error::NotNormalized { sum, target });
    }
    if sum != target {
        for e in entries.iter_mut() {
            *e *= target / sum;
        }
        // Pin the sum to exactly `target` by absorbing the rounding residual
        // into the largest entry; this makes construction idempotent, so
        // serialized values survive a read-back unchanged.
        let largest = (0..entries.len())
            .max_by(|&a, &b| entries[a].total_cmp(&entries[b]))
            .expect("entries is non-empty");
        for _ in 0..8 {
            let s: f64 = entries.iter().sum();
            if s == target {
                break;
            }
            entries[largest] += target - s;
        }
    }
    Ok(())
}

impl JointPmf {
    pub fn new(row_alphabet: Alphabet, col_alphabet: Alphabet, p: Vec<Vec<f64>>) -> Result<Self> {
        let (nr, nc) = (row_alphabet.len(), col_alphabet.len());
        if p.len() != nr || p.iter().any(|row| row.len() != nc) {
            return Err(Error::ShapeMismatch {
                rows: p.len(),
                cols: p.first().map_or(0, Vec::len),
                expected_rows: nr,
                expected_cols: nc,
            });
        }
        let mut flat: Vec<f64> = p.iter().flatten().copied().collect();
        normalize_mass(&mut flat, 1.0)?;
        let p = flat.chunks(nc).map(<[f64]>::to_vec).collect();
        Ok(Self {
            row_alphabet,
            col_alphabet,
            p,
        })
    }

    /// Uniform distribution over the product alphabet.
    pub fn uniform(row_alphabet: Alphabet, col_alphabet: Alphabet) -> Self {
        let cell = 1.0 / (row_alphabet.len() * col_alphabet.len()) as f64;
        let p = vec![vec![cell; col_alphabet.len()]; row_alphabet.len()];
        Self::new(row_alphabet, col_alphabet, p).expect("uniform pmf is valid")
    }

    pub fn row_alphabet(&self) -> &Alphabet {
        &self.row_alphabet
    }

    pub fn col_alphabet(&self) -> &Alphabet {
        &self.col_alphabet
    }

    pub fn n_rows(&self) -> usize {
        self.row_alphabet.len()
    }

    pub fn n_cols(&self) -> usize {
        self.col_alphabet.len()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.p[row][col]
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.p
    }

    /// Marginal pmf along the requested axis.
    pub fn marginal(&self, axis: Axis) -> Vec<f64> {
        match axis {
            Axis::Row => self.p.iter().map(|row| row.iter().sum()).collect(),
            Axis::Col => (0..self.n_cols())
                .map(|c| self.p.iter().map(|row| row[c]).sum())
                .collect(),
        }
    }

    /// Product of the two marginals, as a joint pmf over the same alphabets.
    pub fn product_of_marginals(&self) -> Self {
        let rows = self.marginal(Axis::Row);
        let cols = self.marginal(Axis::Col);
        let p = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| r * c).collect())
            .collect();
        Self::new(self.row_alphabet.clone(), self.col_alphabet.clone(), p)
            .expect("product of marginals is a valid pmf")
    }

    fn check_same_alphabets(&self, other: &Self, context: &str) -> Result<()> {
        if self.row_alphabet != other.row_alphabet || self.col_alphabet != other.col_alphabet {
            return Err(Error::AlphabetMismatch {
                context: context.to_string(),
            });
        }
        Ok(())
    }

    /// Entrywise l1 distance; lies in [0, 2] for probability vectors.
    pub fn l1_distance(&self, other: &Self) -> Result<f64> {
        self.check_same_alphabets(other, "l1 distance")?;
        Ok(self
            .p
            .iter()
            .zip(&other.p)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
            .sum())
    }

    /// Convex combination `(1 - t) * self + t * other`; both operands must
    /// share alphabets and `t` must lie in [0, 1].
    pub fn blend(&self, other: &Self, t: f64) -> Result<Self> {
        self.check_same_alphabets(other, "blend")?;
        let p = self
            .p
            .iter()
            .zip(&other.p)
            .map(|(a, b)| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| (1.0 - t) * x + t * y)
                    .collect()
            })
            .collect();
        Self::new(self.row_alphabet.clone(), self.col_alphabet.clone(), p)
    }

    pub fn to_json(&self) -> String {
        let file = JointPmfFile {
            s_labels: self.row_alphabet.labels().to_vec(),
            x_labels: self.col_alphabet.labels().to_vec(),
            pmf: self.p.clone(),
        };
        serde_json::to_string_pretty(&file).expect("pmf serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: JointPmfFile = serde_json::from_str(text)?;
        Self::new(
            Alphabet::new(file.s_labels)?,
            Alphabet::new(file.x_labels)?,
            file.pmf,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn alpha(labels: &[&str]) -> Alphabet {
        Alphabet::new(labels.iter().copied()).unwrap()
    }

    fn pmf(rows: &[&str], cols: &[&str], p: Vec<Vec<f64>>) -> JointPmf {
        JointPmf::new(alpha(rows), alpha(cols), p).unwrap()
    }

    #[test]
    fn rejects_negative_entries() {
        let err = JointPmf::new(
            alpha(&["a"]),
            alpha(&["0", "1"]),
            vec![vec![1.5, -0.5]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NegativeEntry(_)));
    }

    #[test]
    fn rejects_bad_sum_and_renormalizes_within_tolerance() {
        let err =
            JointPmf::new(alpha(&["a"]), alpha(&["0", "1"]), vec![vec![0.6, 0.5]]).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));

        let p = JointPmf::new(
            alpha(&["a"]),
            alpha(&["0", "1"]),
            vec![vec![0.5 + 3e-13, 0.5]],
        )
        .unwrap();
        let total: f64 = p.matrix().iter().flatten().sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn l1_identity_is_zero() {
        let p = pmf(&["a", "b"], &["0", "1"], vec![vec![0.5, 0.25], vec![0.0, 0.25]]);
        assert_eq!(p.l1_distance(&p).unwrap(), 0.0);
    }

    #[test]
    fn l1_disjoint_supports_is_two() {
        let p = pmf(&["a"], &["0", "1"], vec![vec![1.0, 0.0]]);
        let q = pmf(&["a"], &["0", "1"], vec![vec![0.0, 1.0]]);
        assert_eq!(p.l1_distance(&q).unwrap(), 2.0);
    }

    #[test]
    fn l1_half_half_vs_point_mass() {
        let p = pmf(&["a"], &["0", "1"], vec![vec![0.5, 0.5]]);
        let q = pmf(&["a"], &["0", "1"], vec![vec![1.0, 0.0]]);
        assert_abs_diff_eq!(p.l1_distance(&q).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn l1_rejects_alphabet_mismatch() {
        let p = pmf(&["a"], &["0", "1"], vec![vec![0.5, 0.5]]);
        let q = pmf(&["b"], &["0", "1"], vec![vec![0.5, 0.5]]);
        assert!(matches!(
            p.l1_distance(&q),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn marginals() {
        let p = pmf(&["a", "b"], &["0", "1"], vec![vec![0.5, 0.25], vec![0.0, 0.25]]);
        assert_eq!(p.marginal(Axis::Row), vec![0.75, 0.25]);

        let u = JointPmf::uniform(alpha(&["a", "b"]), alpha(&["0", "1"]));
        assert_eq!(u.marginal(Axis::Col), vec![0.5, 0.5]);

        let point = pmf(&["a", "b"], &["0"], vec![vec![1.0], vec![0.0]]);
        assert_eq!(point.marginal(Axis::Row), vec![1.0, 0.0]);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let p = pmf(
            &["a", "b"],
            &["0", "1"],
            vec![vec![0.5, 0.25], vec![0.0, 0.25]],
        );
        let text = p.to_json();
        let q = JointPmf::from_json(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(text, q.to_json());
    }

    #[test]
    fn serialized_values_survive_reparsing() {
        // 17-significant-digit decimals: write/parse must preserve the f64s.
        let thirds = vec![vec![
            0.33333333333333331,
            0.33333333333333331,
            0.33333333333333337,
        ]];
        let p = JointPmf::new(alpha(&["a"]), alpha(&["0", "1", "2"]), thirds).unwrap();
        let text = p.to_json();
        let q = JointPmf::from_json(&text).unwrap();
        assert_eq!(text, q.to_json());
        for c in 0..3 {
            assert_eq!(p.get(0, c).to_bits(), q.get(0, c).to_bits());
        }
    }
}
