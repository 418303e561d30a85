use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Large-deviation radius for the empirical distribution of a multinomial
/// sample: with probability at least `1 - beta`, the empirical distribution
/// over `big_m` cells lies within l1 distance `radius` of the truth.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DevroyeReport {
    pub lambda: f64,
    pub big_m: usize,
    pub n: usize,
    pub radius: f64,
    pub beta: f64,
}

/// `radius = lambda * sqrt(20 M / n)` and `beta = 3 exp(-4 lambda^2 M / 5)`,
/// valid for `lambda >= 1`.
pub fn devroye_radius(lambda: f64, s_size: usize, x_size: usize, n: usize) -> Result<DevroyeReport> {
    if !(lambda >= 1.0) {
        return Err(Error::LambdaBelowOne(lambda));
    }
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: 0.0,
            low: 0.0,
            high: f64::INFINITY,
        });
    }
    let big_m = s_size * x_size;
    let m = big_m as f64;
    let radius = lambda * (20.0 * m / n as f64).sqrt();
    let beta = 3.0 * (-4.0 * lambda * lambda * m / 5.0).exp();
    Ok(DevroyeReport {
        lambda,
        big_m,
        n,
        radius,
        beta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn radius_at_unit_lambda() {
        let report = devroye_radius(1.0, 2, 2, 80).unwrap();
        assert_abs_diff_eq!(report.radius, 1.0, epsilon = 1e-15);
        assert_eq!(report.big_m, 4);
    }

    #[test]
    fn beta_at_unit_lambda() {
        let report = devroye_radius(1.0, 2, 2, 80).unwrap();
        assert_abs_diff_eq!(report.beta, 3.0 * (-3.2f64).exp(), epsilon = 1e-15);
        assert!(report.beta > 0.0);
    }

    #[test]
    fn radius_scales_with_lambda_and_n() {
        let report = devroye_radius(2.0, 2, 2, 320).unwrap();
        assert_abs_diff_eq!(report.radius, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn lambda_below_one_rejected() {
        assert!(matches!(
            devroye_radius(0.99, 2, 2, 100),
            Err(Error::LambdaBelowOne(_))
        ));
    }
}
