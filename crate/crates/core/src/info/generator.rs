use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Number of grid points used for the non-certified constant fallback and
/// for the construction-time convexity spot check.
const GRID_POINTS: usize = 10_000;

type EvalFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Kind {
    /// f(x) = |x - 1|
    TotalVariation,
    /// f(x) = x^2 - 1
    ChiSquared,
    /// f(x) = (x^alpha - 1) / (alpha - 1), alpha > 1
    Hellinger { alpha: f64 },
    /// User-supplied convex generator; constants fall back to grid estimates.
    Custom { eval: EvalFn, f_at_zero: f64 },
}

/// A convex generator `f` with `f(1) = 0`, together with its supremum norm
/// `K_{f,u}` and Lipschitz constant `L_{f,u}` on the interval `[0, 1/u]`.
///
/// Built-in generators carry closed-form constants; custom generators fall
/// back to dense-grid estimates which are lower bounds and therefore flagged
/// as non-certified.
#[derive(Clone)]
pub struct FGenerator {
    name: String,
    kind: Kind,
}

impl fmt::Debug for FGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FGenerator").field("name", &self.name).finish()
    }
}

impl FGenerator {
    pub fn total_variation() -> Self {
        Self {
            name: "tv".to_string(),
            kind: Kind::TotalVariation,
        }
    }

    pub fn chi_squared() -> Self {
        Self {
            name: "chi2".to_string(),
            kind: Kind::ChiSquared,
        }
    }

    pub fn hellinger(alpha: f64) -> Result<Self> {
        if !(alpha > 1.0) || !alpha.is_finite() {
            return Err(Error::ParameterOutOfRange {
                name: "alpha",
                value: alpha,
                low: 1.0,
                high: f64::INFINITY,
            });
        }
        Ok(Self {
            name: format!("hellinger:{alpha}"),
            kind: Kind::Hellinger { alpha },
        })
    }

    /// Wraps a user-supplied generator. The function must be convex on
    /// `[0, inf)` with `f(1) = 0` and a finite limit at zero; both conditions
    /// are spot-checked on a grid at construction time.
    pub fn custom<F>(name: &str, eval: F, f_at_zero: f64) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let gen = Self {
            name: name.to_string(),
            kind: Kind::Custom {
                eval: Arc::new(eval),
                f_at_zero,
            },
        };
        gen.validate()?;
        Ok(gen)
    }

    /// Parses a metric name: `tv`, `chi2`, or `hellinger:<alpha>`.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "tv" => Ok(Self::total_variation()),
            "chi2" => Ok(Self::chi_squared()),
            _ => {
                if let Some(alpha) = name.strip_prefix("hellinger:") {
                    let alpha: f64 = alpha.parse().map_err(|_| Error::UnknownMetric {
                        name: name.to_string(),
                    })?;
                    return Self::hellinger(alpha);
                }
                Err(Error::UnknownMetric {
                    name: name.to_string(),
                })
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::TotalVariation => (x - 1.0).abs(),
            Kind::ChiSquared => x * x - 1.0,
            Kind::Hellinger { alpha } => (x.powf(*alpha) - 1.0) / (alpha - 1.0),
            Kind::Custom { eval, f_at_zero } => {
                if x == 0.0 {
                    *f_at_zero
                } else {
                    eval(x)
                }
            }
        }
    }

    /// The finite limit of `f` at zero.
    pub fn f_at_zero(&self) -> f64 {
        match &self.kind {
            Kind::TotalVariation => 1.0,
            Kind::ChiSquared => -1.0,
            Kind::Hellinger { alpha } => -1.0 / (alpha - 1.0),
            Kind::Custom { f_at_zero, .. } => *f_at_zero,
        }
    }

    /// `lim_{t->inf} f(t)/t` when finite; `None` means the divergence blows
    /// up on cells with `p > 0, q = 0`.
    pub fn slope_at_infinity(&self) -> Option<f64> {
        match &self.kind {
            Kind::TotalVariation => Some(1.0),
            Kind::ChiSquared | Kind::Hellinger { .. } | Kind::Custom { .. } => None,
        }
    }

    /// Whether `sup_norm` and `lipschitz` return certified (analytic) upper
    /// constants rather than grid lower estimates.
    pub fn certified(&self) -> bool {
        !matches!(self.kind, Kind::Custom { .. })
    }

    /// `K_{f,u}`: the supremum of `|f|` on `[0, 1/u]`.
    pub fn sup_norm(&self, u: f64) -> f64 {
        debug_assert!(u > 0.0);
        let hi = 1.0 / u;
        match &self.kind {
            Kind::TotalVariation => 1.0f64.max(hi - 1.0),
            Kind::ChiSquared => 1.0f64.max(hi * hi - 1.0),
            // f is increasing from f(0) = -1/(alpha-1) to f(1/u).
            Kind::Hellinger { alpha } => {
                let at_hi = (hi.powf(*alpha) - 1.0) / (alpha - 1.0);
                (1.0 / (alpha - 1.0)).max(at_hi.abs())
            }
            Kind::Custom { .. } => self.grid_constants(u).0,
        }
    }

    /// `L_{f,u}`: the Lipschitz constant of `f` on `[0, 1/u]`.
    pub fn lipschitz(&self, u: f64) -> f64 {
        debug_assert!(u > 0.0);
        let hi = 1.0 / u;
        match &self.kind {
            Kind::TotalVariation => 1.0,
            Kind::ChiSquared => 2.0 * hi,
            // f' = alpha x^(alpha-1) / (alpha-1) is nondecreasing.
            Kind::Hellinger { alpha } => alpha * hi.powf(alpha - 1.0) / (alpha - 1.0),
            Kind::Custom { .. } => self.grid_constants(u).1,
        }
    }

    /// Dense-grid estimates of `(K_{f,u}, L_{f,u})`; lower bounds on the true
    /// constants, used as the non-certified fallback for custom generators.
    pub fn grid_constants(&self, u: f64) -> (f64, f64) {
        let hi = 1.0 / u;
        let step = hi / (GRID_POINTS - 1) as f64;
        let mut sup = 0.0f64;
        let mut slope = 0.0f64;
        let mut prev = self.eval(0.0);
        sup = sup.max(prev.abs());
        for i in 1..GRID_POINTS {
            let x = step * i as f64;
            let v = self.eval(x);
            sup = sup.max(v.abs());
            slope = slope.max((v - prev).abs() / step);
            prev = v;
        }
        (sup, slope)
    }

    /// Spot-checks `f(1) = 0`, a finite limit at zero, and midpoint convexity
    /// on a grid over `[0, 4]`.
    pub fn validate(&self) -> Result<()> {
        let fail = |message: &str| Error::InvalidGenerator {
            name: self.name.clone(),
            message: message.to_string(),
        };
        if self.eval(1.0).abs() > 1e-12 {
            return Err(fail("f(1) must be 0"));
        }
        if !self.f_at_zero().is_finite() {
            return Err(fail("f(0) must be finite"));
        }
        if (self.eval(0.0) - self.f_at_zero()).abs() > 1e-9 {
            return Err(fail("eval(0) must agree with the declared f(0)"));
        }
        let n = 201;
        let xs: Vec<f64> = (0..n).map(|i| 4.0 * i as f64 / (n - 1) as f64).collect();
        for i in 0..n {
            for j in (i + 2..n).step_by(7) {
                let mid = 0.5 * (xs[i] + xs[j]);
                let lhs = self.eval(mid);
                let rhs = 0.5 * self.eval(xs[i]) + 0.5 * self.eval(xs[j]);
                if lhs > rhs + 1e-9 {
                    return Err(fail("midpoint convexity violated on the test grid"));
                }
            }
        }
        Ok(())
    }
}

/// The generators shipped with the crate: total variation, chi-squared, and
/// a representative Hellinger order. The KL generator is deliberately absent:
/// its unbounded slope at zero breaks every constant in this module.
pub fn builtin_generators() -> Vec<FGenerator> {
    vec![
        FGenerator::total_variation(),
        FGenerator::chi_squared(),
        FGenerator::hellinger(1.5).expect("1.5 > 1"),
    ]
}
