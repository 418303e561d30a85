use crate::error::Result;
use crate::info::measures::{f_information, pc_given};
use crate::info::FGenerator;
use crate::prob::{push_through, JointPmf, Keep, Mechanism};

/// Which functional measures leakage or utility: an f-information, or the
/// probability of correct guessing.
///
/// Leakage and utility may use different metrics; call sites always pair two
/// `MetricSpec` values explicitly.
#[derive(Debug, Clone)]
pub enum MetricSpec {
    FInfo(FGenerator),
    CorrectGuessing,
}

impl MetricSpec {
    pub fn f_info(generator: FGenerator) -> Self {
        MetricSpec::FInfo(generator)
    }

    pub fn correct_guessing() -> Self {
        MetricSpec::CorrectGuessing
    }

    /// Parses `tv`, `chi2`, `hellinger:<alpha>`, or `pc`.
    pub fn parse(name: &str) -> Result<Self> {
        if name == "pc" {
            Ok(MetricSpec::CorrectGuessing)
        } else {
            Ok(MetricSpec::FInfo(FGenerator::parse(name)?))
        }
    }

    pub fn name(&self) -> String {
        match self {
            MetricSpec::FInfo(f) => f.name().to_string(),
            MetricSpec::CorrectGuessing => "pc".to_string(),
        }
    }

    pub fn is_correct_guessing(&self) -> bool {
        matches!(self, MetricSpec::CorrectGuessing)
    }
}

/// Privacy leakage of a mechanism: the chosen metric applied to the joint of
/// (S, Y).
pub fn leakage(spec: &MetricSpec, q_sx: &JointPmf, mech: &Mechanism) -> Result<f64> {
    let p_sy = push_through(q_sx, mech, Keep::S)?;
    Ok(match spec {
        MetricSpec::FInfo(f) => f_information(f, &p_sy),
        MetricSpec::CorrectGuessing => pc_given(&p_sy),
    })
}

/// Utility of a mechanism: the chosen metric applied to the joint of (X, Y).
pub fn utility(spec: &MetricSpec, q_sx: &JointPmf, mech: &Mechanism) -> Result<f64> {
    let p_xy = push_through(q_sx, mech, Keep::X)?;
    Ok(match spec {
        MetricSpec::FInfo(f) => f_information(f, &p_xy),
        MetricSpec::CorrectGuessing => pc_given(&p_xy),
    })
}
