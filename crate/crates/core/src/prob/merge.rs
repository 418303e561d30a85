use crate::error::{Error, Result};
use crate::prob::{Alphabet, Axis, JointPmf, Mechanism};

/// Deterministic preprocessing that collapses every X symbol whose empirical
/// mass falls below a threshold `gamma` into a single fresh sink symbol.
///
/// The sink is always appended as the last symbol of the output alphabet,
/// even when nothing is merged, so downstream shapes stay stable.
#[derive(Debug, Clone, PartialEq)]
pub struct MergeMap {
    gamma: f64,
    input_alphabet: Alphabet,
    kept: Vec<usize>,
    dropped: Vec<usize>,
    sink_label: String,
    output_alphabet: Alphabet,
}

fn fresh_sink_label(input: &Alphabet) -> String {
    let mut label = String::from("x0");
    while input.contains(&label) {
        label.push('#');
    }
    label
}

impl MergeMap {
    /// Builds the map from an empirical X-marginal; symbols with mass
    /// `>= gamma` are kept in their original order.
    fn from_marginal(input_alphabet: &Alphabet, marginal: &[f64], gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::ParameterOutOfRange {
                name: "gamma",
                value: gamma,
                low: 0.0,
                high: 1.0,
            });
        }
        let (kept, dropped): (Vec<usize>, Vec<usize>) =
            (0..input_alphabet.len()).partition(|&x| marginal[x] >= gamma);
        let sink_label = fresh_sink_label(input_alphabet);
        let mut labels: Vec<String> = kept
            .iter()
            .map(|&x| input_alphabet.label(x).to_string())
            .collect();
        labels.push(sink_label.clone());
        let output_alphabet = Alphabet::new(labels)?;
        Ok(Self {
            gamma,
            input_alphabet: input_alphabet.clone(),
            kept,
            dropped,
            sink_label,
            output_alphabet,
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn kept_labels(&self) -> Vec<&str> {
        self.kept
            .iter()
            .map(|&x| self.input_alphabet.label(x))
            .collect()
    }

    pub fn dropped_labels(&self) -> Vec<&str> {
        self.dropped
            .iter()
            .map(|&x| self.input_alphabet.label(x))
            .collect()
    }

    pub fn sink_label(&self) -> &str {
        &self.sink_label
    }

    pub fn dropped_any(&self) -> bool {
        !self.dropped.is_empty()
    }

    /// The map as a deterministic channel from X to the merged alphabet.
    pub fn as_mechanism(&self) -> Mechanism {
        let ny = self.output_alphabet.len();
        let sink = ny - 1;
        let mut rows = vec![vec![0.0; ny]; self.input_alphabet.len()];
        for (out, &x) in self.kept.iter().enumerate() {
            rows[x][out] = 1.0;
        }
        for &x in &self.dropped {
            rows[x][sink] = 1.0;
        }
        Mechanism::new(
            self.input_alphabet.clone(),
            self.output_alphabet.clone(),
            rows,
        )
        .expect("merge rows are stochastic")
    }

    /// Merges a marginal vector over X into a vector over the merged alphabet.
    pub fn apply_to_marginal(&self, marginal: &[f64]) -> Vec<f64> {
        let mut out: Vec<f64> = self.kept.iter().map(|&x| marginal[x]).collect();
        out.push(self.dropped.iter().map(|&x| marginal[x]).sum());
        out
    }
}

/// Builds the merge map from `p_hat`'s own X-marginal and applies it.
pub fn merge_rare_symbols(p_hat: &JointPmf, gamma: f64) -> Result<(JointPmf, MergeMap)> {
    let marginal = p_hat.marginal(Axis::Col);
    let map = MergeMap::from_marginal(p_hat.col_alphabet(), &marginal, gamma)?;
    let merged = apply_merge(p_hat, &map)?;
    Ok((merged, map))
}

/// Applies a previously built merge map to any joint distribution over the
/// same S and X alphabets; dropped columns are summed into the sink column.
pub fn apply_merge(p: &JointPmf, map: &MergeMap) -> Result<JointPmf> {
    if p.col_alphabet() != map.input_alphabet() {
        return Err(Error::AlphabetMismatch {
            context: "apply merge map".to_string(),
        });
    }
    let rows = p
        .matrix()
        .iter()
        .map(|row| map.apply_to_marginal(row))
        .collect();
    JointPmf::new(p.row_alphabet().clone(), map.output_alphabet().clone(), rows)
}
