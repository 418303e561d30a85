use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prob::joint::normalize_mass;
use crate::prob::{Alphabet, JointPmf};

/// Which side of the chain `S -> X -> Y` to keep when pushing a joint
/// distribution through a mechanism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keep {
    S,
    X,
}

/// A privacy mechanism: a row-stochastic matrix from an input alphabet X to
/// an output alphabet Y. The canonical search space uses `|Y| = |X| + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mechanism {
    input_alphabet: Alphabet,
    output_alphabet: Alphabet,
    rows: Vec<Vec<f64>>,
}

/// On-disk schema: `{"x_labels": [...], "y_labels": [...], "rows": [[...]]}`.
#[derive(Serialize, Deserialize)]
struct MechanismFile {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    rows: Vec<Vec<f64>>,
}

/// Default output alphabet `y1 .. y{n+1}` for an input alphabet of size `n`.
pub fn default_output_alphabet(input_size: usize) -> Alphabet {
    Alphabet::numbered("y", input_size + 1).expect("non-empty alphabet")
}

impl Mechanism {
    pub fn new(
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let (nx, ny) = (input_alphabet.len(), output_alphabet.len());
        if rows.len() != nx || rows.iter().any(|row| row.len() != ny) {
            return Err(Error::ShapeMismatch {
                rows: rows.len(),
                cols: rows.first().map_or(0, Vec::len),
                expected_rows: nx,
                expected_cols: ny,
            });
        }
        let mut rows = rows;
        for row in &mut rows {
            normalize_mass(row, 1.0)?;
        }
        Ok(Self {
            input_alphabet,
            output_alphabet,
            rows,
        })
    }

    /// Mechanism with the default `|Y| = |X| + 1` output alphabet.
    pub fn with_default_outputs(input_alphabet: Alphabet, rows: Vec<Vec<f64>>) -> Result<Self> {
        let output = default_output_alphabet(input_alphabet.len());
        Self::new(input_alphabet, output, rows)
    }

    /// Identity channel padded with one all-zero output column: full
    /// disclosure of X on the default output alphabet.
    pub fn identity_padded(input_alphabet: Alphabet) -> Self {
        let n = input_alphabet.len();
        let rows = (0..n)
            .map(|i| {
                let mut row = vec![0.0; n + 1];
                row[i] = 1.0;
                row
            })
            .collect();
        Self::with_default_outputs(input_alphabet, rows).expect("identity rows are stochastic")
    }

    /// Constant channel: every row is the point mass on the first output, so
    /// Y carries no information about X.
    pub fn constant(input_alphabet: Alphabet) -> Self {
        let n = input_alphabet.len();
        let mut row = vec![0.0; n + 1];
        row[0] = 1.0;
        let rows = vec![row; n];
        Self::with_default_outputs(input_alphabet, rows).expect("constant rows are stochastic")
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn n_inputs(&self) -> usize {
        self.input_alphabet.len()
    }

    pub fn n_outputs(&self) -> usize {
        self.output_alphabet.len()
    }

    pub fn get(&self, input: usize, output: usize) -> f64 {
        self.rows[input][output]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Chains two mechanisms: `(self; next)[x, z] = sum_y self[x, y] * next[y, z]`.
    pub fn compose(&self, next: &Mechanism) -> Result<Mechanism> {
        if self.output_alphabet != *next.input_alphabet() {
            return Err(Error::AlphabetMismatch {
                context: "mechanism composition".to_string(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                (0..next.n_outputs())
                    .map(|z| {
                        row.iter()
                            .enumerate()
                            .map(|(y, &w)| w * next.get(y, z))
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Mechanism::new(
            self.input_alphabet.clone(),
            next.output_alphabet().clone(),
            rows,
        )
    }

    pub fn to_json(&self) -> String {
        let file = MechanismFile {
            x_labels: self.input_alphabet.labels().to_vec(),
            y_labels: self.output_alphabet.labels().to_vec(),
            rows: self.rows.clone(),
        };
        serde_json::to_string_pretty(&file).expect("mechanism serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: MechanismFile = serde_json::from_str(text)?;
        Self::new(
            Alphabet::new(file.x_labels)?,
            Alphabet::new(file.y_labels)?,
            file.rows,
        )
    }
}

/// Pushes a joint S,X distribution through a mechanism acting on X.
///
/// With `Keep::S` the result is the joint of (S, Y); with `Keep::X` it is the
/// joint of (X, Y).
pub fn push_through(p_sx: &JointPmf, mech: &Mechanism, keep: Keep) -> Result<JointPmf> {
    if p_sx.col_alphabet() != mech.input_alphabet() {
        return Err(Error::AlphabetMismatch {
            context: "push through mechanism".to_string(),
        });
    }
    let ny = mech.n_outputs();
    match keep {
        Keep::S => {
            let p = p_sx
                .matrix()
                .iter()
                .map(|row| {
                    (0..ny)
                        .map(|y| {
                            row.iter()
                                .enumerate()
                                .map(|(x, &v)| v * mech.get(x, y))
                                .sum()
                        })
                        .collect()
                })
                .collect();
            JointPmf::new(
                p_sx.row_alphabet().clone(),
                mech.output_alphabet().clone(),
                p,
            )
        }
        Keep::X => {
            let p_x = p_sx.marginal(crate::prob::Axis::Col);
            let p = p_x
                .iter()
                .enumerate()
                .map(|(x, &v)| (0..ny).map(|y| v * mech.get(x, y)).collect())
                .collect();
            JointPmf::new(
                p_sx.col_alphabet().clone(),
                mech.output_alphabet().clone(),
                p,
            )
        }
    }
}
