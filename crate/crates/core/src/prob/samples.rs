use std::io::Read;

use crate::error::{Error, Result};
use crate::prob::{Alphabet, JointPmf};

/// A set of observed (s, x) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSet {
    pairs: Vec<(String, String)>,
}

impl SampleSet {
    pub fn new(pairs: Vec<(String, String)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptySampleSet);
        }
        Ok(Self { pairs })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    /// Distinct s and x labels in order of first appearance; a fallback when
    /// the caller does not declare alphabets explicitly.
    pub fn observed_alphabets(&self) -> Result<(Alphabet, Alphabet)> {
        let mut s_labels: Vec<String> = Vec::new();
        let mut x_labels: Vec<String> = Vec::new();
        for (s, x) in &self.pairs {
            if !s_labels.contains(s) {
                s_labels.push(s.clone());
            }
            if !x_labels.contains(x) {
                x_labels.push(x.clone());
            }
        }
        Ok((Alphabet::new(s_labels)?, Alphabet::new(x_labels)?))
    }

    /// Reads the CSV interchange format: header `s,x`, one pair per line.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
        {
            let headers = rdr.headers().map_err(csv_error)?;
            if headers.len() != 2 || &headers[0] != "s" || &headers[1] != "x" {
                return Err(Error::CsvParse {
                    line: 1,
                    message: format!("expected header \"s,x\", got {:?}", headers),
                });
            }
        }
        let mut pairs = Vec::new();
        for record in rdr.records() {
            let record = record.map_err(csv_error)?;
            let line = record.position().map_or(0, |p| p.line());
            if record.len() != 2 {
                return Err(Error::CsvParse {
                    line,
                    message: format!("expected 2 fields, got {}", record.len()),
                });
            }
            pairs.push((record[0].to_string(), record[1].to_string()));
        }
        Self::new(pairs)
    }

    pub fn from_csv_str(text: &str) -> Result<Self> {
        Self::from_csv_reader(text.as_bytes())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,x\n");
        for (s, x) in &self.pairs {
            out.push_str(s);
            out.push(',');
            out.push_str(x);
            out.push('\n');
        }
        out
    }
}

fn csv_error(err: csv::Error) -> Error {
    let line = match err.position() {
        Some(pos) => pos.line(),
        None => 0,
    };
    Error::CsvParse {
        line,
        message: err.to_string(),
    }
}

/// Empirical joint distribution: cell (s, x) holds `count(s, x) / n`.
/// Symbols never observed get zero mass.
pub fn empirical_from_samples(
    samples: &SampleSet,
    s_alpha: &Alphabet,
    x_alpha: &Alphabet,
) -> Result<JointPmf> {
    let mut counts = vec![vec![0u64; x_alpha.len()]; s_alpha.len()];
    for (index, (s, x)) in samples.pairs().iter().enumerate() {
        let (Some(si), Some(xi)) = (s_alpha.index_of(s), x_alpha.index_of(x)) else {
            return Err(Error::UnknownSamplePair {
                s: s.clone(),
                x: x.clone(),
                index,
            });
        };
        counts[si][xi] += 1;
    }
    let n = samples.len() as f64;
    let p = counts
        .into_iter()
        .map(|row| row.into_iter().map(|c| c as f64 / n).collect())
        .collect();
    JointPmf::new(s_alpha.clone(), x_alpha.clone(), p)
}
