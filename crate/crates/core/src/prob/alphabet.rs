use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite, ordered alphabet of distinct symbol labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    labels: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateSymbol(label.clone()));
            }
        }
        Ok(Self { labels })
    }

    /// Alphabet `{prefix}1 .. {prefix}n`, matching the labeling used by the
    /// random-instance generators.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty() {
        assert!(matches!(
            Alphabet::new(Vec::<String>::new()),
            Err(Error::EmptyAlphabet)
        ));
    }

    #[test]
    fn rejects_duplicates() {
        let err = Alphabet::new(["a", "b", "a"]).unwrap_err();
        assert!(matches!(err, Error::DuplicateSymbol(l) if l == "a"));
    }

    #[test]
    fn lookup_by_label() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.index_of("b"), Some(1));
        assert_eq!(a.index_of("c"), None);
        assert_eq!(a.label(0), "a");
    }

    #[test]
    fn numbered_labels() {
        let a = Alphabet::numbered("x", 3).unwrap();
        assert_eq!(a.labels(), &["x1", "x2", "x3"]);
    }
}
