//! Canonical degree sequences: sorted multisets of positive integers
//! attached to a form degree.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("degree sequences must be nonempty")]
    Empty,
    #[error("degree entries must be positive")]
    NonPositiveEntry,
    #[error("cannot parse degree entry {0:?}")]
    Parse(String),
}

/// A multiset of positive integer degrees, stored sorted non-decreasing,
/// together with the form degree `n` it belongs to. A full hsop candidate
/// has exactly `n - 2` entries; prefix and subsequence uses may be shorter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence {
    n: u32,
    degrees: Vec<u64>,
}

impl DegreeSequence {
    pub fn new(n: u32, mut degrees: Vec<u64>) -> Result<Self, SequenceError> {
        if degrees.is_empty() {
            return Err(SequenceError::Empty);
        }
        if degrees.contains(&0) {
            return Err(SequenceError::NonPositiveEntry);
        }
        degrees.sort_unstable();
        Ok(DegreeSequence { n, degrees })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Whether the length matches the Krull dimension `n - 2`.
    pub fn is_full_length(&self) -> bool {
        self.n >= 2 && self.degrees.len() == (self.n - 2) as usize
    }

    pub fn into_degrees(self) -> Vec<u64> {
        self.degrees
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses the CLI text form: comma-separated positive integers. The form
/// degree is not part of the text and is filled in by the caller.
pub fn parse_degree_list(text: &str) -> Result<Vec<u64>, SequenceError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(SequenceError::Empty);
    }
    trimmed
        .split(',')
        .map(|part| {
            let part = part.trim();
            match u64::from_str(part) {
                Ok(0) => Err(SequenceError::NonPositiveEntry),
                Ok(d) => Ok(d),
                Err(_) => Err(SequenceError::Parse(part.to_string())),
            }
        })
        .collect()
}
