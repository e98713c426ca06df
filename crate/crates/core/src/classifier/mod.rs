//! Complete classification of hsop degree sequences for binary forms of
//! degree 3 through 8: admissibility, the additive reduction of admissible
//! sequences, minimality, bounded exhaustive enumeration, and an empirical
//! scanner for numerator obstructions.

mod enumerate;
mod predicates;

pub use enumerate::{
    enumerate_minimal, enumerate_minimal_parallel, merge_shards, run_shard, shard_plan, ShardSpec,
};
pub use predicates::{AdmissibilityReport, Violation, N8_FORBIDDEN_SUBMULTISETS, SUPPORTED_RANGE};

use thiserror::Error;

use crate::conditions::{self, ConditionsError};
use crate::sequence::DegreeSequence;
use crate::series::{self, SeriesError};

#[derive(Debug, Error)]
pub enum ClassifierError {
    #[error("classification covers form degrees 3..=8, got {0}")]
    UnsupportedDegree(u32),
    #[error("degree sequence for n={n} must have {expected} entries, got {got}")]
    LengthMismatch { n: u32, expected: usize, got: usize },
    #[error("sequence {degrees:?} is not admissible; reduction search requires admissibility")]
    NotAdmissible { degrees: Vec<u64> },
    #[error("invalid degree range [{lower}, {upper}]")]
    InvalidRange { lower: u64, upper: u64 },
    #[error(transparent)]
    Conditions(#[from] ConditionsError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// An admissible sequence with one entry written as `d' + d''` such that
/// both replacement sequences are admissible again. Its existence is exactly
/// non-minimality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionWitness {
    /// The entry that splits.
    pub entry: u64,
    /// The split `(d', d'')` with `d' <= d''` and `d' + d'' = entry`.
    pub split: (u64, u64),
    /// The sequence with `entry` replaced by `d'`, sorted.
    pub left: Vec<u64>,
    /// The sequence with `entry` replaced by `d''`, sorted.
    pub right: Vec<u64>,
}

fn sorted_copy(degrees: &[u64]) -> Vec<u64> {
    let mut v = degrees.to_vec();
    v.sort_unstable();
    v
}

/// Evaluates the full classification predicate for `3 <= n <= 8`. The input
/// is treated as a multiset; order does not matter.
pub fn admissible(n: u32, degrees: &[u64]) -> Result<AdmissibilityReport, ClassifierError> {
    predicates::validate_input(n, degrees)?;
    Ok(predicates::admissible_report(n, &sorted_copy(degrees)))
}

/// Verdict-only admissibility, used in hot loops.
pub fn is_admissible(n: u32, degrees: &[u64]) -> Result<bool, ClassifierError> {
    predicates::validate_input(n, degrees)?;
    Ok(predicates::admissible_fast(n, &sorted_copy(degrees)))
}

/// Searches for a reduction of an admissible sequence: distinct entries in
/// increasing order, splits `d' <= d''` in increasing `d'`, first hit wins.
/// `None` means the sequence is minimal.
pub fn find_reduction(
    n: u32,
    degrees: &[u64],
) -> Result<Option<ReductionWitness>, ClassifierError> {
    predicates::validate_input(n, degrees)?;
    let sorted = sorted_copy(degrees);
    if !predicates::admissible_fast(n, &sorted) {
        return Err(ClassifierError::NotAdmissible { degrees: sorted });
    }
    Ok(find_reduction_sorted(n, &sorted))
}

/// Reduction search over a sorted, already-admissible sequence.
pub(crate) fn find_reduction_sorted(n: u32, sorted: &[u64]) -> Option<ReductionWitness> {
    let mut previous = None;
    for (idx, &d) in sorted.iter().enumerate() {
        if previous == Some(d) {
            continue;
        }
        previous = Some(d);
        let mut rest: Vec<u64> = Vec::with_capacity(sorted.len() - 1);
        rest.extend_from_slice(&sorted[..idx]);
        rest.extend_from_slice(&sorted[idx + 1..]);
        let mut left = vec![0u64; sorted.len()];
        let mut right = vec![0u64; sorted.len()];
        for dp in 1..=d / 2 {
            let dq = d - dp;
            insert_sorted(&rest, dp, &mut left);
            if !predicates::admissible_fast(n, &left) {
                continue;
            }
            insert_sorted(&rest, dq, &mut right);
            if predicates::admissible_fast(n, &right) {
                return Some(ReductionWitness {
                    entry: d,
                    split: (dp, dq),
                    left,
                    right,
                });
            }
        }
    }
    None
}

fn insert_sorted(rest: &[u64], value: u64, out: &mut Vec<u64>) {
    out.clear();
    let pos = rest.partition_point(|&x| x <= value);
    out.extend_from_slice(&rest[..pos]);
    out.push(value);
    out.extend_from_slice(&rest[pos..]);
}

/// A sequence is minimal when it is admissible and has no reduction.
/// Taking multiples needs no separate rule: a multiple is a repeated
/// application of the additive reduction with equal parts.
pub fn is_minimal(n: u32, degrees: &[u64]) -> Result<bool, ClassifierError> {
    predicates::validate_input(n, degrees)?;
    let sorted = sorted_copy(degrees);
    if !predicates::admissible_fast(n, &sorted) {
        return Ok(false);
    }
    Ok(find_reduction_sorted(n, &sorted).is_none())
}

/// A sequence whose numerator has a negative coefficient: an obstruction to
/// the "divisibility suffices for large degrees" conjecture at that size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub degrees: Vec<u64>,
    pub first_negative: usize,
}

/// Outcome of an empirical scan over all sorted `(n-2)`-tuples with entries
/// in `[lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub n: u32,
    pub lower: u64,
    pub upper: u64,
    /// Number of tuples passing the divisibility conditions (and hence
    /// having a polynomial numerator).
    pub passing: u64,
    pub obstructions: Vec<Obstruction>,
}

/// Enumerates every sorted `(n-2)`-tuple over `[lower, upper]` that passes
/// the divisibility conditions, computes its numerator, and reports the
/// tuples whose numerator has a negative coefficient. Purely empirical:
/// works for any `n >= 3`, not just the classified range.
pub fn conjecture_scan(n: u32, lower: u64, upper: u64) -> Result<ScanReport, ClassifierError> {
    if lower == 0 || lower > upper {
        return Err(ClassifierError::InvalidRange { lower, upper });
    }
    let requirements = conditions::theorem1_requirements(n)?;
    let len = (n - 2) as usize;
    let mut passing = 0u64;
    let mut obstructions = Vec::new();
    let mut result: Result<(), ClassifierError> = Ok(());
    enumerate::scan_tuples(len, lower, upper, &requirements, &mut |tuple| {
        if !conditions::theorem1_check(n, tuple)
            .expect("n validated above")
            .passes()
        {
            return true;
        }
        passing += 1;
        match series::hsop_numerator(n, tuple) {
            Ok(numerator) => {
                if let Some(first_negative) = numerator.first_negative() {
                    obstructions.push(Obstruction {
                        degrees: tuple.to_vec(),
                        first_negative,
                    });
                }
                true
            }
            Err(e) => {
                result = Err(e.into());
                false
            }
        }
    });
    result?;
    Ok(ScanReport {
        n,
        lower,
        upper,
        passing,
        obstructions,
    })
}

/// Sorted output list shared by enumeration entry points.
pub(crate) fn collect_sequences(n: u32, mut found: Vec<Vec<u64>>) -> Vec<DegreeSequence> {
    found.sort_unstable();
    found.dedup();
    found
        .into_iter()
        .map(|degrees| {
            DegreeSequence::new(n, degrees).expect("enumeration yields positive entries")
        })
        .collect()
}
