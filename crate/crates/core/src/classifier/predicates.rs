//! The admissibility predicates for hsop degree sequences of binary forms
//! of degree 3 through 8.
//!
//! Each predicate is the exact if-and-only-if condition for a multiset of
//! `n - 2` positive integers to occur as the degree sequence of some hsop.
//! Rules carry stable machine-readable identifiers (`n6.no_three_in_2_6_17_21`
//! and friends) so reports can be asserted on.

use std::fmt;

use crate::classifier::ClassifierError;

/// One violated clause of a classification predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Stable rule identifier, e.g. `n6.no_three_in_2_6_17_21`.
    pub rule: &'static str,
    /// Human-readable statement of the clause.
    pub description: String,
    /// The entries that witness the violation (or the whole sequence for
    /// count-style shortfalls).
    pub witnesses: Vec<u64>,
}

/// Structured pass/fail verdict: the verdict is true exactly when the
/// violation list is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub n: u32,
    pub degrees: Vec<u64>,
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    pub fn verdict(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.verdict() {
            write!(f, "admissible")
        } else {
            writeln!(f, "not admissible:")?;
            for v in &self.violations {
                writeln!(
                    f,
                    "  {}: {} (witnesses {:?})",
                    v.rule, v.description, v.witnesses
                )?;
            }
            Ok(())
        }
    }
}

pub const SUPPORTED_RANGE: std::ops::RangeInclusive<u32> = 3..=8;

fn expected_len(n: u32) -> usize {
    (n - 2) as usize
}

/// Checks argument shape shared by all classifier entry points.
pub(crate) fn validate_input(n: u32, degrees: &[u64]) -> Result<(), ClassifierError> {
    if !SUPPORTED_RANGE.contains(&n) {
        return Err(ClassifierError::UnsupportedDegree(n));
    }
    if degrees.len() != expected_len(n) {
        return Err(ClassifierError::LengthMismatch {
            n,
            expected: expected_len(n),
            got: degrees.len(),
        });
    }
    Ok(())
}

// ---- rule tables ----

pub(crate) const N5_FORBIDDEN: [u64; 4] = [2, 6, 10, 14];
pub(crate) const N6_FORBIDDEN: [u64; 7] = [1, 3, 5, 7, 9, 11, 13];
pub(crate) const N6_SET_A: [u64; 2] = [2, 17];
pub(crate) const N6_SET_B: [u64; 8] = [2, 4, 8, 14, 17, 19, 23, 29];
pub(crate) const N6_SET_C: [u64; 4] = [2, 6, 17, 21];
pub(crate) const N7_FORBIDDEN: [u64; 3] = [2, 6, 10];
pub(crate) const N7_PSI_SET: [u64; 12] = [4, 8, 14, 16, 18, 22, 26, 28, 34, 38, 46, 58];

/// The octavic sub-multisets whose numerators go negative: no candidate
/// sequence may contain one.
pub const N8_FORBIDDEN_SUBMULTISETS: [&[u64]; 8] = [
    &[2, 2],
    &[3, 3],
    &[2, 4, 4],
    &[2, 5, 5],
    &[3, 5, 5],
    &[4, 4, 4],
    &[5, 5, 5],
    &[2, 3, 7, 7],
];

pub(crate) const N8_AT_MOST_3: [&[u64]; 3] = [&[2, 3, 6], &[2, 4, 5], &[2, 4, 7]];
pub(crate) const N8_AT_MOST_4: [&[u64]; 7] = [
    &[2, 3, 4, 5, 11],
    &[2, 3, 4, 6, 11],
    &[2, 3, 4, 7],
    &[2, 3, 4, 8],
    &[2, 3, 4, 9],
    &[2, 3, 5, 6],
    &[2, 3, 6, 7, 11],
];

// ---- multiset helpers (inputs sorted non-decreasing) ----

pub(crate) fn count_div(degrees: &[u64], q: u64) -> usize {
    degrees.iter().filter(|&&d| d % q == 0).count()
}

pub(crate) fn values_in(degrees: &[u64], set: &[u64]) -> Vec<u64> {
    degrees
        .iter()
        .copied()
        .filter(|d| set.contains(d))
        .collect()
}

/// Sub-multiset containment; both slices sorted.
pub(crate) fn contains_submultiset(degrees: &[u64], pattern: &[u64]) -> bool {
    let mut it = degrees.iter();
    'outer: for &p in pattern {
        for &d in it.by_ref() {
            if d == p {
                continue 'outer;
            }
            if d > p {
                return false;
            }
        }
        return false;
    }
    true
}

// ---- fast verdict-only paths (hot loops: enumeration, reductions) ----

pub(crate) fn admissible_fast(n: u32, sorted: &[u64]) -> bool {
    match n {
        3 => sorted[0].is_multiple_of(4),
        4 => admissible4_fast(sorted),
        5 => admissible5_fast(sorted),
        6 => admissible6_fast(sorted),
        7 => admissible7_fast(sorted),
        8 => admissible8_fast(sorted),
        _ => unreachable!("validated earlier"),
    }
}

fn admissible4_fast(d: &[u64]) -> bool {
    d[0] >= 2
        && (d[0].is_multiple_of(2) || d[1].is_multiple_of(2))
        && (d[0].is_multiple_of(3) || d[1].is_multiple_of(3))
}

fn admissible5_fast(d: &[u64]) -> bool {
    d.iter().all(|&x| x % 2 == 0)
        && d.iter().all(|&x| !N5_FORBIDDEN.contains(&x))
        && !contains_submultiset(d, &[4, 4])
        && !contains_submultiset(d, &[4, 22])
        && count_div(d, 4) >= 2
        && count_div(d, 6) >= 1
        && count_div(d, 8) >= 1
}

fn admissible6_fast(d: &[u64]) -> bool {
    d.iter().all(|&x| !N6_FORBIDDEN.contains(&x))
        && values_in(d, &N6_SET_A).len() <= 1
        && values_in(d, &N6_SET_B).len() <= 2
        && values_in(d, &N6_SET_C).len() <= 2
        && count_div(d, 2) >= 3
        && count_div(d, 3) >= 1
        && count_div(d, 4) >= 1
        && count_div(d, 5) >= 1
}

fn admissible7_fast(d: &[u64]) -> bool {
    d.iter().all(|&x| x % 2 == 0)
        && d.iter().all(|&x| !N7_FORBIDDEN.contains(&x))
        && d.iter().filter(|&&x| x == 4).count() <= 1
        && values_in(d, &N7_PSI_SET).len() <= 3
        && count_div(d, 4) >= 3
        && count_div(d, 6) >= 2
        && count_div(d, 8) >= 1
        && count_div(d, 10) >= 1
        && count_div(d, 12) >= 1
}

fn admissible8_fast(d: &[u64]) -> bool {
    d[0] >= 2
        && count_div(d, 2) >= 3
        && count_div(d, 3) >= 2
        && count_div(d, 4) >= 1
        && count_div(d, 5) >= 1
        && count_div(d, 6) >= 1
        && count_div(d, 7) >= 1
        && N8_FORBIDDEN_SUBMULTISETS
            .iter()
            .all(|p| !contains_submultiset(d, p))
        && N8_AT_MOST_3.iter().all(|s| values_in(d, s).len() <= 3)
        && N8_AT_MOST_4.iter().all(|s| values_in(d, s).len() <= 4)
}

// ---- reporting paths ----

struct Rules<'a> {
    degrees: &'a [u64],
    violations: Vec<Violation>,
}

impl<'a> Rules<'a> {
    fn new(degrees: &'a [u64]) -> Self {
        Rules {
            degrees,
            violations: Vec::new(),
        }
    }

    fn push(&mut self, rule: &'static str, description: String, witnesses: Vec<u64>) {
        self.violations.push(Violation {
            rule,
            description,
            witnesses,
        });
    }

    fn require_min(&mut self, rule: &'static str, min: u64) {
        let bad: Vec<u64> = self.degrees.iter().copied().filter(|&d| d < min).collect();
        if !bad.is_empty() {
            self.push(rule, format!("every entry must be at least {min}"), bad);
        }
    }

    fn require_all_even(&mut self, rule: &'static str) {
        let bad: Vec<u64> = self
            .degrees
            .iter()
            .copied()
            .filter(|d| d % 2 != 0)
            .collect();
        if !bad.is_empty() {
            self.push(rule, "every entry must be even".to_string(), bad);
        }
    }

    fn forbid_values(&mut self, rule: &'static str, set: &[u64]) {
        let bad = values_in(self.degrees, set);
        if !bad.is_empty() {
            self.push(rule, format!("no entry may lie in {set:?}"), bad);
        }
    }

    fn at_most_in(&mut self, rule: &'static str, max: usize, set: &[u64]) {
        let hits = values_in(self.degrees, set);
        if hits.len() > max {
            self.push(
                rule,
                format!("at most {max} entries may lie in {set:?}"),
                hits,
            );
        }
    }

    fn forbid_submultiset(&mut self, rule: &'static str, pattern: &[u64]) {
        if contains_submultiset(self.degrees, pattern) {
            self.push(
                rule,
                format!("the sub-multiset {pattern:?} is forbidden"),
                pattern.to_vec(),
            );
        }
    }

    fn require_div(&mut self, rule: &'static str, q: u64, count: usize) {
        let have = count_div(self.degrees, q);
        if have < count {
            self.push(
                rule,
                format!("at least {count} entries must be divisible by {q} (have {have})"),
                self.degrees.to_vec(),
            );
        }
    }

    fn finish(self, n: u32) -> AdmissibilityReport {
        AdmissibilityReport {
            n,
            degrees: self.degrees.to_vec(),
            violations: self.violations,
        }
    }
}

/// Full admissibility report for a sorted candidate sequence.
pub(crate) fn admissible_report(n: u32, sorted: &[u64]) -> AdmissibilityReport {
    let mut r = Rules::new(sorted);
    match n {
        3 => {
            if !sorted[0].is_multiple_of(4) {
                r.push(
                    "n3.multiple_of_4",
                    "the degree must be divisible by 4".to_string(),
                    sorted.to_vec(),
                );
            }
        }
        4 => {
            r.require_min("n4.min_2", 2);
            r.require_div("n4.div2", 2, 1);
            r.require_div("n4.div3", 3, 1);
        }
        5 => {
            r.require_all_even("n5.all_even");
            r.forbid_values("n5.forbidden_values", &N5_FORBIDDEN);
            r.forbid_submultiset("n5.no_sub_4_4", &[4, 4]);
            r.forbid_submultiset("n5.no_sub_4_22", &[4, 22]);
            r.require_div("n5.count_div4", 4, 2);
            r.require_div("n5.div6", 6, 1);
            r.require_div("n5.div8", 8, 1);
        }
        6 => {
            r.forbid_values("n6.forbidden_values", &N6_FORBIDDEN);
            r.at_most_in("n6.no_two_in_2_17", 1, &N6_SET_A);
            r.at_most_in("n6.no_three_in_2_4_8_14_17_19_23_29", 2, &N6_SET_B);
            r.at_most_in("n6.no_three_in_2_6_17_21", 2, &N6_SET_C);
            r.require_div("n6.count_even", 2, 3);
            r.require_div("n6.div3", 3, 1);
            r.require_div("n6.div4", 4, 1);
            r.require_div("n6.div5", 5, 1);
        }
        7 => {
            r.require_all_even("n7.all_even");
            r.forbid_values("n7.forbidden_values", &N7_FORBIDDEN);
            r.forbid_submultiset("n7.no_two_4", &[4, 4]);
            r.at_most_in("n7.no_four_in_psi_set", 3, &N7_PSI_SET);
            r.require_div("n7.count_div4", 4, 3);
            r.require_div("n7.count_div6", 6, 2);
            r.require_div("n7.div8", 8, 1);
            r.require_div("n7.div10", 10, 1);
            r.require_div("n7.div12", 12, 1);
        }
        8 => {
            r.require_min("n8.min_2", 2);
            r.require_div("n8.count_even", 2, 3);
            r.require_div("n8.count_div3", 3, 2);
            r.require_div("n8.div4", 4, 1);
            r.require_div("n8.div5", 5, 1);
            r.require_div("n8.div6", 6, 1);
            r.require_div("n8.div7", 7, 1);
            for pattern in N8_FORBIDDEN_SUBMULTISETS {
                let rule: &'static str = match pattern {
                    [2, 2] => "n8.no_sub_2_2",
                    [3, 3] => "n8.no_sub_3_3",
                    [2, 4, 4] => "n8.no_sub_2_4_4",
                    [2, 5, 5] => "n8.no_sub_2_5_5",
                    [3, 5, 5] => "n8.no_sub_3_5_5",
                    [4, 4, 4] => "n8.no_sub_4_4_4",
                    [5, 5, 5] => "n8.no_sub_5_5_5",
                    [2, 3, 7, 7] => "n8.no_sub_2_3_7_7",
                    _ => unreachable!(),
                };
                r.forbid_submultiset(rule, pattern);
            }
            let rules3: [&'static str; 3] = [
                "n8.no_four_in_2_3_6",
                "n8.no_four_in_2_4_5",
                "n8.no_four_in_2_4_7",
            ];
            for (set, rule) in N8_AT_MOST_3.iter().zip(rules3) {
                r.at_most_in(rule, 3, set);
            }
            let rules4: [&'static str; 7] = [
                "n8.no_five_in_2_3_4_5_11",
                "n8.no_five_in_2_3_4_6_11",
                "n8.no_five_in_2_3_4_7",
                "n8.no_five_in_2_3_4_8",
                "n8.no_five_in_2_3_4_9",
                "n8.no_five_in_2_3_5_6",
                "n8.no_five_in_2_3_6_7_11",
            ];
            for (set, rule) in N8_AT_MOST_4.iter().zip(rules4) {
                r.at_most_in(rule, 4, set);
            }
        }
        _ => unreachable!("validated earlier"),
    }
    r.finish(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submultiset_containment() {
        assert!(contains_submultiset(&[4, 8, 22], &[4, 22]));
        assert!(!contains_submultiset(&[4, 8, 12], &[4, 22]));
        assert!(contains_submultiset(&[2, 2, 5], &[2, 2]));
        assert!(!contains_submultiset(&[2, 5], &[2, 2]));
        assert!(contains_submultiset(&[1, 2, 3], &[]));
    }

    #[test]
    fn fast_paths_match_reports() {
        // spot-check the two routes agree on a grid of small sequences
        for n in 3..=8u32 {
            let len = (n - 2) as usize;
            let mut seq = vec![1u64; len];
            loop {
                let mut sorted = seq.clone();
                sorted.sort_unstable();
                assert_eq!(
                    admissible_fast(n, &sorted),
                    admissible_report(n, &sorted).verdict(),
                    "n={n} seq={sorted:?}"
                );
                // odometer over entries in 1..=13
                let mut i = 0;
                loop {
                    if i == len {
                        break;
                    }
                    seq[i] += 3; // coarse stride keeps the grid small
                    if seq[i] <= 13 {
                        break;
                    }
                    seq[i] = 1;
                    i += 1;
                }
                if i == len {
                    break;
                }
            }
        }
    }
}
