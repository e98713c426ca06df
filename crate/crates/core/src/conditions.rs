//! Divisibility constraints on hsop degree sequences: the lacunary-form
//! congruence, its counting consequence, and the resulting executable
//! checker for candidate degree sequences.

use thiserror::Error;

use num_integer::Integer;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConditionsError {
    #[error("modulus parameter t must be greater than {min}, got {t}")]
    InvalidModulus { t: u64, min: u64 },
    #[error("form degree must be at least 3, got {0}")]
    UnsupportedDegree(u32),
}

/// "At least `min_count` of the degrees are divisible by `modulus`."
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisibilityRequirement {
    pub modulus: u64,
    pub min_count: usize,
}

/// One requirement evaluated against a concrete degree sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RequirementStatus {
    pub requirement: DivisibilityRequirement,
    pub have: usize,
    pub ok: bool,
}

/// Full outcome of the divisibility check: one status per requirement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub n: u32,
    pub statuses: Vec<RequirementStatus>,
}

impl Theorem1Report {
    pub fn passes(&self) -> bool {
        self.statuses.iter().all(|s| s.ok)
    }

    pub fn violations(&self) -> impl Iterator<Item = &RequirementStatus> {
        self.statuses.iter().filter(|s| !s.ok)
    }

    /// One line per requirement: `mod <q>: need <c>, have <k>, OK|FAIL`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.statuses {
            out.push_str(&format!(
                "mod {}: need {}, have {}, {}\n",
                s.requirement.modulus,
                s.requirement.min_count,
                s.have,
                if s.ok { "OK" } else { "FAIL" }
            ));
        }
        out
    }
}

/// Whether a degree-`d` invariant may be nonzero on a form supported on
/// coefficient indices `i ≡ j (mod t)`: the integer-safe restatement
/// `d(n-2j) ≡ 0 (mod 2t)` of `d(n-2j)/2 ≡ 0 (mod t)`.
pub fn lemma1_congruence(n: u32, j: u32, t: u64, d: u64) -> Result<bool, ConditionsError> {
    if t == 0 {
        return Err(ConditionsError::InvalidModulus { t, min: 0 });
    }
    let weight = i128::from(d) * (i128::from(n) - 2 * i128::from(j));
    Ok(weight.rem_euclid(2 * i128::from(t)) == 0)
}

/// The sharpest single-`t` counting consequence: the minimal admissible `j`
/// and the count of degrees forced divisible by `2t` (odd `n`) or `t`
/// (even `n`).
pub fn lemma3_requirement(n: u32, t: u64) -> Result<DivisibilityRequirement, ConditionsError> {
    if t <= 1 {
        return Err(ConditionsError::InvalidModulus { t, min: 1 });
    }
    if n < 3 {
        return Err(ConditionsError::UnsupportedDegree(n));
    }
    if n % 2 == 1 {
        let j = (0..=n)
            .find(|&j| {
                let v = (i64::from(n) - 2 * i64::from(j)).unsigned_abs();
                v.gcd(&t) == 1
            })
            .expect("n odd: j = (n-1)/2 gives n-2j = 1");
        Ok(DivisibilityRequirement {
            modulus: 2 * t,
            min_count: ((u64::from(n) - u64::from(j)) / t) as usize,
        })
    } else {
        let j = (0..=n / 2)
            .find(|&j| u64::from(n / 2 - j).gcd(&t) == 1)
            .expect("n even: j = n/2 - 1 gives n/2 - j = 1");
        Ok(DivisibilityRequirement {
            modulus: t,
            min_count: ((u64::from(n) - u64::from(j)) / t) as usize,
        })
    }
}

/// The full requirement list for degree-`n` forms: one requirement per
/// `t = 2..=n-1` with count `⌊(n-1)/t⌋`, the extra `n/2`-evens requirement
/// for `n ≡ 2 (mod 4)`, and all-degrees-even (count `n-2`) for odd `n`.
/// Requirements with count 0 are omitted; no pruning of redundant entries.
pub fn theorem1_requirements(n: u32) -> Result<Vec<DivisibilityRequirement>, ConditionsError> {
    if n < 3 {
        return Err(ConditionsError::UnsupportedDegree(n));
    }
    let mut reqs = Vec::new();
    if n % 2 == 1 {
        // all degrees of an odd-degree form's invariants are even
        reqs.push(DivisibilityRequirement {
            modulus: 2,
            min_count: (n - 2) as usize,
        });
    } else if n % 4 == 2 {
        reqs.push(DivisibilityRequirement {
            modulus: 2,
            min_count: (n / 2) as usize,
        });
    }
    for t in 2..u64::from(n) {
        let min_count = ((u64::from(n) - 1) / t) as usize;
        if min_count == 0 {
            continue;
        }
        let modulus = if n % 2 == 1 { 2 * t } else { t };
        reqs.push(DivisibilityRequirement { modulus, min_count });
    }
    reqs.sort();
    reqs.dedup();
    Ok(reqs)
}

/// Evaluates every requirement of [`theorem1_requirements`] against a degree
/// multiset. Each requirement is counted independently over the whole
/// multiset: one entry may serve several moduli at once.
pub fn theorem1_check(n: u32, degrees: &[u64]) -> Result<Theorem1Report, ConditionsError> {
    let statuses = theorem1_requirements(n)?
        .into_iter()
        .map(|requirement| {
            let have = degrees
                .iter()
                .filter(|&&d| d % requirement.modulus == 0)
                .count();
            RequirementStatus {
                requirement,
                have,
                ok: have >= requirement.min_count,
            }
        })
        .collect();
    Ok(Theorem1Report { n, statuses })
}

/// The degree sequences listed in the literature as known hsops, keyed by
/// form degree. Used as cross-checks: every one of them must pass
/// [`theorem1_check`].
pub fn known_hsop_sequences() -> Vec<(u32, Vec<u64>)> {
    vec![
        (3, vec![4]),
        (4, vec![2, 3]),
        (5, vec![4, 8, 12]),
        (6, vec![2, 4, 6, 10]),
        (7, vec![4, 8, 12, 12, 20]),
        (7, vec![4, 8, 8, 12, 30]),
        (8, vec![2, 3, 4, 5, 6, 7]),
        (9, vec![4, 8, 10, 12, 12, 14, 16]),
        (9, vec![4, 4, 10, 12, 14, 16, 24]),
        (9, vec![4, 4, 8, 12, 14, 16, 30]),
        (9, vec![4, 4, 8, 10, 12, 16, 42]),
        (9, vec![4, 4, 8, 10, 12, 14, 48]),
        (10, vec![2, 4, 6, 6, 8, 9, 10, 14]),
    ]
}
