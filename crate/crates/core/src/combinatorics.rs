//! Exact dimension counts for spaces of invariants and covariants of binary
//! forms via the Cayley–Sylvester formula.
//!
//! - [`ferrers_count`]: partitions of `t` into at most `m` parts each at most
//!   `n` (coefficients of the Gaussian binomial `[n+m, m]_q`)
//! - [`covariant_dim`]: `N(n,m,t) - N(n,m,t-1)` with `t = (nm-a)/2`
//! - [`invariant_dim`]: the order-0 case `h^n_m`, with Hermite reciprocity
//!   `h^n_m = h^m_n`
//! - [`vanishing_classified`]: the complete list of `(n,m)` with `h^n_m = 0`
//!
//! All counts are arbitrary-precision: boxes larger than the tables printed
//! by the CLI overflow 64-bit integers quickly.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

/// Row cache: `(min(n,m), max(n,m))` -> all box partition counts for that
/// box, indexed by `t`. Both symmetries `N(n,m,t) = N(m,n,t)` and
/// `N(n,m,t) = N(n,m,nm-t)` are served by the full row. Safe for concurrent
/// readers and writers; a double insert computes the same value twice and is
/// harmless.
type RowCache = RwLock<HashMap<(u32, u32), Arc<Vec<BigUint>>>>;

static ROW_CACHE: Lazy<RowCache> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Computes the coefficient list of the Gaussian binomial `[n+m, m]_q`,
/// i.e. `N(n,m,t)` for `t = 0..=n*m`, by iterated exact multiplication by
/// `(1-q^{n+j})` and division by `(1-q^j)`. Intermediate values are signed.
pub(crate) fn box_counts_uncached(n: u32, m: u32) -> Vec<BigUint> {
    let n = n as usize;
    let m = m as usize;
    // room for the intermediate degree n*j + j at each step
    let mut c = vec![BigInt::zero(); n * m + m + 1];
    c[0] = BigInt::one();
    let mut deg = 0usize;
    for j in 1..=m {
        // multiply by (1 - q^{n+j})
        let shift = n + j;
        deg += shift;
        for t in (shift..=deg).rev() {
            let prev = c[t - shift].clone();
            c[t] -= prev;
        }
        // divide by (1 - q^j): running sums, exact by construction
        for t in j..=deg {
            let prev = c[t - j].clone();
            c[t] += prev;
        }
        deg -= j;
    }
    c.truncate(n * m + 1);
    c.into_iter()
        .map(|v| {
            debug_assert!(!v.is_negative(), "box counts must be nonnegative");
            v.to_biguint().expect("nonnegative count")
        })
        .collect()
}

fn box_counts(n: u32, m: u32) -> Arc<Vec<BigUint>> {
    let key = (n.min(m), n.max(m));
    if let Some(row) = ROW_CACHE.read().expect("row cache poisoned").get(&key) {
        return Arc::clone(row);
    }
    let row = Arc::new(box_counts_uncached(key.0, key.1));
    let mut cache = ROW_CACHE.write().expect("row cache poisoned");
    Arc::clone(cache.entry(key).or_insert(row))
}

/// `N(n,m,t)`: the number of Ferrers diagrams of size `t` inside an
/// `m x n` rectangle. Total: `t < 0` and `t > nm` give 0.
pub fn ferrers_count(n: u32, m: u32, t: i64) -> BigUint {
    if t < 0 || t > i64::from(n) * i64::from(m) {
        return BigUint::zero();
    }
    box_counts(n, m)[t as usize].clone()
}

/// Dimension of the space of covariants of degree `m` and order `a` for the
/// binary form of degree `n`: zero when `nm - a` is odd or negative, else
/// `N(n,m,t) - N(n,m,t-1)` with `nm - a = 2t`.
pub fn covariant_dim(n: u32, m: u32, a: u64) -> BigUint {
    let prod = u64::from(n) * u64::from(m);
    if prod < a || !(prod - a).is_multiple_of(2) {
        return BigUint::zero();
    }
    let t = ((prod - a) / 2) as i64;
    let row = box_counts(n, m);
    let at = |t: i64| -> &BigUint { &row[t as usize] };
    if t == 0 {
        return at(0).clone();
    }
    let hi = at(t);
    let lo = at(t - 1);
    debug_assert!(hi >= lo, "Cayley-Sylvester difference went negative");
    hi - lo
}

/// `h^n_m`, the dimension of the degree-`m` graded piece of the invariant
/// ring of the binary form of degree `n`.
pub fn invariant_dim(n: u32, m: u32) -> BigUint {
    covariant_dim(n, m, 0)
}

/// All `h^n_m` for `m = 0..=max_m` in one incremental sweep.
///
/// This is the bulk entry point behind Poincaré series: it extends the
/// Gaussian-binomial row in place instead of recomputing (or caching) one
/// box per degree.
pub fn invariant_dims_through(n: u32, max_m: u32) -> Vec<BigUint> {
    let n = n as usize;
    let max_m = max_m as usize;
    let mut out = Vec::with_capacity(max_m + 1);
    out.push(BigUint::one());
    let mut c = vec![BigInt::zero(); n * max_m + max_m + 1];
    c[0] = BigInt::one();
    let mut deg = 0usize;
    for j in 1..=max_m {
        let shift = n + j;
        deg += shift;
        for t in (shift..=deg).rev() {
            let prev = c[t - shift].clone();
            c[t] -= prev;
        }
        for t in j..=deg {
            let prev = c[t - j].clone();
            c[t] += prev;
        }
        deg -= j;
        let prod = n * j;
        if !prod.is_multiple_of(2) {
            out.push(BigUint::zero());
        } else {
            let t = prod / 2;
            let diff = if t == 0 {
                c[0].clone()
            } else {
                &c[t] - &c[t - 1]
            };
            debug_assert!(!diff.is_negative());
            out.push(diff.to_biguint().expect("nonnegative dimension"));
        }
    }
    out
}

/// Dixmier's complete classification of the pairs `(n,m)` with `h^n_m = 0`,
/// for `n, m >= 1`.
pub fn vanishing_classified(n: u32, m: u32) -> bool {
    let symmetric = |f: &dyn Fn(u32, u32) -> bool| f(n, m) || f(m, n);
    if n * m % 2 == 1 {
        return true; // (i)
    }
    if symmetric(&|a, _| a == 1) {
        return true; // (ii)
    }
    if symmetric(&|a, b| a == 2 && b % 2 == 1) {
        return true; // (iii)
    }
    if symmetric(&|a, b| a == 3 && b % 4 == 2) {
        return true; // (iv)
    }
    if symmetric(&|a, b| a == 5 && matches!(b, 6 | 10 | 14)) {
        return true; // (v)
    }
    if symmetric(&|a, b| a == 6 && matches!(b, 7 | 9 | 11 | 13)) {
        return true; // (vi)
    }
    if symmetric(&|a, b| a == 7 && b == 10) {
        return true; // (vii)
    }
    false
}

/// The `h^n_m` grid as rows `m = 1..=m_max`, columns `n = 1..=n_max`.
pub fn dimension_table(n_max: u32, m_max: u32) -> Vec<Vec<BigUint>> {
    (1..=m_max)
        .map(|m| (1..=n_max).map(|n| invariant_dim(n, m)).collect())
        .collect()
}

/// Renders the dimension grid as TSV with zeros printed as `.`.
pub fn dimension_table_tsv(n_max: u32, m_max: u32) -> String {
    let mut out = String::new();
    for row in dimension_table(n_max, m_max) {
        let line: Vec<String> = row
            .iter()
            .map(|v| {
                if v.is_zero() {
                    ".".to_string()
                } else {
                    v.to_string()
                }
            })
            .collect();
        out.push_str(&line.join("\t"));
        out.push('\n');
    }
    out
}

/// Snapshot of the row cache, for optional persistence.
pub(crate) fn export_rows() -> Vec<((u32, u32), Vec<BigUint>)> {
    let cache = ROW_CACHE.read().expect("row cache poisoned");
    let mut rows: Vec<_> = cache
        .iter()
        .map(|(k, v)| (*k, v.as_ref().clone()))
        .collect();
    rows.sort_by_key(|(k, _)| *k);
    rows
}

/// Seeds the row cache from persisted rows. Malformed entries (wrong length)
/// are dropped: the cache may only ever hold values the computation would
/// produce.
pub(crate) fn import_rows(rows: Vec<((u32, u32), Vec<BigUint>)>) {
    let mut cache = ROW_CACHE.write().expect("row cache poisoned");
    for ((n, m), row) in rows {
        if n <= m && row.len() == (n as usize) * (m as usize) + 1 {
            cache.entry((n, m)).or_insert_with(|| Arc::new(row));
        }
    }
}
