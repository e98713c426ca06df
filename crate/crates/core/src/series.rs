//! Poincaré series of invariant rings, Dixmier's auxiliary polynomial
//! `B(t)`, and hsop numerators.
//!
//! The numerator attached to a degree sequence `d_1..d_{n-2}` is
//! `P(t) * prod_i (1 - t^{d_i})`, normalized so the constant term is +1
//! (the variant with `t^{d_i} - 1` differs by the sign `(-1)^{n-2}`).
//! It is computed by exact polynomial division through `P(t)·B(t)`, never
//! by eyeballing a truncated series.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::combinatorics::invariant_dims_through;
use crate::conditions::{self, ConditionsError, Theorem1Report};
use crate::poly::{IntPolynomial, TruncatedSeries};

/// Extra coefficients checked past `deg B` when extracting the polynomial
/// part of `P(t)·B(t)` from a truncated convolution.
pub const VERIFICATION_MARGIN: usize = 16;

#[derive(Debug, Error)]
pub enum SeriesError {
    #[error("form degree must be at least 3, got {0}")]
    UnsupportedDegree(u32),
    #[error("degree sequence {degrees:?} fails the divisibility conditions:\n{report}")]
    PreconditionFailed { degrees: Vec<u64>, report: String },
    #[error("P(t)·prod(1-t^d) is not a polynomial: remainder at degree {0}")]
    NotPolynomial(usize),
    #[error("P(t)·B(t) convolution has a nonzero coefficient {coefficient} at t^{exponent}")]
    WindowViolation {
        exponent: usize,
        coefficient: BigInt,
    },
    #[error(transparent)]
    Conditions(#[from] ConditionsError),
}

static PB_CACHE: Lazy<RwLock<HashMap<u32, Arc<IntPolynomial>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `P(t) = sum_m h^n_m t^m` truncated at order `max_order` (inclusive).
pub fn poincare_series(n: u32, max_order: u32) -> TruncatedSeries {
    let coeffs = invariant_dims_through(n, max_order)
        .into_iter()
        .map(BigInt::from)
        .collect();
    TruncatedSeries::from_coeffs(coeffs)
}

/// Dixmier's `B(t)`, expanded to coefficient form. Defined for `n >= 3`
/// by three cases on `n mod 4`.
pub fn dixmier_b(n: u32) -> Result<IntPolynomial, SeriesError> {
    if n < 3 {
        return Err(SeriesError::UnsupportedDegree(n));
    }
    let n = n as usize;
    let mut b = IntPolynomial::one();
    if n % 2 == 1 {
        for i in 2..=(n - 1) {
            b = b.mul(&IntPolynomial::one_minus_tpow(2 * i));
        }
    } else if n % 4 == 2 {
        for i in 2..=(n - 1) {
            b = b.mul(&IntPolynomial::one_minus_tpow(i));
        }
        b = b.mul(&IntPolynomial::one_plus_tpow(1));
    } else {
        for i in 2..=(n - 3) {
            b = b.mul(&IntPolynomial::one_minus_tpow(i));
        }
        b = b.mul(&IntPolynomial::one_plus_tpow(1));
        b = b.mul(&IntPolynomial::one_minus_tpow((n - 2) / 2));
        b = b.mul(&IntPolynomial::one_minus_tpow(n - 1));
    }
    Ok(b)
}

fn pb_compute(n: u32) -> Result<IntPolynomial, SeriesError> {
    let b = dixmier_b(n)?;
    let deg_b = b.degree().expect("B(t) is nonzero");
    let window = deg_b + VERIFICATION_MARGIN;
    let conv_order = deg_b + window;
    let p = poincare_series(n, conv_order as u32);
    let conv = p.mul_poly(&b);
    // Everything past deg B must vanish: B(t) kills the denominator of P(t),
    // so the convolution is the polynomial P·B plus exact zeros.
    for e in (deg_b + 1)..=conv_order {
        let c = conv.coeff(e);
        if !c.is_zero() {
            return Err(SeriesError::WindowViolation {
                exponent: e,
                coefficient: c.clone(),
            });
        }
    }
    Ok(IntPolynomial::from_coeffs(conv.coeffs()[..=deg_b].to_vec()))
}

/// The exact polynomial `P(t)·B(t)`, cached per `n`.
pub fn pb_polynomial(n: u32) -> Result<Arc<IntPolynomial>, SeriesError> {
    if let Some(pb) = PB_CACHE.read().expect("pb cache poisoned").get(&n) {
        return Ok(Arc::clone(pb));
    }
    let pb = Arc::new(pb_compute(n)?);
    let mut cache = PB_CACHE.write().expect("pb cache poisoned");
    Ok(Arc::clone(cache.entry(n).or_insert(pb)))
}

/// `prod_i (1 - t^{d_i})` as an exact polynomial.
pub fn product_one_minus(degrees: &[u64]) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for &d in degrees {
        p = p.mul(&IntPolynomial::one_minus_tpow(d as usize));
    }
    p
}

/// The hsop numerator `P(t)·prod_i (1 - t^{d_i})` for a full candidate
/// degree sequence, computed as `pb_polynomial(n)·prod(1-t^{d_i}) / B(t)`
/// with exact division.
///
/// The sequence must pass the divisibility conditions first; those are
/// exactly what guarantees the division is exact, and the operation refuses
/// rather than approximating.
pub fn hsop_numerator(n: u32, degrees: &[u64]) -> Result<IntPolynomial, SeriesError> {
    if n < 3 {
        return Err(SeriesError::UnsupportedDegree(n));
    }
    let report = conditions::theorem1_check(n, degrees)?;
    if !report.passes() {
        return Err(SeriesError::PreconditionFailed {
            degrees: degrees.to_vec(),
            report: report.render(),
        });
    }
    numerator_unchecked(n, degrees)
}

fn numerator_unchecked(n: u32, degrees: &[u64]) -> Result<IntPolynomial, SeriesError> {
    let pb = pb_polynomial(n)?;
    let b = dixmier_b(n)?;
    let product = pb.mul(&product_one_minus(degrees));
    product.div_exact(&b).map_err(|e| match e {
        crate::poly::PolyError::NotDivisible { remainder_degree } => {
            SeriesError::NotPolynomial(remainder_degree)
        }
        crate::poly::PolyError::DivisionByZero => {
            unreachable!("B(t) has constant term 1")
        }
    })
}

/// The truncated series `P(t)·prod_i (1 - t^{d_i})` for an arbitrary list of
/// degrees (any length, no divisibility gate). For subsequences of candidate
/// hsops this need not be a polynomial; a negative coefficient anywhere
/// already rules the subsequence out.
pub fn numerator_series(n: u32, degrees: &[u64], max_order: u32) -> TruncatedSeries {
    poincare_series(n, max_order).mul_poly(&product_one_minus(degrees))
}

/// Smallest exponent with a negative coefficient, if any.
pub fn first_negative(p: &IntPolynomial) -> Option<usize> {
    p.first_negative()
}

/// Theorem-1 gate used by [`hsop_numerator`], re-exported so callers can
/// distinguish "refused" from "failed".
pub fn divisibility_report(n: u32, degrees: &[u64]) -> Result<Theorem1Report, SeriesError> {
    Ok(conditions::theorem1_check(n, degrees)?)
}

/// Snapshot of the pb cache, for optional persistence.
pub(crate) fn export_pb() -> Vec<(u32, IntPolynomial)> {
    let cache = PB_CACHE.read().expect("pb cache poisoned");
    let mut entries: Vec<_> = cache
        .iter()
        .map(|(n, p)| (*n, p.as_ref().clone()))
        .collect();
    entries.sort_by_key(|(n, _)| *n);
    entries
}

pub(crate) fn import_pb(entries: Vec<(u32, IntPolynomial)>) {
    let mut cache = PB_CACHE.write().expect("pb cache poisoned");
    for (n, p) in entries {
        if n >= 3 {
            cache.entry(n).or_insert_with(|| Arc::new(p));
        }
    }
}
