//! Dense exact-integer polynomials and truncated power series in one
//! variable `t`.
//!
//! These are the carriers for Poincaré series, Dixmier's `B(t)` and hsop
//! numerators. Coefficients are arbitrary-precision integers throughout;
//! there is no floating point anywhere in this crate.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from exact polynomial division.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder (degree {remainder_degree})")]
    NotDivisible { remainder_degree: usize },
}

/// A dense polynomial with `BigInt` coefficients, index = exponent of `t`.
///
/// Canonical form: the highest-index coefficient is nonzero, and the zero
/// polynomial is the empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from a coefficient list, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `c * t^exp`.
    pub fn monomial(exp: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPolynomial { coeffs }
    }

    /// The factor `1 - t^d`.
    pub fn one_minus_tpow(d: usize) -> Self {
        assert!(d > 0, "one_minus_tpow needs a positive exponent");
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] = -BigInt::one();
        IntPolynomial { coeffs }
    }

    /// The factor `1 + t^d`.
    pub fn one_plus_tpow(d: usize) -> Self {
        assert!(d > 0, "one_plus_tpow needs a positive exponent");
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^exp` (zero beyond the degree).
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Schoolbook product; degrees in this crate stay well below 10^3.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dn = divisor.coeffs.len() - 1;
        let lead = &divisor.coeffs[dn];
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Err(PolyError::NotDivisible {
                remainder_degree: rem.len() - 1,
            });
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dn];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dn].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::div_rem(top, lead.clone());
            if !r.is_zero() {
                return Err(PolyError::NotDivisible {
                    remainder_degree: k + dn,
                });
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if let Some(bad) = rem.iter().rposition(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible {
                remainder_degree: bad,
            });
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Smallest exponent carrying a negative coefficient.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_negative())
    }

    /// Whether coefficients read the same from both ends.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Machine-readable rendering: `exp:coeff` pairs, comma-separated,
    /// ascending exponents. The zero polynomial renders as the empty string.
    pub fn machine_line(&self) -> String {
        self.terms()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: &[(usize, BigInt)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (exp, c)) in terms.iter().enumerate() {
        let mag = c.abs();
        if idx == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match (*exp, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "t")?,
            (1, false) => write!(f, "{mag}*t")?,
            (e, true) => write!(f, "t^{e}")?,
            (e, false) => write!(f, "{mag}*t^{e}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        fmt_terms(f, &terms)
    }
}

/// A power series truncated at a stated order `M` (inclusive).
///
/// The truncation order is part of the value; arithmetic never reads beyond
/// it, and accessing a coefficient past `M` is a caller bug (it panics).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Wraps a full coefficient list `c_0..c_M`; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least order 0");
        TruncatedSeries { coeffs }
    }

    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (e, c) in p.terms() {
            if e <= order {
                coeffs[e] = c.clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Truncation order `M` (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^exp`; panics past the truncation order.
    pub fn coeff(&self, exp: usize) -> &BigInt {
        assert!(
            exp < self.coeffs.len(),
            "coefficient {exp} requested beyond truncation order {}",
            self.order()
        );
        &self.coeffs[exp]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms up to the truncation order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Product with a polynomial, truncated at this series' order.
    pub fn mul_poly(&self, p: &IntPolynomial) -> Self {
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for (e, c) in p.terms() {
            if e > order {
                break;
            }
            for i in 0..=(order - e) {
                if !self.coeffs[i].is_zero() {
                    out[i + e] += &self.coeffs[i] * c;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Product with the geometric series `1/(1 - t^d)`, truncated.
    pub fn mul_geometric(&self, d: usize) -> Self {
        assert!(d > 0, "geometric factor needs a positive exponent");
        let mut out = self.coeffs.clone();
        for i in d..out.len() {
            let prev = out[i - d].clone();
            out[i] += prev;
        }
        TruncatedSeries { coeffs: out }
    }

    /// True when the polynomial matches this series coefficient-for-coefficient
    /// through the truncation order.
    pub fn agrees_with(&self, p: &IntPolynomial) -> bool {
        (0..=self.order()).all(|e| self.coeffs[e] == p.coeff(e))
    }

    pub fn machine_line(&self) -> String {
        self.terms()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        fmt_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn canonical_trim() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn mul_and_div_roundtrip() {
        let a = p(&[1, 0, -1, 3]);
        let b = p(&[2, 1]);
        let ab = a.mul(&b);
        assert_eq!(ab.div_exact(&b).unwrap(), a);
        assert_eq!(ab.div_exact(&a).unwrap(), b);
    }

    #[test]
    fn div_rejects_remainder() {
        let a = p(&[1, 1]);
        let b = p(&[0, 0, 1]);
        assert!(matches!(
            b.div_exact(&a),
            Err(PolyError::NotDivisible { .. })
        ));
        assert_eq!(
            p(&[1]).div_exact(&IntPolynomial::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn first_negative_and_palindrome() {
        assert_eq!(p(&[1, 0, 0, -1]).first_negative(), Some(3));
        assert_eq!(p(&[1, 2, 1]).first_negative(), None);
        assert!(p(&[1, 2, 1]).is_palindromic());
        assert!(!p(&[1, 2, 3]).is_palindromic());
        assert!(IntPolynomial::zero().is_palindromic());
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[1, 0, 0, 0, 0, 0, 0, 0, 1]).to_string(), "1 + t^8");
        assert_eq!(p(&[1, -1]).to_string(), "1 - t");
        assert_eq!(p(&[0, 2, 0, -3]).to_string(), "2*t - 3*t^3");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, 1]).machine_line(), "0:1,2:1");
    }

    #[test]
    fn series_truncated_ops() {
        let s = TruncatedSeries::from_polynomial(&p(&[1, 1, 1, 1, 1]), 3);
        assert_eq!(s.order(), 3);
        let t = s.mul_poly(&p(&[1, -1]));
        assert_eq!(t.coeffs(), &[1.into(), 0.into(), 0.into(), 0.into()]);
        // 1/(1-t) over four coefficients
        let ones = TruncatedSeries::from_polynomial(&IntPolynomial::one(), 3).mul_geometric(1);
        assert_eq!(ones.coeffs(), &[1.into(), 1.into(), 1.into(), 1.into()]);
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn series_read_past_order_panics() {
        let s = TruncatedSeries::from_polynomial(&IntPolynomial::one(), 2);
        let _ = s.coeff(3);
    }
}
