//! Dense univariate polynomials over the rationals, just enough for exact
//! root-multiplicity bookkeeping: derivative, Euclidean gcd, and the
//! repeated-gcd squarefree chain.
//!
//! Squarefree decomposition over Q stays squarefree over the algebraic
//! closure (characteristic zero), so multiplicities computed here are the
//! true multiplicities over C.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients by ascending power; canonical form trims trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub(crate) fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn monic(mut self) -> Self {
        if self.is_zero() || self.lead().is_one() {
            return self;
        }
        let lead = self.lead().clone();
        for c in &mut self.coeffs {
            *c /= &lead;
        }
        self
    }

    pub(crate) fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Remainder of Euclidean division by a nonzero divisor.
    fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dn = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > dn {
            let top = rem.last().expect("nonempty").clone();
            if top.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - dn;
            let factor = top / divisor.lead();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            rem.pop();
        }
        Self::from_coeffs(rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone().monic();
        let mut b = other.clone().monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Largest root multiplicity over the algebraic closure: the length of
    /// the chain `p, gcd(p, p'), gcd(gcd(p,p'), ...)` down to a constant.
    pub(crate) fn max_multiplicity(&self) -> u32 {
        assert!(!self.is_zero(), "zero polynomial has no multiplicities");
        let mut p = self.clone();
        let mut mult = 0u32;
        while p.degree().unwrap_or(0) >= 1 {
            p = p.gcd(&p.derivative());
            mult += 1;
        }
        mult
    }
}
