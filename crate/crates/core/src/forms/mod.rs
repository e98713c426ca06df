//! Exact symbolic kernel for binary forms: construction in either
//! coefficient convention, transvectants, unimodular substitutions,
//! lacunary forms, and nullform detection through exact root
//! multiplicities.

pub mod catalog;
mod chain;
mod roots;

pub use chain::InvariantChain;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use roots::RatPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormsError {
    #[error("coefficient list for degree {degree} needs {expected} entries, got {got}")]
    LengthMismatch {
        degree: u32,
        expected: usize,
        got: usize,
    },
    #[error("transvectant order {k} exceeds a form degree ({left} and {right})")]
    OrderTooHigh { k: u32, left: u32, right: u32 },
    #[error("substitution matrix must have determinant 1, got {det}")]
    NotUnimodular { det: String },
    #[error("the zero form has no root multiplicities")]
    ZeroForm,
    #[error("lacunary support expects {expected} values, got {got}")]
    IndexMismatch { expected: usize, got: usize },
    #[error("lacunary support parameters out of range: n={n}, j={j}, t={t}")]
    InvalidSupport { n: u32, j: u32, t: u32 },
    #[error("chain evaluates to order {order}, not a scalar")]
    NotScalar { order: u32 },
    #[error("cannot parse form text {0:?}; expected `n: c0,c1,...,cn` with rational entries")]
    Parse(String),
}

/// Input convention for [`BinaryForm::new`]: `Plain` stores coefficients
/// as given; `Binomial` multiplies the `i`-th input by `C(n,i)` so that
/// inputs `a..h` mean `a x^n + C(n,1) b x^{n-1} y + ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Plain,
    Binomial,
}

/// A binary form `sum_i a_i x^{n-i} y^i` of degree `n` with exact rational
/// coefficients. The zero form of each degree is representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<BigRational>,
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn big(i: i64) -> BigRational {
    BigRational::from(BigInt::from(i))
}

impl BinaryForm {
    pub fn new(
        degree: u32,
        coeffs: Vec<BigRational>,
        convention: Convention,
    ) -> Result<Self, FormsError> {
        let expected = degree as usize + 1;
        if coeffs.len() != expected {
            return Err(FormsError::LengthMismatch {
                degree,
                expected,
                got: coeffs.len(),
            });
        }
        let coeffs = match convention {
            Convention::Plain => coeffs,
            Convention::Binomial => coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from(binomial(u64::from(degree), i as u64)))
                .collect(),
        };
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![BigRational::zero(); degree as usize + 1],
        }
    }

    /// The monomial form `x^n`.
    pub fn x_power(degree: u32) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[0] = BigRational::one();
        f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficient of `x^{n-i} y^i`.
    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// For degree-0 forms: the constant value.
    pub fn scalar_value(&self) -> Option<&BigRational> {
        (self.degree == 0).then(|| &self.coeffs[0])
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "cannot add forms of mixed degree"
        );
        BinaryForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Partial derivative in `x`; degree drops by one.
    fn dx(&self) -> Self {
        let n = self.degree as usize;
        assert!(n >= 1, "cannot differentiate a constant form");
        let coeffs = (0..n)
            .map(|i| &self.coeffs[i] * big((n - i) as i64))
            .collect();
        BinaryForm {
            degree: self.degree - 1,
            coeffs,
        }
    }

    /// Partial derivative in `y`; degree drops by one.
    fn dy(&self) -> Self {
        let n = self.degree as usize;
        assert!(n >= 1, "cannot differentiate a constant form");
        let coeffs = (0..n)
            .map(|i| &self.coeffs[i + 1] * big((i + 1) as i64))
            .collect();
        BinaryForm {
            degree: self.degree - 1,
            coeffs,
        }
    }

    /// `∂^k f / ∂x^{k-i} ∂y^i`.
    fn mixed_derivative(&self, k: u32, i: u32) -> Self {
        let mut d = self.clone();
        for _ in 0..(k - i) {
            d = d.dx();
        }
        for _ in 0..i {
            d = d.dy();
        }
        d
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.degree as usize;
        let m = other.degree as usize;
        let mut coeffs = vec![BigRational::zero(); n + m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm {
            degree: (n + m) as u32,
            coeffs,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(e >= 1, "zeroth powers of forms are not defined here");
        let mut out = self.clone();
        for _ in 1..e {
            out = out.multiply(self);
        }
        out
    }

    /// The k-th transvectant `(g, h)_k` in the classical normalization
    /// `((m-k)!(n-k)!)/(m! n!) * sum_i (-1)^i C(k,i)
    ///  ∂^k g/∂x^{k-i}∂y^i · ∂^k h/∂x^i∂y^{k-i}`.
    ///
    /// The result has degree `m + n - 2k`. Comparisons against published
    /// covariants are proportionality statements: the literature rarely
    /// pins the scalar.
    pub fn transvectant(&self, other: &Self, k: u32) -> Result<Self, FormsError> {
        let m = self.degree;
        let n = other.degree;
        if k > m || k > n {
            return Err(FormsError::OrderTooHigh {
                k,
                left: m,
                right: n,
            });
        }
        let mut acc = BinaryForm::zero(m + n - 2 * k);
        for i in 0..=k {
            let gi = self.mixed_derivative(k, i);
            let hi = other.mixed_derivative(k, k - i);
            let mut term = gi.multiply(&hi);
            let mut c = BigRational::from(binomial(u64::from(k), u64::from(i)));
            if i % 2 == 1 {
                c = -c;
            }
            term = term.scale(&c);
            acc = acc.add(&term);
        }
        // prefactor ((m-k)!(n-k)!)/(m!n!) = 1 / (m..m-k+1) / (n..n-k+1)
        let mut denom = BigInt::one();
        for v in (m - k + 1)..=m {
            denom *= BigInt::from(v);
        }
        for v in (n - k + 1)..=n {
            denom *= BigInt::from(v);
        }
        let prefactor = BigRational::new(BigInt::one(), denom);
        Ok(acc.scale(&prefactor))
    }

    /// Substitutes `(x, y) -> (a x + b y, c x + d y)` and re-collects.
    pub fn apply_substitution(&self, m: &UnimodularMatrix) -> Self {
        let n = self.degree as usize;
        let mut out = vec![BigRational::zero(); n + 1];
        // powers of the two linear images, lowest first
        let top = linear_powers(&m.a, &m.b, n);
        let bottom = linear_powers(&m.c, &m.d, n);
        for (i, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            // (a x + b y)^{n-i} * (c x + d y)^i
            let lhs = &top[n - i];
            let rhs = &bottom[i];
            for (s, lc) in lhs.iter().enumerate() {
                if lc.is_zero() {
                    continue;
                }
                for (t, rc) in rhs.iter().enumerate() {
                    if rc.is_zero() {
                        continue;
                    }
                    out[s + t] += coeff * lc * rc;
                }
            }
        }
        BinaryForm {
            degree: self.degree,
            coeffs: out,
        }
    }

    /// Maximum multiplicity over all projective roots in the algebraic
    /// closure. Exact: the root at infinity is read off the leading zero
    /// pattern, finite roots go through repeated-gcd squarefree chains.
    pub fn max_root_multiplicity(&self) -> Result<u32, FormsError> {
        if self.is_zero() {
            return Err(FormsError::ZeroForm);
        }
        let n = self.degree as usize;
        // multiplicity of the root [1:0] (the factor y^j)
        let y_mult = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero form") as u32;
        // dehomogenize: p(x) = f(x, 1) = sum a_i x^{n-i}
        let mut p = vec![BigRational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[n - i] = c.clone();
        }
        let p = RatPoly::from_coeffs(p);
        let finite = if p.degree().unwrap_or(0) >= 1 {
            p.max_multiplicity()
        } else {
            0
        };
        Ok(y_mult.max(finite))
    }

    /// Hilbert–Mumford: a nonzero form is a nullform exactly when some root
    /// has multiplicity strictly greater than `n/2`.
    pub fn is_nullform(&self) -> Result<bool, FormsError> {
        let mult = self.max_root_multiplicity()?;
        Ok(u64::from(mult) * 2 > u64::from(self.degree))
    }
}

/// Coefficient lists of `(a x + b y)^p` for `p = 0..=max`, each entry the
/// coefficient of `x^{p-s} y^s`.
fn linear_powers(a: &BigRational, b: &BigRational, max: usize) -> Vec<Vec<BigRational>> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(vec![BigRational::one()]);
    for p in 1..=max {
        let prev = &out[p - 1];
        let mut next = vec![BigRational::zero(); p + 1];
        for (s, c) in prev.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[s] += c * a;
            next[s + 1] += c * b;
        }
        out.push(next);
    }
    out
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree as usize;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            match n - i {
                0 => {}
                1 => write!(f, "*x")?,
                p => write!(f, "*x^{p}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "*y")?,
                p => write!(f, "*y^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A 2x2 rational matrix of determinant exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMatrix {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl UnimodularMatrix {
    pub fn new(
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
    ) -> Result<Self, FormsError> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(FormsError::NotUnimodular {
                det: det.to_string(),
            });
        }
        Ok(UnimodularMatrix { a, b, c, d })
    }

    pub fn identity() -> Self {
        UnimodularMatrix {
            a: BigRational::one(),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::one(),
        }
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Result<Self, FormsError> {
        Self::new(big(a), big(b), big(c), big(d))
    }
}

/// Parses the text syntax `n: c0,c1,...,cn` with rational entries `p/q`.
pub fn parse_form(text: &str, convention: Convention) -> Result<BinaryForm, FormsError> {
    let bad = || FormsError::Parse(text.to_string());
    let (degree_part, coeff_part) = text.split_once(':').ok_or_else(bad)?;
    let degree: u32 = degree_part.trim().parse().map_err(|_| bad())?;
    let coeffs: Result<Vec<BigRational>, FormsError> = coeff_part
        .split(',')
        .map(|c| c.trim().parse::<BigRational>().map_err(|_| bad()))
        .collect();
    BinaryForm::new(degree, coeffs?, convention)
}

impl BinaryForm {
    /// Renders back into the `n: c0,c1,...,cn` input syntax (plain
    /// convention).
    pub fn to_input_syntax(&self) -> String {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("{}: {}", self.degree, coeffs.join(","))
    }
}

/// The form supported on coefficient indices `i ≡ j (mod t)`, with the
/// given values filled in at those indices (ascending) and zeros elsewhere.
pub fn lacunary_form(
    n: u32,
    j: u32,
    t: u32,
    values: &[BigRational],
) -> Result<BinaryForm, FormsError> {
    if t == 0 || j > n {
        return Err(FormsError::InvalidSupport { n, j, t });
    }
    let support: Vec<usize> = (0..=n as usize)
        .filter(|&i| i as u32 % t == j % t)
        .collect();
    if support.len() != values.len() {
        return Err(FormsError::IndexMismatch {
            expected: support.len(),
            got: values.len(),
        });
    }
    let mut form = BinaryForm::zero(n);
    for (&i, v) in support.iter().zip(values) {
        form.coeffs[i] = v.clone();
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(degree: u32, coeffs: &[i64]) -> BinaryForm {
        BinaryForm::new(
            degree,
            coeffs.iter().map(|&c| big(c)).collect(),
            Convention::Plain,
        )
        .unwrap()
    }

    #[test]
    fn construction_conventions() {
        let f = plain(2, &[1, 0, -1]);
        assert_eq!(f.coeff(0), &big(1));
        assert_eq!(f.coeff(2), &big(-1));

        // binomial convention stores [a, 7b, 21c, 35d, 35e, 21f, 7g, h]
        let g = BinaryForm::new(7, (1..=8).map(big).collect(), Convention::Binomial).unwrap();
        let expect = [1, 14, 63, 140, 175, 126, 49, 8];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(g.coeff(i), &big(e), "index {i}");
        }

        assert!(BinaryForm::new(3, vec![big(1)], Convention::Plain).is_err());
        assert!(plain(3, &[0, 0, 0, 0]).is_zero());
    }

    #[test]
    fn zeroth_transvectant_is_product() {
        let g = plain(2, &[1, 2, 3]);
        let h = plain(3, &[1, 0, 0, -1]);
        assert_eq!(g.transvectant(&h, 0).unwrap(), g.multiply(&h));
    }

    #[test]
    fn odd_self_transvectants_vanish() {
        for n in 1..=8u32 {
            let coeffs: Vec<i64> = (0..=n as i64).map(|i| 2 * i * i - 3 * i + 1).collect();
            let f = plain(n, &coeffs);
            for k in (1..=n).step_by(2) {
                assert!(
                    f.transvectant(&f, k).unwrap().is_zero(),
                    "(f,f)_{k} should vanish for n={n}"
                );
            }
        }
    }

    #[test]
    fn transvectant_rejects_large_k() {
        let f = plain(2, &[1, 1, 1]);
        assert!(matches!(
            f.transvectant(&f, 3),
            Err(FormsError::OrderTooHigh { k: 3, .. })
        ));
    }

    #[test]
    fn quadratic_discriminant() {
        // (f,f)_2 of ax^2+bxy+cy^2 equals (f_xx f_yy - f_xy^2)/2
        // = (4ac - b^2)/2 in this normalization
        let f = plain(2, &[1, 3, 1]);
        let d = f.transvectant(&f, 2).unwrap();
        assert_eq!(d.degree(), 0);
        assert_eq!(
            d.scalar_value().unwrap(),
            &BigRational::new((-5).into(), 2.into())
        );
    }

    #[test]
    fn substitution_basics() {
        let f = plain(2, &[1, 0, -1]); // x^2 - y^2
        let id = UnimodularMatrix::identity();
        assert_eq!(f.apply_substitution(&id), f);

        // (x,y) -> (-y, x): x^2 - y^2 -> y^2 - x^2
        let rot = UnimodularMatrix::from_integers(0, -1, 1, 0).unwrap();
        assert_eq!(f.apply_substitution(&rot), plain(2, &[-1, 0, 1]));

        assert!(matches!(
            UnimodularMatrix::from_integers(1, 0, 0, 2),
            Err(FormsError::NotUnimodular { .. })
        ));
    }

    #[test]
    fn root_multiplicities() {
        // x^4 (x + y), degree 5: coeffs of x^{5-i} y^i: x^5 + x^4 y
        assert_eq!(
            plain(5, &[1, 1, 0, 0, 0, 0])
                .max_root_multiplicity()
                .unwrap(),
            4
        );
        // x^2 y^2
        assert_eq!(
            plain(4, &[0, 0, 1, 0, 0]).max_root_multiplicity().unwrap(),
            2
        );
        // (x^2+y^2)^3 = x^6 + 3x^4y^2 + 3x^2y^4 + y^6
        assert_eq!(
            plain(6, &[1, 0, 3, 0, 3, 0, 1])
                .max_root_multiplicity()
                .unwrap(),
            3
        );
        // y^3
        assert_eq!(plain(3, &[0, 0, 0, 1]).max_root_multiplicity().unwrap(), 3);
        assert_eq!(
            plain(3, &[0, 0, 0, 0]).max_root_multiplicity(),
            Err(FormsError::ZeroForm)
        );
    }

    #[test]
    fn nullform_strictness() {
        assert!(plain(4, &[0, 1, 0, 0, 0]).is_nullform().unwrap()); // x^3 y
        assert!(!plain(4, &[0, 0, 1, 0, 0]).is_nullform().unwrap()); // x^2 y^2
        assert!(!plain(6, &[1, 0, 3, 0, 3, 0, 1]).is_nullform().unwrap()); // mult 3 = n/2
        assert!(plain(6, &[0, 0, 0, 0, 1, 0, 0]).is_nullform().unwrap()); // x^2 y^4
    }

    #[test]
    fn form_text_roundtrip() {
        let f = parse_form("3: 1, -2/3, 0, 5", Convention::Plain).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.coeff(1), &BigRational::new((-2).into(), 3.into()));
        let again = parse_form(&f.to_input_syntax(), Convention::Plain).unwrap();
        assert_eq!(f, again);

        assert!(parse_form("3: 1,2", Convention::Plain).is_err());
        assert!(parse_form("x: 1,2,3,4", Convention::Plain).is_err());
        assert!(parse_form("no colon", Convention::Plain).is_err());
        // binomial convention applies at parse time
        let g = parse_form("2: 1,1,1", Convention::Binomial).unwrap();
        assert_eq!(g.coeff(1), &big(2));
    }

    #[test]
    fn lacunary_support() {
        let f = lacunary_form(5, 1, 2, &[big(1), big(1), big(1)]).unwrap();
        assert_eq!(f, plain(5, &[0, 1, 0, 1, 0, 1])); // x^4 y + x^2 y^3 + y^5

        let g = lacunary_form(7, 0, 3, &[big(1), big(2), big(3)]).unwrap();
        assert_eq!(g, plain(7, &[1, 0, 0, 2, 0, 0, 3, 0]));

        assert!(matches!(
            lacunary_form(5, 1, 2, &[big(1)]),
            Err(FormsError::IndexMismatch {
                expected: 3,
                got: 1
            })
        ));
        assert!(lacunary_form(5, 6, 2, &[]).is_err());
        assert!(lacunary_form(5, 0, 0, &[]).is_err());
    }
}
