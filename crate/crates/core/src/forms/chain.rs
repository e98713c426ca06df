//! Transvectant expression trees: recipes that build an invariant or
//! covariant out of a single input form.
//!
//! Leaves are the symbol `f`; interior nodes are transvectant applications,
//! products, powers, and scalar multiples. Order and coefficient-degree
//! bookkeeping is structural, so a chain knows what it produces before it
//! is evaluated.

use num_rational::BigRational;

use super::{BinaryForm, FormsError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantChain {
    /// The input form itself.
    Form,
    /// `(lhs, rhs)_k`.
    Transvect {
        lhs: Box<InvariantChain>,
        rhs: Box<InvariantChain>,
        k: u32,
    },
    /// Pointwise product of two covariants.
    Product(Box<InvariantChain>, Box<InvariantChain>),
    /// `base^e`, `e >= 1`.
    Power(Box<InvariantChain>, u32),
    /// Scalar multiple.
    Scale(BigRational, Box<InvariantChain>),
}

impl InvariantChain {
    pub fn form() -> Self {
        InvariantChain::Form
    }

    pub fn transvect(lhs: InvariantChain, rhs: InvariantChain, k: u32) -> Self {
        InvariantChain::Transvect {
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
            k,
        }
    }

    pub fn product(lhs: InvariantChain, rhs: InvariantChain) -> Self {
        InvariantChain::Product(Box::new(lhs), Box::new(rhs))
    }

    pub fn power(base: InvariantChain, e: u32) -> Self {
        assert!(e >= 1, "chain powers must be positive");
        InvariantChain::Power(Box::new(base), e)
    }

    pub fn scale(factor: BigRational, inner: InvariantChain) -> Self {
        InvariantChain::Scale(factor, Box::new(inner))
    }

    /// Predicted order in `x, y` when applied to a form of order
    /// `form_order`: transvectants subtract `2k`, products add.
    pub fn order(&self, form_order: u32) -> Result<u32, FormsError> {
        match self {
            InvariantChain::Form => Ok(form_order),
            InvariantChain::Transvect { lhs, rhs, k } => {
                let left = lhs.order(form_order)?;
                let right = rhs.order(form_order)?;
                if *k > left || *k > right {
                    return Err(FormsError::OrderTooHigh { k: *k, left, right });
                }
                Ok(left + right - 2 * k)
            }
            InvariantChain::Product(lhs, rhs) => {
                Ok(lhs.order(form_order)? + rhs.order(form_order)?)
            }
            InvariantChain::Power(base, e) => Ok(base.order(form_order)? * e),
            InvariantChain::Scale(_, inner) => inner.order(form_order),
        }
    }

    /// Degree in the coefficients of the input form: each leaf counts 1.
    pub fn coefficient_degree(&self) -> u64 {
        match self {
            InvariantChain::Form => 1,
            InvariantChain::Transvect { lhs, rhs, .. } => {
                lhs.coefficient_degree() + rhs.coefficient_degree()
            }
            InvariantChain::Product(lhs, rhs) => {
                lhs.coefficient_degree() + rhs.coefficient_degree()
            }
            InvariantChain::Power(base, e) => base.coefficient_degree() * u64::from(*e),
            InvariantChain::Scale(_, inner) => inner.coefficient_degree(),
        }
    }

    /// Evaluates the tree on a concrete form. The result's degree equals
    /// `self.order(f.degree())`.
    pub fn evaluate(&self, f: &BinaryForm) -> Result<BinaryForm, FormsError> {
        match self {
            InvariantChain::Form => Ok(f.clone()),
            InvariantChain::Transvect { lhs, rhs, k } => {
                let left = lhs.evaluate(f)?;
                let right = rhs.evaluate(f)?;
                left.transvectant(&right, *k)
            }
            InvariantChain::Product(lhs, rhs) => Ok(lhs.evaluate(f)?.multiply(&rhs.evaluate(f)?)),
            InvariantChain::Power(base, e) => Ok(base.evaluate(f)?.pow(*e)),
            InvariantChain::Scale(factor, inner) => Ok(inner.evaluate(f)?.scale(factor)),
        }
    }

    /// Evaluates an order-0 chain down to the scalar invariant value.
    pub fn evaluate_scalar(&self, f: &BinaryForm) -> Result<BigRational, FormsError> {
        let result = self.evaluate(f)?;
        match result.scalar_value() {
            Some(v) => Ok(v.clone()),
            None => Err(FormsError::NotScalar {
                order: result.degree(),
            }),
        }
    }
}
