//! Common factors and the Euclidean algorithm.
//!
//! Divisibility here is the two-sided tensor divisibility of the ambient
//! structure, realized through a canonical remainder with a strictly
//! descending measure. The result of [`euclidean_gcd`] is a common factor
//! that every common factor found along the chain divides; it is not claimed
//! to be unique, even up to units.

use std::fmt::{Debug, Display};
use std::sync::Arc;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::poly::{is_unit_poly, poly_divmod, Polynomial, TensorPolynomial};
use crate::remainder::{self, is_ground_ring, is_quaternion_algebra, RemainderStrategy};
use crate::scalar::{self, Rational};
use crate::tensor::TensorElement;

/// A ring with a canonical division whose remainders strictly descend.
pub trait EuclideanSetting {
    type Value: Clone + PartialEq + Display + Debug;
    type Quotient: Clone + Display + Debug;

    fn strategy(&self) -> RemainderStrategy;

    fn is_zero(&self, v: &Self::Value) -> bool;

    /// The quantity that strictly decreases along a remainder chain.
    fn measure(&self, v: &Self::Value) -> Rational;

    /// Canonical `(quotient, remainder)` of `dividend` by `divisor`.
    fn divide(&self, dividend: &Self::Value, divisor: &Self::Value) -> Result<(Self::Quotient, Self::Value)>;

    /// `quotient ∘ divisor + remainder`.
    fn recompose(
        &self,
        quotient: &Self::Quotient,
        divisor: &Self::Value,
        remainder: &Self::Value,
    ) -> Result<Self::Value>;

    fn divides(&self, divisor: &Self::Value, dividend: &Self::Value) -> Result<bool>;

    fn is_unit_divisor(&self, v: &Self::Value) -> bool;
}

/// The integers inside the ground algebra, with least nonnegative remainders.
#[derive(Clone, Debug)]
pub struct Integers {
    algebra: Arc<Algebra>,
}

impl Integers {
    pub fn new(algebra: &Arc<Algebra>) -> Result<Self> {
        if !is_ground_ring(algebra) {
            return Err(Error::InapplicableStrategy {
                strategy: RemainderStrategy::LeastNonnegative.name(),
                reason: "requires the one-dimensional ground ring".into(),
            });
        }
        Ok(Integers {
            algebra: Arc::clone(algebra),
        })
    }

    pub fn value(&self, v: i64) -> Element {
        Element::from_coords(&self.algebra, vec![scalar::int(v)])
    }
}

impl EuclideanSetting for Integers {
    type Value = Element;
    type Quotient = TensorElement;

    fn strategy(&self) -> RemainderStrategy {
        RemainderStrategy::LeastNonnegative
    }

    fn is_zero(&self, v: &Element) -> bool {
        v.is_zero()
    }

    fn measure(&self, v: &Element) -> Rational {
        v.coords()[0].abs()
    }

    fn divide(&self, dividend: &Element, divisor: &Element) -> Result<(TensorElement, Element)> {
        remainder::divide(dividend, divisor, self.strategy())
    }

    fn recompose(&self, quotient: &TensorElement, divisor: &Element, rem: &Element) -> Result<Element> {
        quotient.apply(divisor)?.add(rem)
    }

    fn divides(&self, divisor: &Element, dividend: &Element) -> Result<bool> {
        Ok(remainder::canonical_remainder(dividend, divisor, self.strategy())?.is_zero())
    }

    fn is_unit_divisor(&self, v: &Element) -> bool {
        v.is_integral() && v.coords()[0].abs().is_one()
    }
}

/// The Hurwitz integer quaternions with norm-descending remainders.
///
/// Divisibility is tested through the rounded left quotient `(q ⊗ 1)`.
#[derive(Clone, Debug)]
pub struct HurwitzQuaternions {
    algebra: Arc<Algebra>,
}

impl HurwitzQuaternions {
    pub fn new(algebra: &Arc<Algebra>) -> Result<Self> {
        if !is_quaternion_algebra(algebra) {
            return Err(Error::InapplicableStrategy {
                strategy: RemainderStrategy::MinNorm.name(),
                reason: "requires the quaternion algebra".into(),
            });
        }
        Ok(HurwitzQuaternions {
            algebra: Arc::clone(algebra),
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
}

impl EuclideanSetting for HurwitzQuaternions {
    type Value = Element;
    type Quotient = TensorElement;

    fn strategy(&self) -> RemainderStrategy {
        RemainderStrategy::MinNorm
    }

    fn is_zero(&self, v: &Element) -> bool {
        v.is_zero()
    }

    fn measure(&self, v: &Element) -> Rational {
        remainder::quaternion_norm(v)
    }

    fn divide(&self, dividend: &Element, divisor: &Element) -> Result<(TensorElement, Element)> {
        remainder::divide(dividend, divisor, self.strategy())
    }

    fn recompose(&self, quotient: &TensorElement, divisor: &Element, rem: &Element) -> Result<Element> {
        quotient.apply(divisor)?.add(rem)
    }

    fn divides(&self, divisor: &Element, dividend: &Element) -> Result<bool> {
        if divisor.is_zero() {
            return Ok(dividend.is_zero());
        }
        Ok(remainder::canonical_remainder(dividend, divisor, self.strategy())?.is_zero())
    }

    fn is_unit_divisor(&self, v: &Element) -> bool {
        remainder::is_hurwitz(v) && remainder::quaternion_norm(v).is_one()
    }
}

/// Polynomials over a division algebra with degree-reducing long division.
#[derive(Clone, Debug)]
pub struct DivisionPolynomials {
    algebra: Arc<Algebra>,
}

impl DivisionPolynomials {
    pub fn new(algebra: &Arc<Algebra>) -> Self {
        DivisionPolynomials {
            algebra: Arc::clone(algebra),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
}

impl EuclideanSetting for DivisionPolynomials {
    type Value = Polynomial;
    type Quotient = TensorPolynomial;

    fn strategy(&self) -> RemainderStrategy {
        RemainderStrategy::DegreeReduction
    }

    fn is_zero(&self, v: &Polynomial) -> bool {
        v.is_zero()
    }

    fn measure(&self, v: &Polynomial) -> Rational {
        v.degree().map_or(-Rational::one(), |d| scalar::int(d as i64))
    }

    fn divide(&self, dividend: &Polynomial, divisor: &Polynomial) -> Result<(TensorPolynomial, Polynomial)> {
        poly_divmod(dividend, divisor)
    }

    fn recompose(
        &self,
        quotient: &TensorPolynomial,
        divisor: &Polynomial,
        rem: &Polynomial,
    ) -> Result<Polynomial> {
        quotient.apply(divisor)?.add(rem)
    }

    fn divides(&self, divisor: &Polynomial, dividend: &Polynomial) -> Result<bool> {
        if divisor.is_zero() {
            return Ok(dividend.is_zero());
        }
        match poly_divmod(dividend, divisor) {
            Ok((_, rem)) => Ok(rem.is_zero()),
            Err(Error::NotReducible { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    fn is_unit_divisor(&self, v: &Polynomial) -> bool {
        is_unit_poly(v)
    }
}

#[derive(Clone, Debug)]
pub struct GcdStep<S: EuclideanSetting> {
    pub dividend: S::Value,
    pub divisor: S::Value,
    pub quotient: S::Quotient,
    pub remainder: S::Value,
}

#[derive(Clone, Debug)]
pub struct GcdTrace<S: EuclideanSetting> {
    pub steps: Vec<GcdStep<S>>,
    pub result: S::Value,
}

#[derive(Serialize)]
struct StepJson {
    dividend: String,
    divisor: String,
    quotient: String,
    remainder: String,
}

#[derive(Serialize)]
struct TraceJson {
    steps: Vec<StepJson>,
    result: String,
}

impl<S: EuclideanSetting> GcdTrace<S> {
    pub fn to_json(&self) -> serde_json::Value {
        let trace = TraceJson {
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    dividend: s.dividend.to_string(),
                    divisor: s.divisor.to_string(),
                    quotient: s.quotient.to_string(),
                    remainder: s.remainder.to_string(),
                })
                .collect(),
            result: self.result.to_string(),
        };
        serde_json::to_value(trace).expect("trace serializes")
    }

    /// Re-checks the division identity and the strict descent at every step.
    pub fn verify(&self, setting: &S) -> Result<bool> {
        for step in &self.steps {
            let back = setting.recompose(&step.quotient, &step.divisor, &step.remainder)?;
            if back != step.dividend
                || setting.measure(&step.remainder) >= setting.measure(&step.divisor)
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn is_common_factor<S: EuclideanSetting>(
    setting: &S,
    c: &S::Value,
    a: &S::Value,
    b: &S::Value,
) -> Result<bool> {
    Ok(setting.divides(c, a)? && setting.divides(c, b)?)
}

/// Repeated canonical division until the remainder vanishes.
pub fn euclidean_gcd<S: EuclideanSetting>(setting: &S, a: &S::Value, b: &S::Value) -> Result<GcdTrace<S>> {
    let mut steps = Vec::new();
    let mut x = a.clone();
    let mut y = b.clone();
    while !setting.is_zero(&y) {
        let (quotient, rem) = setting.divide(&x, &y)?;
        if setting.measure(&rem) >= setting.measure(&y) {
            return Err(Error::Precondition(format!(
                "strategy `{}` failed to descend: remainder {rem} of {x} by {y}",
                setting.strategy()
            )));
        }
        steps.push(GcdStep {
            dividend: x,
            divisor: y.clone(),
            quotient,
            remainder: rem.clone(),
        });
        x = y;
        y = rem;
    }
    Ok(GcdTrace { steps, result: x })
}

/// `c` is a common factor and every common factor among `candidates` divides it.
pub fn hcf_certificate<S: EuclideanSetting>(
    setting: &S,
    c: &S::Value,
    a: &S::Value,
    b: &S::Value,
    candidates: &[S::Value],
) -> Result<bool> {
    if !is_common_factor(setting, c, a, b)? {
        return Ok(false);
    }
    for d in candidates {
        if is_common_factor(setting, d, a, b)? && !setting.divides(d, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Neither input is a unit divisor and their computed gcd is.
pub fn relatively_prime<S: EuclideanSetting>(setting: &S, a: &S::Value, b: &S::Value) -> Result<bool> {
    for v in [a, b] {
        if setting.is_unit_divisor(v) {
            return Err(Error::Precondition(format!(
                "{v} is a unit divisor; relative primality is defined for non-units"
            )));
        }
    }
    let trace = euclidean_gcd(setting, a, b)?;
    Ok(setting.is_unit_divisor(&trace.result))
}
