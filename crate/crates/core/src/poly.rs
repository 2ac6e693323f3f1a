//! Polynomials over an algebra with a central indeterminate `x`, and long
//! division whose quotient has `A ⊗ A` coefficients.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{check_same, Algebra, Element};
use crate::error::{Error, Result};
use crate::print::join_terms;
use crate::solver::find_quotient;
use crate::tensor::TensorElement;

/// `Σ coeffs[k] x^k` with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    algebra: Arc<Algebra>,
    coeffs: Vec<Element>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.algebra.name(), self)
    }
}

impl Polynomial {
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Polynomial {
            algebra: Arc::clone(algebra),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: &Element) -> Self {
        Self::monomial(c, 0)
    }

    /// The indeterminate `x`.
    pub fn x(algebra: &Arc<Algebra>) -> Self {
        Self::monomial(&Element::unit(algebra), 1)
    }

    pub fn monomial(c: &Element, degree: usize) -> Self {
        let mut coeffs = vec![Element::zero(c.algebra()); degree];
        coeffs.push(c.clone());
        Self::trimmed(c.algebra(), coeffs)
    }

    pub fn new(algebra: &Arc<Algebra>, coeffs: Vec<Element>) -> Result<Self> {
        for c in &coeffs {
            check_same(algebra, c.algebra())?;
        }
        Ok(Self::trimmed(algebra, coeffs))
    }

    fn trimmed(algebra: &Arc<Algebra>, mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(Element::is_zero) {
            coeffs.pop();
        }
        Polynomial {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Element {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Element::zero(&self.algebra))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Element> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.algebra, &other.algebra)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coeff(k).add(&other.coeff(k)))
            .collect::<Result<_>>()?;
        Ok(Self::trimmed(&self.algebra, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(Element::neg).collect(),
        }
    }

    /// Convolution; coefficients of `self` multiply those of `other` from the left.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.algebra, &other.algebra)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.algebra));
        }
        let mut coeffs = vec![Element::zero(&self.algebra); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(Self::trimmed(&self.algebra, coeffs))
    }
}

/// `Σ coeffs[k] x^k` with `A ⊗ A` coefficients, acting on polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPolynomial {
    algebra: Arc<Algebra>,
    coeffs: Vec<TensorElement>,
}

impl fmt::Debug for TensorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPolynomial[{}]({})", self.algebra.name(), self)
    }
}

impl TensorPolynomial {
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        TensorPolynomial {
            algebra: Arc::clone(algebra),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(t: &TensorElement) -> Self {
        Self::trimmed(t.algebra(), vec![t.clone()])
    }

    pub fn new(algebra: &Arc<Algebra>, coeffs: Vec<TensorElement>) -> Result<Self> {
        for c in &coeffs {
            check_same(algebra, c.algebra())?;
        }
        Ok(Self::trimmed(algebra, coeffs))
    }

    fn trimmed(algebra: &Arc<Algebra>, mut coeffs: Vec<TensorElement>) -> Self {
        while coeffs.last().is_some_and(TensorElement::is_zero) {
            coeffs.pop();
        }
        TensorPolynomial {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[TensorElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> TensorElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| TensorElement::zero(&self.algebra))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.algebra, &other.algebra)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coeff(k).add(&other.coeff(k)))
            .collect::<Result<_>>()?;
        Ok(Self::trimmed(&self.algebra, coeffs))
    }

    pub fn scale(&self, r: &crate::scalar::Rational) -> Self {
        Self::trimmed(&self.algebra, self.coeffs.iter().map(|t| t.scale(r)).collect())
    }

    /// `Σ_{i,j} (Q_i ∘ q_j) x^{i+j}`.
    pub fn apply(&self, q: &Polynomial) -> Result<Polynomial> {
        check_same(&self.algebra, q.algebra())?;
        if self.is_zero() || q.is_zero() {
            return Ok(Polynomial::zero(&self.algebra));
        }
        let mut coeffs = vec![Element::zero(&self.algebra); self.coeffs.len() + q.coeffs.len() - 1];
        for (i, t) in self.coeffs.iter().enumerate() {
            for (j, c) in q.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&t.apply(c)?)?;
            }
        }
        Ok(Polynomial::trimmed(&self.algebra, coeffs))
    }
}

pub fn tensor_poly_apply(quotient: &TensorPolynomial, q: &Polynomial) -> Result<Polynomial> {
    quotient.apply(q)
}

/// Long division `p = Q ∘ q + r` with `deg r < deg q`.
///
/// Each step solves `t ∘ lead(q) = lead(r)` for the current remainder `r`.
/// Over a division algebra every step succeeds; elsewhere a leading
/// coefficient may fall outside the ideal generated by `lead(q)`, which is
/// reported as [`Error::NotReducible`].
pub fn poly_divmod(p: &Polynomial, q: &Polynomial) -> Result<(TensorPolynomial, Polynomial)> {
    check_same(p.algebra(), q.algebra())?;
    let divisor_degree = q.degree().ok_or(Error::DivisionByZero)?;
    let algebra = p.algebra();
    let lead_q = q.lead().expect("nonzero").clone();
    let mut quotient: Vec<TensorElement> = Vec::new();
    let mut rem = p.clone();
    while let Some(degree) = rem.degree().filter(|&d| d >= divisor_degree) {
        let shift = degree - divisor_degree;
        let lead_r = rem.lead().expect("nonzero");
        let t = find_quotient(&lead_q, lead_r)?.ok_or_else(|| Error::NotReducible {
            degree,
            stuck: rem.to_string(),
        })?;
        if quotient.len() <= shift {
            quotient.resize(shift + 1, TensorElement::zero(algebra));
        }
        quotient[shift] = quotient[shift].add(&t)?;
        let step = TensorPolynomial::constant(&t).apply(q)?;
        let mut shifted = vec![Element::zero(algebra); shift];
        shifted.extend(step.coeffs);
        rem = rem.sub(&Polynomial::trimmed(algebra, shifted))?;
        debug_assert!(rem.degree().is_none_or(|d| d < degree));
    }
    Ok((TensorPolynomial::trimmed(algebra, quotient), rem))
}

/// `deg(p·q) = deg p + deg q` for nonzero `p`, `q`.
pub fn poly_degree_law_check(p: &Polynomial, q: &Polynomial) -> Result<bool> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::Precondition(
            "the degree law is stated for nonzero polynomials".into(),
        ));
    };
    Ok(p.mul(q)?.degree() == Some(dp + dq))
}

/// A constant polynomial whose value is a unit divisor of the algebra.
pub fn is_unit_poly(p: &Polynomial) -> bool {
    p.degree() == Some(0) && p.coeffs[0].is_unit_divisor()
}

/// Outcome of checking one candidate divisor of a degree-one polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeVerdict {
    /// The candidate is a constant unit divisor.
    UnitDivisor,
    /// The quotient is a constant tensor, invertible under composition.
    UnitQuotient {
        quotient: TensorElement,
        inverse: TensorElement,
    },
    /// The candidate does not divide `p` by long division.
    NotADivisor,
    /// A divisor satisfying neither condition.
    Violation,
}

/// Checks that a divisor `q` of the degree-one polynomial `p` is either a
/// unit constant or has a unit tensor quotient.
pub fn verify_prime_degree1(p: &Polynomial, q: &Polynomial) -> Result<PrimeVerdict> {
    check_same(p.algebra(), q.algebra())?;
    if p.degree() != Some(1) {
        return Err(Error::NotDegreeOne(p.degree()));
    }
    if q.is_zero() {
        return Ok(PrimeVerdict::NotADivisor);
    }
    let (quotient, remainder) = match poly_divmod(p, q) {
        Ok(division) => division,
        Err(Error::NotReducible { .. }) => return Ok(PrimeVerdict::NotADivisor),
        Err(e) => return Err(e),
    };
    if !remainder.is_zero() {
        return Ok(PrimeVerdict::NotADivisor);
    }
    if q.degree() == Some(0) {
        return Ok(if is_unit_poly(q) {
            PrimeVerdict::UnitDivisor
        } else {
            PrimeVerdict::Violation
        });
    }
    if quotient.degree() == Some(0) {
        let r = quotient.coeffs[0].clone();
        if let Some(inverse) = r.unit_inverse() {
            return Ok(PrimeVerdict::UnitQuotient { quotient: r, inverse });
        }
    }
    Ok(PrimeVerdict::Violation)
}

fn power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let coef = c.to_string();
                if k == 0 {
                    return coef;
                }
                let xk = power(k);
                if !c.is_monomial() {
                    return format!("({coef})*{xk}");
                }
                match coef.as_str() {
                    "1" => xk,
                    "-1" => format!("-{xk}"),
                    _ if coef.trim_start_matches('-').bytes().all(|b| b.is_ascii_digit()) => {
                        format!("{coef}{xk}")
                    }
                    _ => format!("{coef}*{xk}"),
                }
            });
        f.write_str(&join_terms(terms))
    }
}

impl fmt::Display for TensorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, t)| !t.is_zero())
            .map(|(k, t)| match k {
                0 => format!("({t})"),
                _ => format!("({t})*{}", power(k)),
            });
        f.write_str(&join_terms(terms))
    }
}
