//! Division with remainder.
//!
//! Every `b` can be written as `c ∘ a + f` (take `c = 0`). The possible
//! remainders form the coset `b + A·a·A` of the two-sided ideal generated by
//! `a`, and a [`RemainderStrategy`] picks one representative of that coset.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::algebra::{builtin, check_same, check_structure, Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{frac, Rational};
use crate::solver::{find_quotient, ActionMatrix};
use crate::tensor::TensorElement;

/// Reduced-echelon basis of the ideal `A·a·A`, the image of the action matrix of `a`.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    pub a: Element,
    pub basis: Vec<Element>,
    pub pivots: Vec<usize>,
}

impl IdealBasis {
    pub fn new(a: &Element) -> Self {
        let algebra = a.algebra();
        let image = ActionMatrix::new(a).matrix().transpose().echelon();
        let basis = image
            .row_basis()
            .into_iter()
            .map(|row| Element::from_coords(algebra, row))
            .collect();
        let ideal = IdealBasis {
            a: a.clone(),
            basis,
            pivots: image.pivots,
        };
        assert!(ideal.is_two_sided(), "image of the action map must be an ideal");
        ideal
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.a.algebra()
    }

    /// Clears the pivot coordinates of `x`; this is the echelon coset representative.
    pub fn reduce(&self, x: &Element) -> Element {
        let mut coords = x.coords().to_vec();
        for (v, &p) in self.basis.iter().zip(&self.pivots) {
            let factor = coords[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (c, vc) in coords.iter_mut().zip(v.coords()) {
                if !vc.is_zero() {
                    *c -= &factor * vc;
                }
            }
        }
        Element::from_coords(x.algebra(), coords)
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.reduce(x).is_zero()
    }

    /// Checks `e·v` and `v·e` stay in the span for every basis element `e`.
    pub fn is_two_sided(&self) -> bool {
        let algebra = self.algebra();
        (0..algebra.dim()).all(|i| {
            let e = Element::basis(algebra, i);
            self.basis.iter().all(|v| {
                self.contains(&e.mul(v).expect("same algebra"))
                    && self.contains(&v.mul(&e).expect("same algebra"))
            })
        })
    }

    pub fn is_reduced_echelon(&self) -> bool {
        self.pivots.windows(2).all(|w| w[0] < w[1])
            && self.basis.iter().zip(&self.pivots).enumerate().all(|(row, (v, &p))| {
                v.coords()[p].is_one()
                    && v.coords()[..p].iter().all(Zero::is_zero)
                    && self
                        .basis
                        .iter()
                        .enumerate()
                        .all(|(other, w)| other == row || w.coords()[p].is_zero())
            })
    }
}

pub fn ideal_basis(a: &Element) -> IdealBasis {
    IdealBasis::new(a)
}

/// How a coset representative is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RemainderStrategy {
    /// Clear the pivot coordinates of the ideal's echelon basis. Works in every algebra.
    Echelon,
    /// Least nonnegative integer remainder in the ground ring.
    LeastNonnegative,
    /// Hurwitz-rounded left quotient in the integer quaternions; the remainder has smaller norm.
    MinNorm,
    /// Remainder of lower degree than the divisor; polynomials only.
    DegreeReduction,
}

impl RemainderStrategy {
    pub fn name(self) -> &'static str {
        match self {
            RemainderStrategy::Echelon => "echelon",
            RemainderStrategy::LeastNonnegative => "least-nonneg",
            RemainderStrategy::MinNorm => "min-norm",
            RemainderStrategy::DegreeReduction => "degree",
        }
    }

    fn inapplicable(self, reason: impl Into<String>) -> Error {
        Error::InapplicableStrategy {
            strategy: self.name(),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for RemainderStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RemainderStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "echelon" => Ok(RemainderStrategy::Echelon),
            "least-nonneg" => Ok(RemainderStrategy::LeastNonnegative),
            "min-norm" => Ok(RemainderStrategy::MinNorm),
            "degree" => Ok(RemainderStrategy::DegreeReduction),
            other => Err(Error::Precondition(format!(
                "unknown strategy `{other}` (expected echelon, least-nonneg, min-norm or degree)"
            ))),
        }
    }
}

/// `f = b − c ∘ a`, the remainder belonging to the quotient `c`.
pub fn remainder_for(c: &TensorElement, a: &Element, b: &Element) -> Result<Element> {
    check_same(a.algebra(), b.algebra())?;
    b.sub(&c.apply(a)?)
}

pub(crate) fn is_ground_ring(algebra: &Algebra) -> bool {
    algebra.dim() == 1 && algebra.constant(0, 0, 0).is_one()
}

pub(crate) fn is_quaternion_algebra(algebra: &Algebra) -> bool {
    let h = builtin("quaternions").expect("builtin");
    algebra.dim() == 4
        && algebra.unit_coords() == h.unit_coords()
        && (0..4).all(|i| (0..4).all(|j| (0..4).all(|k| algebra.constant(i, j, k) == h.constant(i, j, k))))
}

/// True for the Hurwitz order: all coordinates integers, or all in `Z + 1/2`.
pub fn is_hurwitz(x: &Element) -> bool {
    let half = frac(1, 2);
    x.coords().iter().all(Rational::is_integer)
        || x.coords().iter().all(|c| (c - &half).is_integer())
}

/// Sum of squared coordinates; multiplicative on quaternions.
pub fn quaternion_norm(x: &Element) -> Rational {
    x.coords().iter().map(|c| c * c).sum()
}

fn round_half_even(x: &Rational) -> Rational {
    let floor = x.floor();
    let rest = x - &floor;
    let half = frac(1, 2);
    if rest < half {
        floor
    } else if rest > half || floor.to_integer().is_odd() {
        floor + Rational::one()
    } else {
        floor
    }
}

/// Nearest element of the Hurwitz order. Coordinate ties go to even and a tie
/// between the integral and half-integral candidates goes to the integral one.
pub fn hurwitz_round(x: &Element) -> Element {
    let half = frac(1, 2);
    let lipschitz: Vec<Rational> = x.coords().iter().map(round_half_even).collect();
    let shifted: Vec<Rational> = x
        .coords()
        .iter()
        .map(|c| round_half_even(&(c - &half)) + &half)
        .collect();
    let distance = |y: &[Rational]| -> Rational {
        x.coords().iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum()
    };
    let coords = if distance(&shifted) < distance(&lipschitz) {
        shifted
    } else {
        lipschitz
    };
    Element::from_coords(x.algebra(), coords)
}

fn min_norm_quotient(b: &Element, a: &Element) -> Result<Element> {
    let strategy = RemainderStrategy::MinNorm;
    if !is_quaternion_algebra(a.algebra()) {
        return Err(strategy.inapplicable("requires the quaternion algebra"));
    }
    if !is_hurwitz(a) || !is_hurwitz(b) {
        return Err(strategy.inapplicable("operands must be integral quaternions"));
    }
    let inverse = a.invert().ok_or(Error::DivisionByZero)?;
    Ok(hurwitz_round(&b.mul(&inverse)?))
}

/// A deterministic representative of `b + A·a·A` (or, for `MinNorm`, of `b + A·a`).
pub fn canonical_remainder(b: &Element, a: &Element, strategy: RemainderStrategy) -> Result<Element> {
    check_same(a.algebra(), b.algebra())?;
    match strategy {
        RemainderStrategy::Echelon => Ok(IdealBasis::new(a).reduce(b)),
        RemainderStrategy::LeastNonnegative => {
            if !is_ground_ring(a.algebra()) {
                return Err(strategy.inapplicable("requires the one-dimensional ground ring"));
            }
            if !a.is_integral() || !b.is_integral() {
                return Err(strategy.inapplicable("operands must be integers"));
            }
            let modulus = a.coords()[0].abs();
            if modulus.is_zero() {
                return Ok(b.clone());
            }
            let value = b.coords()[0].to_integer().mod_floor(&modulus.to_integer());
            Ok(Element::from_coords(b.algebra(), vec![Rational::from_integer(value)]))
        }
        RemainderStrategy::MinNorm => {
            if a.is_zero() {
                if !is_quaternion_algebra(a.algebra()) {
                    return Err(strategy.inapplicable("requires the quaternion algebra"));
                }
                return Ok(b.clone());
            }
            let q = min_norm_quotient(b, a)?;
            b.sub(&q.mul(a)?)
        }
        RemainderStrategy::DegreeReduction => {
            Err(strategy.inapplicable("degree reduction applies to polynomials"))
        }
    }
}

/// The quotient `c` with `c ∘ a + (b mod a) = b`.
pub fn canonical_quotient(b: &Element, a: &Element, strategy: RemainderStrategy) -> Result<TensorElement> {
    Ok(divide(b, a, strategy)?.0)
}

/// Canonical quotient and remainder together.
pub fn divide(
    b: &Element,
    a: &Element,
    strategy: RemainderStrategy,
) -> Result<(TensorElement, Element)> {
    let remainder = canonical_remainder(b, a, strategy)?;
    let target = b.sub(&remainder)?;
    let quotient = find_quotient(a, &target)?
        .expect("b minus its canonical remainder lies in the ideal generated by a");
    Ok((quotient, remainder))
}

/// True when `b − c` lies in the ideal generated by `a`.
pub fn same_coset(b: &Element, c: &Element, a: &Element) -> Result<bool> {
    check_same(a.algebra(), b.algebra())?;
    Ok(IdealBasis::new(a).contains(&b.sub(c)?))
}

/// `A / (A·a·A)` realized on the coordinates that are not pivots of the ideal basis.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    source: Arc<Algebra>,
    ideal: IdealBasis,
    complement: Vec<usize>,
    projection: Matrix,
    section: Matrix,
    constants: Vec<Rational>,
    unit: Vec<Rational>,
}

impl QuotientAlgebra {
    pub fn new(a: &Element) -> Result<Self> {
        let source = Arc::clone(a.algebra());
        let n = source.dim();
        let ideal = IdealBasis::new(a);
        let complement: Vec<usize> = (0..n).filter(|i| !ideal.pivots.contains(i)).collect();
        let m = complement.len();

        let project = |x: &Element| -> Vec<Rational> {
            let reduced = ideal.reduce(x);
            complement.iter().map(|&c| reduced.coords()[c].clone()).collect()
        };
        let projection_columns: Vec<Vec<Rational>> =
            (0..n).map(|j| project(&Element::basis(&source, j))).collect();
        let projection = Matrix::from_columns(m, &projection_columns);
        let mut section = Matrix::zeros(n, m);
        for (t, &c) in complement.iter().enumerate() {
            section.set(c, t, Rational::one());
        }
        let mut constants = Vec::with_capacity(m * m * m);
        for &s in &complement {
            for &t in &complement {
                let product = Element::basis(&source, s).mul(&Element::basis(&source, t))?;
                constants.extend(project(&product));
            }
        }
        let unit = project(&Element::unit(&source));
        check_structure(m, &constants, &unit)?;
        Ok(QuotientAlgebra {
            source,
            ideal,
            complement,
            projection,
            section,
            constants,
            unit,
        })
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn ideal(&self) -> &IdealBasis {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Source coordinates kept as the quotient's basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let m = self.dim();
        &self.constants[(i * m + j) * m + k]
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn project(&self, x: &Element) -> Vec<Rational> {
        self.projection.mul_vec(x.coords())
    }

    pub fn lift(&self, y: &[Rational]) -> Element {
        Element::from_coords(&self.source, self.section.mul_vec(y))
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let m = self.dim();
        let mut out = vec![Rational::zero(); m];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += xi * yj * c;
                    }
                }
            }
        }
        out
    }

    pub fn check_structure(&self) -> Result<()> {
        check_structure(self.dim(), &self.constants, &self.unit)
    }

    /// `proj(e_i · e_j) = proj(e_i) · proj(e_j)` for all source basis pairs.
    pub fn is_multiplicative(&self) -> bool {
        let n = self.source.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let ei = Element::basis(&self.source, i);
                let ej = Element::basis(&self.source, j);
                let product = ei.mul(&ej).expect("same algebra");
                self.project(&product) == self.mul(&self.project(&ei), &self.project(&ej))
            })
        })
    }

    pub fn section_is_right_inverse(&self) -> bool {
        self.projection.mul(&self.section) == Matrix::identity(self.dim())
    }

    /// The quotient as a standalone algebra; fails when the quotient is zero.
    pub fn to_algebra(&self) -> Result<Arc<Algebra>> {
        let m = self.dim();
        let labels = self
            .complement
            .iter()
            .map(|&c| self.source.labels()[c].clone())
            .collect();
        let name = format!("{}/({})", self.source.name(), self.ideal.a);
        if m == 0 {
            return Err(Error::InvalidAlgebra("the quotient algebra is zero".into()));
        }
        Algebra::from_flat(name, m, self.constants.clone(), self.unit.clone(), labels)
    }
}

pub fn quotient_algebra(a: &Element) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(a)
}

/// Divides `a` by `b` and `b` by `c` canonically, then checks that `a mod c`
/// equals `(p ∘ s + q) mod c` where `a = p ∘ b + q` and `b = t ∘ c + s`.
pub fn chain_remainder_check(
    a: &Element,
    b: &Element,
    c: &Element,
    strategy: RemainderStrategy,
) -> Result<bool> {
    if !matches!(strategy, RemainderStrategy::Echelon | RemainderStrategy::LeastNonnegative) {
        return Err(strategy.inapplicable("chained remainders need a coset-deterministic strategy"));
    }
    let (p, q) = divide(a, b, strategy)?;
    let (_t, s) = divide(b, c, strategy)?;
    let direct = canonical_remainder(a, c, strategy)?;
    let via_chain = canonical_remainder(&p.apply(&s)?.add(&q)?, c, strategy)?;
    Ok(direct == via_chain)
}
