//! Solving `c ∘ a = b` for the tensor `c`.
//!
//! For a fixed `a` the map `t -> t ∘ a` is linear from the `n²`-dimensional
//! tensor space to `A`. Its image is the two-sided ideal generated by `a` and
//! its kernel is the set of tensors annihilating `a`; the set of quotients of
//! `b` by `a` is a particular solution plus that kernel.

use std::sync::Arc;

use num_traits::One;

use crate::algebra::{check_same, Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Rational;
use crate::tensor::{index_pair, TensorElement};

/// The `n × n²` matrix of `t -> t ∘ a`.
#[derive(Clone, Debug)]
pub struct ActionMatrix {
    element: Element,
    matrix: Matrix,
}

impl ActionMatrix {
    pub fn new(a: &Element) -> Self {
        let algebra = a.algebra();
        let n = algebra.dim();
        let columns: Vec<Vec<Rational>> = (0..n * n)
            .map(|idx| {
                let (l, r) = index_pair(n, idx);
                let left = Element::basis(algebra, l).mul(a).expect("same algebra");
                left.mul(&Element::basis(algebra, r)).expect("same algebra").into_coords()
            })
            .collect();
        ActionMatrix {
            element: a.clone(),
            matrix: Matrix::from_columns(n, &columns),
        }
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn apply(&self, t: &TensorElement) -> Element {
        Element::from_coords(self.element.algebra(), self.matrix.mul_vec(t.coords()))
    }
}

pub fn action_matrix(a: &Element) -> ActionMatrix {
    ActionMatrix::new(a)
}

/// All quotients of `b` by `a`: `particular + span(kernel_basis)`.
#[derive(Clone, Debug)]
pub struct QuotientSet {
    pub a: Element,
    pub b: Element,
    pub particular: Option<TensorElement>,
    pub kernel_basis: Vec<TensorElement>,
}

impl QuotientSet {
    pub fn solvable(&self) -> bool {
        self.particular.is_some()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel_basis.len()
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.a.algebra()
    }

    /// `particular + Σ coeffs[i] · kernel_basis[i]`; `None` when unsolvable.
    pub fn quotient_with(&self, coeffs: &[Rational]) -> Option<TensorElement> {
        assert_eq!(coeffs.len(), self.kernel_basis.len(), "one coefficient per kernel vector");
        let mut t = self.particular.clone()?;
        for (c, k) in coeffs.iter().zip(&self.kernel_basis) {
            t = t.add(&k.scale(c)).expect("same algebra");
        }
        Some(t)
    }

    /// Exact test that `t` lies in the span of the kernel basis.
    pub fn in_kernel_span(&self, t: &TensorElement) -> bool {
        let basis: Vec<Vec<Rational>> = self.kernel_basis.iter().map(|k| k.coords().to_vec()).collect();
        linalg::in_span(&basis, t.coords())
    }
}

pub fn solve_quotient(a: &Element, b: &Element) -> Result<QuotientSet> {
    check_same(a.algebra(), b.algebra())?;
    let action = ActionMatrix::new(a);
    let algebra = a.algebra();
    let echelon = action.matrix.echelon();
    let kernel_basis = echelon
        .kernel_basis()
        .into_iter()
        .map(|v| TensorElement::from_coords(algebra, v))
        .collect();
    let particular = action
        .matrix
        .solve(b.coords())
        .map(|v| TensorElement::from_coords(algebra, v));
    Ok(QuotientSet {
        a: a.clone(),
        b: b.clone(),
        particular,
        kernel_basis,
    })
}

/// Some particular quotient of `b` by `a`, skipping the kernel computation.
pub fn find_quotient(a: &Element, b: &Element) -> Result<Option<TensorElement>> {
    check_same(a.algebra(), b.algebra())?;
    let action = ActionMatrix::new(a);
    Ok(action
        .matrix
        .solve(b.coords())
        .map(|v| TensorElement::from_coords(a.algebra(), v)))
}

pub fn divides(a: &Element, b: &Element) -> Result<bool> {
    Ok(find_quotient(a, b)?.is_some())
}

pub fn is_quotient(t: &TensorElement, a: &Element, b: &Element) -> Result<bool> {
    check_same(a.algebra(), b.algebra())?;
    Ok(t.apply(a)? == *b)
}

/// The two closed-form quotients `(b a⁻¹) ⊗ 1` and `1 ⊗ (a⁻¹ b)`.
pub fn division_algebra_quotients(
    a: &Element,
    b: &Element,
) -> Result<(TensorElement, TensorElement)> {
    check_same(a.algebra(), b.algebra())?;
    let inverse = a.invert().ok_or(Error::NotInvertible)?;
    let unit = Element::unit(a.algebra());
    let left = TensorElement::simple(&b.mul(&inverse)?, &unit)?;
    let right = TensorElement::simple(&unit, &inverse.mul(b)?)?;
    Ok((left, right))
}

/// `t·c + (1 − t)·d`.
pub fn convex_combination(
    c: &TensorElement,
    d: &TensorElement,
    t: &Rational,
) -> Result<TensorElement> {
    let s = Rational::one() - t;
    c.scale(t).add(&d.scale(&s))
}
