//! Exact division in finite-dimensional associative algebras, where a
//! quotient is an element of `A ⊗ A` acting by `(c ⊗ d) ∘ a = c·a·d`.
//!
//! Everything is computed over the rationals with exact arithmetic:
//!
//! * [`algebra`]: algebras from structure constants, elements, inverses.
//! * [`tensor`]: `A ⊗ A` in canonical coordinates, its action and composition product.
//! * [`solver`]: the affine set of quotients of `b` by `a`.
//! * [`remainder`]: division with remainder, canonical remainders, quotient algebras.
//! * [`poly`]: polynomials with a central indeterminate and tensor-coefficient long division.
//! * [`euclid`]: common factors and a Euclidean algorithm for descending remainders.
//! * [`parse`]: the text syntax for elements, tensors and polynomials.

pub mod algebra;
pub mod error;
pub mod euclid;
pub mod linalg;
pub mod parse;
pub mod poly;
mod print;
pub mod remainder;
pub mod scalar;
pub mod solver;
pub mod tensor;

pub use algebra::{builtin, Algebra, Element};
pub use error::{Error, Result};
pub use poly::{Polynomial, TensorPolynomial};
pub use remainder::{QuotientAlgebra, RemainderStrategy};
pub use scalar::{Integer, Rational};
pub use solver::QuotientSet;
pub use tensor::TensorElement;
