//! Elements of `A ⊗ A` acting on `A` by `(c ⊗ d) ∘ a = c·a·d`.
//!
//! Tensors are kept in canonical coordinates over the basis `e_i ⊗ e_j`. The
//! coordinate of `e_i ⊗ e_j` is stored at position `j * n + i`, so the
//! right factor is the major index and the tensors `e_i ⊗ 1` come first when
//! the unit is `e_0`. Linear solves scan columns in this order, which makes
//! left-multiplier quotients `c ⊗ 1` the preferred particular solutions.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{check_same, same_algebra, Algebra, Element};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::Rational;

#[derive(Clone)]
pub struct TensorElement {
    algebra: Arc<Algebra>,
    coords: Vec<Rational>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coords == other.coords
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor[{}]({})", self.algebra.name(), self)
    }
}

#[inline]
pub(crate) fn pair_index(n: usize, left: usize, right: usize) -> usize {
    right * n + left
}

/// Inverse of [`pair_index`].
#[inline]
pub(crate) fn index_pair(n: usize, index: usize) -> (usize, usize) {
    (index % n, index / n)
}

fn basis(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

impl TensorElement {
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        let n = algebra.dim();
        TensorElement {
            algebra: Arc::clone(algebra),
            coords: vec![Rational::zero(); n * n],
        }
    }

    /// `1 ⊗ 1`, the identity of the composition product.
    pub fn identity(algebra: &Arc<Algebra>) -> Self {
        let unit = Element::unit(algebra);
        Self::simple(&unit, &unit).expect("same algebra")
    }

    pub(crate) fn from_coords(algebra: &Arc<Algebra>, coords: Vec<Rational>) -> Self {
        debug_assert_eq!(coords.len(), algebra.dim() * algebra.dim());
        TensorElement {
            algebra: Arc::clone(algebra),
            coords,
        }
    }

    pub fn basis_pair(algebra: &Arc<Algebra>, left: usize, right: usize) -> Self {
        let n = algebra.dim();
        let mut t = Self::zero(algebra);
        t.coords[pair_index(n, left, right)] = Rational::one();
        t
    }

    pub fn simple(left: &Element, right: &Element) -> Result<Self> {
        check_same(left.algebra(), right.algebra())?;
        let algebra = left.algebra();
        let n = algebra.dim();
        let mut coords = vec![Rational::zero(); n * n];
        for (i, x) in left.coords().iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in right.coords().iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                coords[pair_index(n, i, j)] = x * y;
            }
        }
        Ok(Self::from_coords(algebra, coords))
    }

    /// Sum of simple tensors. The result is canonical, so two pair lists
    /// describing the same tensor give equal values; an empty list is rejected
    /// because it carries no algebra, use [`TensorElement::zero`] instead.
    pub fn from_pairs(algebra: &Arc<Algebra>, pairs: &[(Element, Element)]) -> Result<Self> {
        let mut acc = Self::zero(algebra);
        for (c, d) in pairs {
            check_same(algebra, c.algebra())?;
            acc = acc.add(&Self::simple(c, d)?)?;
        }
        Ok(acc)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, left: usize, right: usize) -> &Rational {
        &self.coords[pair_index(self.algebra.dim(), left, right)]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates as `(left, right, value)` in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        let n = self.algebra.dim();
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(idx, x)| {
                let (l, r) = index_pair(n, idx);
                (l, r, x)
            })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.algebra, &other.algebra)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self::from_coords(&self.algebra, coords))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.algebra, &other.algebra)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Self::from_coords(&self.algebra, coords))
    }

    pub fn neg(&self) -> Self {
        Self::from_coords(&self.algebra, self.coords.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_coords(&self.algebra, self.coords.iter().map(|x| x * r).collect())
    }

    /// `Σ t^{ij} e_i · a · e_j`.
    pub fn apply(&self, a: &Element) -> Result<Element> {
        check_same(&self.algebra, a.algebra())?;
        let n = self.algebra.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if (0..n).all(|j| self.coord(i, j).is_zero()) {
                continue;
            }
            let left = self.algebra.mul_coords(&basis(n, i), a.coords());
            for j in 0..n {
                let t = self.coord(i, j);
                if t.is_zero() {
                    continue;
                }
                let term = self.algebra.mul_coords(&left, &basis(n, j));
                for (o, x) in out.iter_mut().zip(term) {
                    if !x.is_zero() {
                        *o += t * x;
                    }
                }
            }
        }
        Ok(Element::from_coords(&self.algebra, out))
    }

    /// The tensor acting as `x -> self ∘ (other ∘ x)`, i.e. the product
    /// `(c ⊗ d)(c' ⊗ d') = cc' ⊗ d'd`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same(&self.algebra, other.algebra())?;
        let n = self.algebra.dim();
        let mut out = vec![Rational::zero(); n * n];
        for (i, j, t) in self.terms() {
            for (a, b, s) in other.terms() {
                let ts = t * s;
                for (l, x) in self.algebra.basis_product(i, a) {
                    let tsx = &ts * x;
                    for (r, y) in self.algebra.basis_product(b, j) {
                        out[pair_index(n, *l, *r)] += &tsx * y;
                    }
                }
            }
        }
        Ok(Self::from_coords(&self.algebra, out))
    }

    /// Matrix of `s -> self · s` in the composition algebra, columns in storage order.
    pub fn left_regular(&self) -> Matrix {
        let n = self.algebra.dim();
        let columns: Vec<Vec<Rational>> = (0..n * n)
            .map(|idx| {
                let (l, r) = index_pair(n, idx);
                self.compose(&Self::basis_pair(&self.algebra, l, r))
                    .expect("same algebra")
                    .coords
            })
            .collect();
        Matrix::from_columns(n * n, &columns)
    }

    /// Inverse under the composition product, when it exists.
    pub fn unit_inverse(&self) -> Option<Self> {
        let identity = Self::identity(&self.algebra);
        let solution = self.left_regular().solve(&identity.coords)?;
        let inverse = Self::from_coords(&self.algebra, solution);
        (inverse.compose(self).ok()? == identity).then_some(inverse)
    }

    pub fn is_unit_tensor(&self) -> bool {
        self.left_regular().rank() == self.coords.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;
    use crate::scalar::{frac, int};
    use proptest::prelude::*;

    fn quats() -> Arc<Algebra> {
        builtin("quaternions").unwrap()
    }

    fn q(c: &[i64]) -> Element {
        Element::from_ints(&quats(), c).unwrap()
    }

    fn simple(c: &Element, d: &Element) -> TensorElement {
        TensorElement::simple(c, d).unwrap()
    }

    #[test]
    fn from_pairs_is_canonical() {
        let h = quats();
        let c = q(&[1, 2, 3, 4]);
        let d = q(&[0, -1, 5, 2]);
        let zero = Element::zero(&h);
        let t = TensorElement::from_pairs(&h, &[(c.clone(), zero.clone()), (zero, d)]).unwrap();
        assert!(t.is_zero());
        assert_eq!(t, TensorElement::zero(&h));

        let unit = Element::unit(&h);
        let id = TensorElement::from_pairs(&h, &[(unit.clone(), unit)]).unwrap();
        assert_eq!(id, TensorElement::identity(&h));
        assert_eq!(*id.coord(0, 0), int(1));
        assert_eq!(id.terms().count(), 1);

        let (i, j) = (q(&[0, 1, 0, 0]), q(&[0, 0, 1, 0]));
        let twice = TensorElement::from_pairs(&h, &[(i.clone(), j.clone()), (i.clone(), j.clone())]).unwrap();
        assert_eq!(twice, simple(&i, &j).scale(&int(2)));
    }

    #[test]
    fn action_examples() {
        let h = quats();
        let (i, j, k) = (q(&[0, 1, 0, 0]), q(&[0, 0, 1, 0]), q(&[0, 0, 0, 1]));
        let one = Element::unit(&h);
        assert_eq!(simple(&k, &one).apply(&i).unwrap(), j);
        let a = q(&[3, -1, 4, 1]);
        assert_eq!(TensorElement::identity(&h).apply(&a).unwrap(), a);
        assert!(TensorElement::zero(&h).apply(&a).unwrap().is_zero());
    }

    #[test]
    fn composition_examples() {
        let h = quats();
        let one = Element::unit(&h);
        let (i, j) = (q(&[0, 1, 0, 0]), q(&[0, 0, 1, 0]));
        let s = simple(&q(&[1, 2, 0, -1]), &q(&[0, 3, 1, 1]));
        assert_eq!(TensorElement::identity(&h).compose(&s).unwrap(), s);
        assert_eq!(s.compose(&TensorElement::identity(&h)).unwrap(), s);

        let c = q(&[1, 1, 0, 2]);
        let c2 = q(&[0, 2, -1, 1]);
        assert_eq!(
            simple(&c, &one).compose(&simple(&c2, &one)).unwrap(),
            simple(&c.mul(&c2).unwrap(), &one)
        );

        // right factors compose in reverse
        let composed = simple(&one, &i).compose(&simple(&one, &j)).unwrap();
        assert_eq!(composed, simple(&one, &j.mul(&i).unwrap()));
        let a = q(&[2, -1, 3, 5]);
        let direct = a.mul(&j).unwrap().mul(&i).unwrap();
        assert_eq!(composed.apply(&a).unwrap(), direct);
    }

    #[test]
    fn linear_structure() {
        let h = quats();
        let c = simple(&q(&[1, 0, 2, 0]), &q(&[0, 1, 1, 0]));
        assert_eq!(c.add(&TensorElement::zero(&h)).unwrap(), c);
        let half = c.scale(&frac(1, 2));
        assert_eq!(half.add(&half).unwrap(), c);
        assert!(c.scale(&int(0)).is_zero());
    }

    #[test]
    fn unit_tensors() {
        let h = quats();
        let one = Element::unit(&h);
        let k = q(&[0, 0, 0, 1]);
        assert!(TensorElement::identity(&h).is_unit_tensor());
        assert!(!TensorElement::zero(&h).is_unit_tensor());
        assert!(TensorElement::zero(&h).unit_inverse().is_none());
        let t = simple(&k, &one);
        assert!(t.is_unit_tensor());
        assert_eq!(t.unit_inverse().unwrap(), simple(&k.neg(), &one));

        // 1 ⊗ eps is nilpotent in the dual numbers
        let d = builtin("dual").unwrap();
        let eps = Element::basis(&d, 1);
        assert!(!simple(&Element::unit(&d), &eps).is_unit_tensor());
    }

    #[test]
    fn mismatched_algebras() {
        let d = builtin("dual").unwrap();
        let c = builtin("complex").unwrap();
        assert!(TensorElement::simple(&Element::unit(&d), &Element::unit(&c)).is_err());
        assert!(TensorElement::identity(&d).apply(&Element::unit(&c)).is_err());
        assert!(TensorElement::identity(&d)
            .compose(&TensorElement::identity(&c))
            .is_err());
    }

    fn quat() -> impl Strategy<Value = Element> {
        proptest::collection::vec(-4i64..5, 4).prop_map(|c| q(&c))
    }

    fn tensor() -> impl Strategy<Value = TensorElement> {
        proptest::collection::vec(-3i64..4, 16)
            .prop_map(|c| TensorElement::from_coords(&quats(), c.into_iter().map(int).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn apply_is_bilinear(t in tensor(), s in tensor(), a in quat(), b in quat(), r in -3i64..4) {
            let r = int(r);
            prop_assert_eq!(t.add(&s).unwrap().apply(&a).unwrap(),
                t.apply(&a).unwrap().add(&s.apply(&a).unwrap()).unwrap());
            prop_assert_eq!(t.apply(&a.add(&b).unwrap()).unwrap(),
                t.apply(&a).unwrap().add(&t.apply(&b).unwrap()).unwrap());
            prop_assert_eq!(t.scale(&r).apply(&a).unwrap(), t.apply(&a).unwrap().scale(&r));
        }

        #[test]
        fn compose_is_associative_and_acts(t in tensor(), s in tensor(), u in tensor(), a in quat()) {
            let ts = t.compose(&s).unwrap();
            prop_assert_eq!(ts.compose(&u).unwrap(), t.compose(&s.compose(&u).unwrap()).unwrap());
            prop_assert_eq!(ts.apply(&a).unwrap(), t.apply(&s.apply(&a).unwrap()).unwrap());
        }

        #[test]
        fn pairs_are_bilinear(c in quat(), c2 in quat(), d in quat(), r in -3i64..4) {
            let h = quats();
            let r = int(r);
            let lhs = TensorElement::from_pairs(&h, &[(c.add(&c2).unwrap(), d.clone())]).unwrap();
            let rhs = TensorElement::from_pairs(&h, &[(c.clone(), d.clone()), (c2.clone(), d.clone())]).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = TensorElement::from_pairs(&h, &[(c.scale(&r), d.clone())]).unwrap();
            let rhs = TensorElement::from_pairs(&h, &[(c.clone(), d.scale(&r))]).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn zero_pairs_vanish(c in quat(), d in quat()) {
            let h = quats();
            let z = Element::zero(&h);
            let t = TensorElement::from_pairs(&h, &[(c, z.clone()), (z, d)]).unwrap();
            prop_assert!(t.coords().iter().all(Zero::is_zero));
        }
    }
}
