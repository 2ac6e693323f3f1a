//! Finite-dimensional associative algebras over the rationals, given by
//! structure constants, and their elements.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{self, Rational};

/// An associative unital algebra with basis `e_0..e_{n-1}` and
/// `e_i * e_j = sum_k C[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    dim: usize,
    /// Dense table, index `(i * dim + j) * dim + k`.
    constants: Vec<Rational>,
    /// Nonzero entries of `e_i * e_j`, index `i * dim + j`.
    products: Vec<Vec<(usize, Rational)>>,
    unit: Vec<Rational>,
    labels: Vec<String>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

fn sparse_products(dim: usize, constants: &[Rational]) -> Vec<Vec<(usize, Rational)>> {
    (0..dim * dim)
        .map(|ij| {
            (0..dim)
                .filter_map(|k| {
                    let c = &constants[ij * dim + k];
                    (!c.is_zero()).then(|| (k, c.clone()))
                })
                .collect()
        })
        .collect()
}

fn table_mul(
    dim: usize,
    products: &[Vec<(usize, Rational)>],
    x: &[Rational],
    y: &[Rational],
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let xy = xi * yj;
            for (k, c) in &products[i * dim + j] {
                out[*k] += &xy * c;
            }
        }
    }
    out
}

fn basis_vector(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

/// Checks associativity on all basis triples and the two unit laws on all
/// basis elements. Works for any `dim`, including the zero algebra.
pub fn check_structure(dim: usize, constants: &[Rational], unit: &[Rational]) -> Result<()> {
    if constants.len() != dim * dim * dim {
        return Err(Error::DimensionMismatch {
            expected: dim * dim * dim,
            actual: constants.len(),
        });
    }
    if unit.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: unit.len(),
        });
    }
    let products = sparse_products(dim, constants);
    let product = |i: usize, j: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (k, c) in &products[i * dim + j] {
            v[*k] = c.clone();
        }
        v
    };
    for i in 0..dim {
        for j in 0..dim {
            let ij = product(i, j);
            for k in 0..dim {
                let left = table_mul(dim, &products, &ij, &basis_vector(dim, k));
                let jk = product(j, k);
                let right = table_mul(dim, &products, &basis_vector(dim, i), &jk);
                if left != right {
                    return Err(Error::NotAssociative(i, j, k));
                }
            }
        }
    }
    for i in 0..dim {
        let e = basis_vector(dim, i);
        if table_mul(dim, &products, unit, &e) != e || table_mul(dim, &products, &e, unit) != e {
            return Err(Error::UnitLaw(i));
        }
    }
    Ok(())
}

impl Algebra {
    /// Builds and validates an algebra from a cubic table `constants[i][j][k]`.
    pub fn new(
        name: impl Into<String>,
        constants: Vec<Vec<Vec<Rational>>>,
        unit: Vec<Rational>,
        labels: Vec<String>,
    ) -> Result<Arc<Algebra>> {
        let dim = constants.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for plane in constants {
            if plane.len() != dim {
                return Err(Error::InvalidAlgebra("structure constants must be n x n x n".into()));
            }
            for row in plane {
                if row.len() != dim {
                    return Err(Error::InvalidAlgebra(
                        "structure constants must be n x n x n".into(),
                    ));
                }
                flat.extend(row);
            }
        }
        Self::from_flat(name.into(), dim, flat, unit, labels)
    }

    pub(crate) fn from_flat(
        name: String,
        dim: usize,
        constants: Vec<Rational>,
        unit: Vec<Rational>,
        labels: Vec<String>,
    ) -> Result<Arc<Algebra>> {
        if labels.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "expected {dim} basis labels, got {}",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            let valid = label == "1"
                || (label.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                    && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'));
            if !valid || label == "x" || labels[..i].contains(label) {
                return Err(Error::InvalidAlgebra(format!("bad basis label `{label}`")));
            }
        }
        check_structure(dim, &constants, &unit)?;
        let products = sparse_products(dim, &constants);
        Ok(Arc::new(Algebra {
            name,
            dim,
            constants,
            products,
            unit,
            labels,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit_coords(&self) -> &[Rational] {
        &self.unit
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Nonzero `(k, C[i][j][k])` entries of `e_i * e_j`.
    pub(crate) fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    pub(crate) fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        table_mul(self.dim, &self.products, x, y)
    }

    pub fn to_file(&self) -> AlgebraFile {
        let n = self.dim;
        AlgebraFile {
            name: self.name.clone(),
            dim: n,
            unit: self.unit.iter().map(|x| RationalText::Text(x.to_string())).collect(),
            labels: self.labels.clone(),
            constants: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n)
                                .map(|k| RationalText::Text(self.constant(i, j, k).to_string()))
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serializes")
    }

    pub fn from_json(text: &str) -> Result<Arc<Algebra>> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidAlgebra(e.to_string()))?;
        file.build()
    }
}

/// A rational entry in an algebra file: either `"p/q"` or a bare integer.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Text(String),
    Int(i64),
}

impl RationalText {
    fn value(&self) -> Result<Rational> {
        match self {
            RationalText::Text(s) => scalar::parse_rational(s),
            RationalText::Int(v) => Ok(scalar::int(*v)),
        }
    }
}

/// On-disk JSON form of an algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub unit: Vec<RationalText>,
    pub labels: Vec<String>,
    pub constants: Vec<Vec<Vec<RationalText>>>,
}

impl AlgebraFile {
    pub fn build(&self) -> Result<Arc<Algebra>> {
        if self.constants.len() != self.dim {
            return Err(Error::InvalidAlgebra(format!(
                "`dim` is {} but the table has {} planes",
                self.dim,
                self.constants.len()
            )));
        }
        let constants = self
            .constants
            .iter()
            .map(|plane| {
                plane
                    .iter()
                    .map(|row| row.iter().map(RationalText::value).collect())
                    .collect()
            })
            .collect::<Result<Vec<Vec<Vec<Rational>>>>>()?;
        let unit = self.unit.iter().map(RationalText::value).collect::<Result<_>>()?;
        Algebra::new(self.name.clone(), constants, unit, self.labels.clone())
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["quaternions", "matrix2", "dual", "complex", "ground"];

fn table(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); dim * dim * dim];
    for &(i, j, k, v) in entries {
        c[(i * dim + j) * dim + k] = scalar::int(v);
    }
    c
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// One of the built-in algebras: `quaternions`, `matrix2`, `dual`, `complex`, `ground`.
pub fn builtin(name: &str) -> Result<Arc<Algebra>> {
    let one = scalar::int(1);
    let zero = Rational::zero;
    match name {
        "quaternions" => {
            // basis 1, i, j, k
            let signs = [
                (1, 1, 0, -1),
                (2, 2, 0, -1),
                (3, 3, 0, -1),
                (1, 2, 3, 1),
                (2, 1, 3, -1),
                (2, 3, 1, 1),
                (3, 2, 1, -1),
                (3, 1, 2, 1),
                (1, 3, 2, -1),
            ];
            let mut entries: Vec<(usize, usize, usize, i64)> = signs.to_vec();
            for b in 0..4 {
                entries.push((0, b, b, 1));
                if b != 0 {
                    entries.push((b, 0, b, 1));
                }
            }
            Algebra::from_flat(
                name.into(),
                4,
                table(4, &entries),
                vec![one, zero(), zero(), zero()],
                labels(&["1", "i", "j", "k"]),
            )
        }
        "matrix2" => {
            // E_ab has index 2a + b; E_ab * E_cd = [b == c] E_ad
            let mut entries = Vec::new();
            for a in 0..2 {
                for b in 0..2 {
                    for d in 0..2 {
                        entries.push((2 * a + b, 2 * b + d, 2 * a + d, 1));
                    }
                }
            }
            Algebra::from_flat(
                name.into(),
                4,
                table(4, &entries),
                vec![one.clone(), zero(), zero(), one],
                labels(&["E11", "E12", "E21", "E22"]),
            )
        }
        "dual" => Algebra::from_flat(
            name.into(),
            2,
            table(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            vec![one, zero()],
            labels(&["1", "eps"]),
        ),
        "complex" => Algebra::from_flat(
            name.into(),
            2,
            table(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, -1)]),
            vec![one, zero()],
            labels(&["1", "i"]),
        ),
        "ground" => Algebra::from_flat(
            name.into(),
            1,
            table(1, &[(0, 0, 0, 1)]),
            vec![one],
            labels(&["1"]),
        ),
        other => Err(Error::UnknownAlgebra(other.to_string())),
    }
}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn check_same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<()> {
    if same_algebra(a, b) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch {
            left: a.name.clone(),
            right: b.name.clone(),
        })
    }
}

/// An element of an algebra, stored as its coordinate vector.
#[derive(Clone)]
pub struct Element {
    algebra: Arc<Algebra>,
    coords: Vec<Rational>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coords == other.coords
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({})", self.algebra.name, self)
    }
}

impl Element {
    pub fn new(algebra: &Arc<Algebra>, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != algebra.dim {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim,
                actual: coords.len(),
            });
        }
        Ok(Element {
            algebra: Arc::clone(algebra),
            coords,
        })
    }

    pub(crate) fn from_coords(algebra: &Arc<Algebra>, coords: Vec<Rational>) -> Self {
        debug_assert_eq!(coords.len(), algebra.dim);
        Element {
            algebra: Arc::clone(algebra),
            coords,
        }
    }

    pub fn from_ints(algebra: &Arc<Algebra>, coords: &[i64]) -> Result<Self> {
        Self::new(algebra, coords.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Self::from_coords(algebra, vec![Rational::zero(); algebra.dim])
    }

    pub fn unit(algebra: &Arc<Algebra>) -> Self {
        Self::from_coords(algebra, algebra.unit.clone())
    }

    pub fn basis(algebra: &Arc<Algebra>, i: usize) -> Self {
        Self::from_coords(algebra, basis_vector(algebra.dim, i))
    }

    pub fn scalar(algebra: &Arc<Algebra>, r: &Rational) -> Self {
        Self::unit(algebra).scale(r)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        check_same(&self.algebra, &other.algebra)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self::from_coords(&self.algebra, coords))
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        check_same(&self.algebra, &other.algebra)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Self::from_coords(&self.algebra, coords))
    }

    pub fn neg(&self) -> Element {
        Self::from_coords(&self.algebra, self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, r: &Rational) -> Element {
        Self::from_coords(&self.algebra, self.coords.iter().map(|a| a * r).collect())
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        check_same(&self.algebra, &other.algebra)?;
        Ok(Self::from_coords(
            &self.algebra,
            self.algebra.mul_coords(&self.coords, &other.coords),
        ))
    }

    /// Matrix of `x -> self * x`; column `j` holds `self * e_j`.
    pub fn left_regular(&self) -> Matrix {
        let n = self.algebra.dim;
        let columns: Vec<Vec<Rational>> = (0..n)
            .map(|j| self.algebra.mul_coords(&self.coords, &basis_vector(n, j)))
            .collect();
        Matrix::from_columns(n, &columns)
    }

    /// Matrix of `x -> x * self`; column `j` holds `e_j * self`.
    pub fn right_regular(&self) -> Matrix {
        let n = self.algebra.dim;
        let columns: Vec<Vec<Rational>> = (0..n)
            .map(|j| self.algebra.mul_coords(&basis_vector(n, j), &self.coords))
            .collect();
        Matrix::from_columns(n, &columns)
    }

    /// The two-sided inverse, or `None` when the left-regular matrix is singular.
    pub fn invert(&self) -> Option<Element> {
        let inverse = self.left_regular().solve(&self.algebra.unit)?;
        let candidate = Self::from_coords(&self.algebra, inverse);
        // a finite-dimensional algebra has no one-sided units, but confirm anyway
        let unit = Self::unit(&self.algebra);
        (candidate.mul(self).ok()? == unit).then_some(candidate)
    }

    /// True when some tensor `c` satisfies `c ∘ self = 1`.
    pub fn is_unit_divisor(&self) -> bool {
        crate::solver::divides(self, &Element::unit(&self.algebra)).unwrap_or(false)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(scalar::is_integral)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn q(c: &[i64]) -> Element {
        Element::from_ints(&builtin("quaternions").unwrap(), c).unwrap()
    }

    /// Hamilton product written out by hand.
    fn hamilton(a: &[i64; 4], b: &[i64; 4]) -> [i64; 4] {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    }

    #[test]
    fn quaternion_table_matches_hamilton_product() {
        let samples = [[1, 2, -3, 4], [0, 1, 0, 0], [5, -1, 2, 2], [0, 0, 0, 1], [-2, 3, 1, -1]];
        for a in &samples {
            for b in &samples {
                let expected = hamilton(a, b);
                assert_eq!(q(a).mul(&q(b)).unwrap(), q(&expected));
            }
        }
        let (i, j, k) = (q(&[0, 1, 0, 0]), q(&[0, 0, 1, 0]), q(&[0, 0, 0, 1]));
        assert_eq!(i.mul(&j).unwrap(), k);
        assert_eq!(j.mul(&k).unwrap(), i);
        assert_eq!(k.mul(&i).unwrap(), j);
        for x in [&i, &j, &k] {
            assert_eq!(x.mul(x).unwrap(), q(&[-1, 0, 0, 0]));
        }
    }

    #[test]
    fn matrix_units_multiply_by_index_rule() {
        let m = builtin("matrix2").unwrap();
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                let lhs = Element::basis(&m, 2 * a + b).mul(&Element::basis(&m, 2 * c + d)).unwrap();
                let rhs = if b == c { Element::basis(&m, 2 * a + d) } else { Element::zero(&m) };
                assert_eq!(lhs, rhs);
            }
        }
        let e21 = Element::basis(&m, 2);
        let e12 = Element::basis(&m, 1);
        assert_eq!(e21.mul(&e12).unwrap(), Element::basis(&m, 3));
        assert!(Element::basis(&m, 0).mul(&Element::basis(&m, 3)).unwrap().is_zero());
    }

    #[test]
    fn dual_and_ground() {
        let d = builtin("dual").unwrap();
        let eps = Element::basis(&d, 1);
        assert!(eps.mul(&eps).unwrap().is_zero());
        let g = builtin("ground").unwrap();
        assert_eq!(g.dim(), 1);
        let c = builtin("complex").unwrap();
        let i = Element::basis(&c, 1);
        assert_eq!(i.mul(&i).unwrap(), Element::scalar(&c, &int(-1)));
        assert!(matches!(builtin("octonions"), Err(Error::UnknownAlgebra(_))));
    }

    #[test]
    fn construction_rejects_bad_tables() {
        // e1 * e1 = e0 + e1 with e0 the unit is fine; break it by making e1*e1 = e0 but e1 * e0 = 0
        let z = Rational::zero;
        let one = || int(1);
        let ground = Algebra::new("g", vec![vec![vec![one()]]], vec![one()], labels(&["1"]));
        assert!(ground.is_ok());

        // basis u, e with u*u = u, u*e = e*u = e, e*e = u + e  (associative, fine)
        let ok = Algebra::new(
            "ok",
            vec![vec![vec![one(), z()], vec![z(), one()]], vec![vec![z(), one()], vec![one(), one()]]],
            vec![one(), z()],
            labels(&["1", "e"]),
        );
        assert!(ok.is_ok());

        // basis a, b with a*a = b, every other product a; then a*(a*a) = a*b = a but (a*a)*a = b*a = a,
        // and b*(a*a)= b*b = a vs (b*a)*a = a*a = b
        let bad = Algebra::new(
            "bad",
            vec![vec![vec![z(), one()], vec![one(), z()]], vec![vec![one(), z()], vec![one(), z()]]],
            vec![one(), z()],
            labels(&["a", "b"]),
        );
        assert!(matches!(bad, Err(Error::NotAssociative(..))));

        let no_unit = Algebra::new(
            "nounit",
            vec![vec![vec![one(), z()], vec![z(), z()]], vec![vec![z(), z()], vec![z(), z()]]],
            vec![one(), z()],
            labels(&["a", "b"]),
        );
        assert!(matches!(no_unit, Err(Error::UnitLaw(1))));
    }

    #[test]
    fn regular_representations() {
        let h = builtin("quaternions").unwrap();
        let (i, j, k) = (q(&[0, 1, 0, 0]), q(&[0, 0, 1, 0]), q(&[0, 0, 0, 1]));
        assert_eq!(Element::unit(&h).left_regular(), Matrix::identity(4));
        assert_eq!(i.left_regular().mul_vec(j.coords()), k.coords());
        assert_eq!(i.right_regular().mul_vec(j.coords()), k.neg().coords());
    }

    #[test]
    fn inversion() {
        let i = q(&[0, 1, 0, 0]);
        assert_eq!(i.invert().unwrap(), i.neg());
        let h = builtin("quaternions").unwrap();
        assert_eq!(Element::unit(&h).invert().unwrap(), Element::unit(&h));
        let m = builtin("matrix2").unwrap();
        assert_eq!(Element::basis(&m, 0).left_regular().rank(), 2);
        assert!(Element::basis(&m, 0).invert().is_none());
        assert!(Element::zero(&h).invert().is_none());
    }

    #[test]
    fn unit_divisors() {
        let h = builtin("quaternions").unwrap();
        assert!(q(&[0, 1, 0, 0]).is_unit_divisor());
        assert!(!Element::zero(&h).is_unit_divisor());
        let m = builtin("matrix2").unwrap();
        assert!(Element::basis(&m, 0).is_unit_divisor());
        let d = builtin("dual").unwrap();
        assert!(!Element::basis(&d, 1).is_unit_divisor());
    }

    #[test]
    fn mixing_algebras_is_an_error() {
        let a = Element::unit(&builtin("dual").unwrap());
        let b = Element::unit(&builtin("complex").unwrap());
        assert!(matches!(a.add(&b), Err(Error::AlgebraMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(Error::AlgebraMismatch { .. })));
        assert!(Element::new(&builtin("dual").unwrap(), vec![int(1)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        for name in BUILTIN_NAMES {
            let alg = builtin(name).unwrap();
            let back = Algebra::from_json(&alg.to_json()).unwrap();
            assert_eq!(*back, *alg);
        }
        let text = r#"{"name":"g","dim":1,"unit":[1],"labels":["1"],"constants":[[["2/2"]]]}"#;
        assert_eq!(Algebra::from_json(text).unwrap().dim(), 1);
        assert!(Algebra::from_json(r#"{"name":"g","dim":2,"unit":[1],"labels":["1"],"constants":[[["1"]]]}"#).is_err());
    }
}
