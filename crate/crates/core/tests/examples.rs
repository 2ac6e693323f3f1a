//! Worked examples through the public API, written with the expression parser.

use std::sync::Arc;

use ncdiv_core::euclid::{
    euclidean_gcd, hcf_certificate, is_common_factor, relatively_prime, DivisionPolynomials, Integers,
};
use ncdiv_core::parse::{parse_element, parse_poly, parse_tensor};
use ncdiv_core::poly::{is_unit_poly, poly_degree_law_check, poly_divmod, verify_prime_degree1, PrimeVerdict};
use ncdiv_core::remainder::{
    canonical_quotient, canonical_remainder, chain_remainder_check, ideal_basis, quaternion_norm, remainder_for,
    same_coset, QuotientAlgebra,
};
use ncdiv_core::scalar::{frac, int};
use ncdiv_core::solver::{convex_combination, division_algebra_quotients, divides, is_quotient, solve_quotient};
use ncdiv_core::{builtin, Algebra, Element, Error, RemainderStrategy, TensorElement};

fn h() -> Arc<Algebra> {
    builtin("quaternions").unwrap()
}

fn e(a: &Arc<Algebra>, text: &str) -> Element {
    parse_element(a, text).unwrap()
}

fn t(a: &Arc<Algebra>, text: &str) -> TensorElement {
    parse_tensor(a, text).unwrap()
}

#[test]
fn builtin_products() {
    let h = h();
    assert_eq!(e(&h, "i").mul(&e(&h, "j")).unwrap(), e(&h, "k"));
    assert_eq!(e(&h, "(1 + i)(1 - i)"), e(&h, "2"));
    let m = builtin("matrix2").unwrap();
    assert_eq!(e(&m, "E21 E12"), e(&m, "E22"));
    assert!(e(&m, "E11 E22").is_zero());
    let d = builtin("dual").unwrap();
    assert!(e(&d, "eps eps").is_zero());
}

#[test]
fn inverses_and_unit_divisors() {
    let h = h();
    assert_eq!(e(&h, "i").invert().unwrap(), e(&h, "-i"));
    let m = builtin("matrix2").unwrap();
    let e11 = e(&m, "E11");
    assert!(e11.invert().is_none());
    assert!(e11.is_unit_divisor());
    let witness = t(&m, "E11 (x) E11 + E21 (x) E12");
    assert_eq!(witness.apply(&e11).unwrap(), Element::unit(&m));
    assert!(!Element::zero(&m).is_unit_divisor());
}

#[test]
fn tensors() {
    let h = h();
    let two = t(&h, "k (x) 1 + 1 (x) -k");
    assert_eq!(two.terms().count(), 2);
    assert_eq!(t(&h, "k (x) 1").apply(&e(&h, "i")).unwrap(), e(&h, "j"));
    let d = t(&h, "1 (x) i");
    let d2 = t(&h, "1 (x) j");
    assert_eq!(d.compose(&d2).unwrap(), t(&h, "1 (x) (j i)"));
    let k1 = t(&h, "k (x) 1");
    assert!(k1.is_unit_tensor());
    assert_eq!(k1.unit_inverse().unwrap(), t(&h, "-k (x) 1"));
}

#[test]
fn quotient_sets() {
    let h = h();
    let (i, j) = (e(&h, "i"), e(&h, "j"));
    let set = solve_quotient(&i, &j).unwrap();
    assert_eq!(set.particular, Some(t(&h, "k (x) 1")));
    assert_eq!(set.kernel_dim(), 12);

    let (left, right) = division_algebra_quotients(&i, &j).unwrap();
    assert_eq!(left, t(&h, "k (x) 1"));
    assert_eq!(right, t(&h, "1 (x) -k"));
    let half = convex_combination(&left, &right, &frac(1, 2)).unwrap();
    assert!(is_quotient(&half, &i, &j).unwrap());

    let m = builtin("matrix2").unwrap();
    assert!(is_quotient(&t(&m, "E21 (x) E12"), &e(&m, "E11"), &e(&m, "E22")).unwrap());
    let d = builtin("dual").unwrap();
    assert!(!divides(&e(&d, "eps"), &e(&d, "1")).unwrap());
    assert!(!divides(&Element::zero(&h), &j).unwrap());
}

#[test]
fn remainders() {
    let h = h();
    let f = remainder_for(&TensorElement::identity(&h), &e(&h, "i"), &e(&h, "j")).unwrap();
    assert_eq!(f, e(&h, "j - i"));

    let d = builtin("dual").unwrap();
    assert_eq!(ideal_basis(&e(&d, "eps")).dim(), 1);
    assert_eq!(ideal_basis(&e(&builtin("matrix2").unwrap(), "E11")).dim(), 4);
    let r = canonical_remainder(&e(&d, "3 + 5eps"), &e(&d, "eps"), RemainderStrategy::Echelon).unwrap();
    assert_eq!(r, e(&d, "3"));
    let c = canonical_quotient(&e(&d, "3 + 5eps"), &e(&d, "eps"), RemainderStrategy::Echelon).unwrap();
    assert_eq!(c.apply(&e(&d, "eps")).unwrap(), e(&d, "5eps"));

    let z = builtin("ground").unwrap();
    let r = canonical_remainder(&e(&z, "7"), &e(&z, "3"), RemainderStrategy::LeastNonnegative).unwrap();
    assert_eq!(r, e(&z, "1"));
    let c = canonical_quotient(&e(&z, "7"), &e(&z, "3"), RemainderStrategy::LeastNonnegative).unwrap();
    assert_eq!(c, TensorElement::identity(&z).scale(&int(2)));

    let r = canonical_remainder(&e(&h, "1 + i + j"), &e(&h, "2"), RemainderStrategy::MinNorm).unwrap();
    assert!(r.coords().iter().all(|x| *x >= int(-1) && *x <= int(1)));
    assert!(quaternion_norm(&r) < int(4));

    assert_eq!(
        canonical_remainder(&e(&d, "1"), &e(&d, "eps"), RemainderStrategy::MinNorm),
        Err(Error::InapplicableStrategy {
            strategy: "min-norm",
            reason: "requires the quaternion algebra".into()
        })
    );
}

#[test]
fn cosets_and_quotient_algebras() {
    let d = builtin("dual").unwrap();
    let eps = e(&d, "eps");
    assert!(same_coset(&e(&d, "3 + 5eps"), &e(&d, "3 - 2eps"), &eps).unwrap());
    assert!(!same_coset(&e(&d, "3"), &e(&d, "4"), &eps).unwrap());

    let q = QuotientAlgebra::new(&eps).unwrap();
    assert_eq!(q.dim(), 1);
    assert_eq!(q.to_algebra().unwrap().labels(), ["1"]);
    assert_eq!(QuotientAlgebra::new(&e(&builtin("matrix2").unwrap(), "E11")).unwrap().dim(), 0);
    let whole = QuotientAlgebra::new(&Element::zero(&d)).unwrap();
    assert_eq!(whole.dim(), 2);
    assert!(whole.check_structure().is_ok());

    let z = builtin("ground").unwrap();
    assert!(chain_remainder_check(&e(&z, "17"), &e(&z, "5"), &e(&z, "3"), RemainderStrategy::LeastNonnegative).unwrap());
}

#[test]
fn polynomials() {
    let h = h();
    let p = |s: &str| parse_poly(&h, s).unwrap();
    assert_eq!(p("x - k").mul(&p("x + k")).unwrap(), p("x^2 + 1"));
    assert_eq!(p("i x").mul(&p("j x")).unwrap(), p("k x^2"));
    assert!(poly_degree_law_check(&p("x - k"), &p("x + k")).unwrap());

    let (q, r) = poly_divmod(&p("x^2 + i*x + j"), &p("x - k")).unwrap();
    assert_eq!(q.to_string(), "(1 (x) 1)*x + (i (x) 1 + k (x) 1)");
    assert_eq!(r, p("-1"));
    let (q, r) = poly_divmod(&p("x + 1"), &p("x^2")).unwrap();
    assert!(q.is_zero());
    assert_eq!(r, p("x + 1"));

    assert!(is_unit_poly(&p("i")));
    assert!(!is_unit_poly(&p("x")));
    assert!(!is_unit_poly(&p("0")));

    let lin = p("x - i");
    assert_eq!(verify_prime_degree1(&lin, &p("2")).unwrap(), PrimeVerdict::UnitDivisor);
    let verdict = verify_prime_degree1(&lin, &p("j*(x - i)")).unwrap();
    assert_eq!(
        verdict,
        PrimeVerdict::UnitQuotient { quotient: t(&h, "-j (x) 1"), inverse: t(&h, "j (x) 1") }
    );
}

#[test]
fn common_factors_and_gcd() {
    let z = builtin("ground").unwrap();
    let ints = Integers::new(&z).unwrap();
    let v = |n| ints.value(n);
    assert!(is_common_factor(&ints, &v(3), &v(6), &v(9)).unwrap());
    assert_eq!(euclidean_gcd(&ints, &v(12), &v(18)).unwrap().result, v(6));
    assert_eq!(euclidean_gcd(&ints, &v(12), &v(0)).unwrap().result, v(12));
    let candidates: Vec<Element> = (1..=18).map(v).collect();
    assert!(hcf_certificate(&ints, &v(6), &v(12), &v(18), &candidates).unwrap());
    assert!(!hcf_certificate(&ints, &v(3), &v(12), &v(18), &candidates).unwrap());
    assert!(relatively_prime(&ints, &v(4), &v(9)).unwrap());
    assert!(!relatively_prime(&ints, &v(4), &v(6)).unwrap());

    let h = h();
    let polys = DivisionPolynomials::new(&h);
    let p = |s: &str| parse_poly(&h, s).unwrap();
    assert!(is_common_factor(&polys, &p("x - i"), &p("x - i"), &p("j*(x - i)")).unwrap());
    assert!(relatively_prime(&polys, &p("x - i"), &p("x - j")).unwrap());
    let trace = euclidean_gcd(&polys, &p("(x + j)(x - i)"), &p("(x - k)(x - i)")).unwrap();
    assert!(trace.verify(&polys).unwrap());
    assert_eq!(trace.to_json()["steps"].as_array().unwrap().len(), trace.steps.len());
}
