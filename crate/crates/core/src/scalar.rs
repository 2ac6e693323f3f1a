//! Exact scalars: arbitrary-precision integers and rationals.
//!
//! `BigRational` keeps itself reduced with a positive denominator after every
//! arithmetic operation, so values compare by numerator and denominator.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn add(x: &Rational, y: &Rational) -> Rational {
    x + y
}

pub fn mul(x: &Rational, y: &Rational) -> Rational {
    x * y
}

pub fn inv(x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x.recip())
}

/// True when the denominator is positive and coprime to the numerator.
pub fn is_canonical(x: &Rational) -> bool {
    x.denom().is_positive() && x.numer().abs().gcd(x.denom()).is_one()
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

/// Parses `"p/q"`, `"-3"`, `"7"` and terminating decimals such as `"0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::parse(0, format!("invalid rational literal `{text}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, fraction)) = s.split_once('.') {
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole = whole.trim_start_matches(['-', '+']);
        let whole = if whole.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(whole).map_err(|_| bad())?
        };
        let scale = num_traits::pow(BigInt::from(10), fraction.len());
        let fraction = BigInt::from_str(fraction).map_err(|_| bad())?;
        let magnitude = Rational::new(whole * &scale + fraction, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    BigInt::from_str(s)
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| frac(n, d))
    }

    #[test]
    fn addition_examples() {
        assert_eq!(add(&frac(1, 2), &frac(1, 3)), frac(5, 6));
        assert_eq!(add(&frac(-7, 9), &int(0)), frac(-7, 9));
        let sum = add(&frac(2, 4), &int(0));
        assert_eq!(sum, frac(1, 2));
        assert_eq!(sum.numer(), &BigInt::from(1));
        assert_eq!(sum.denom(), &BigInt::from(2));
    }

    #[test]
    fn multiplication_and_inverse() {
        assert_eq!(mul(&frac(2, 3), &frac(3, 2)), int(1));
        assert_eq!(inv(&int(5)).unwrap(), frac(1, 5));
        assert_eq!(mul(&frac(-4, 11), &int(1)), frac(-4, 11));
        assert_eq!(inv(&int(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-0.25").unwrap(), frac(-1, 4));
        assert_eq!(parse_rational("4/-6").unwrap(), frac(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&frac(-2, 3)), "-2/3");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn no_overflow() {
        let big = parse_rational("123456789012345678901234567891/7").unwrap();
        let sq = mul(&big, &big);
        assert_eq!(
            format_rational(&sq),
            "15241578753238836750495351562783112365526596557677488187881/49"
        );
    }

    proptest! {
        #[test]
        fn field_axioms(x in rational(), y in rational(), z in rational()) {
            prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
            prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
            prop_assert_eq!(add(&x, &y), add(&y, &x));
            prop_assert_eq!(mul(&x, &y), mul(&y, &x));
            prop_assert_eq!(mul(&x, &add(&y, &z)), add(&mul(&x, &y), &mul(&x, &z)));
            if !x.is_zero() {
                prop_assert_eq!(mul(&x, &inv(&x).unwrap()), int(1));
            }
            for r in [add(&x, &y), mul(&x, &z), x.clone() - &y] {
                prop_assert!(is_canonical(&r));
            }
        }

        #[test]
        fn print_parse_round_trip(x in rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
    }
}
