//! Exact arithmetic: rationals, Gaussian rationals, Laurent polynomials in
//! π, prime factorization and the sum-of-two-squares function.

mod factor;
mod gaussian;
mod pi;

pub use factor::{factorize, factorize_big, is_prime, r2, Factorization};
pub use gaussian::GaussianRational;
pub use pi::{membership_in_pi_negative_integers, Membership, PiElement};

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or an integer literal. Decimal notation is rejected so
/// that no inexact value can slip in.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let invalid = || Error::InvalidRational(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return Err(invalid());
    }
    let num: BigInt = num.parse().map_err(|_| invalid())?;
    let den: BigInt = den.parse().map_err(|_| invalid())?;
    if den.is_zero() {
        return Err(invalid());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Exact square root of a non-negative rational, if it is rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = exact_isqrt(r.numer())?;
    let den = exact_isqrt(r.denom())?;
    Some(Rational::new(num, den))
}

pub(crate) fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

/// Splits `r` into `(p, q)` machine integers, failing on overflow.
pub fn to_i64_pair(r: &Rational) -> Result<(i64, i64)> {
    let overflow = || Error::Overflow(r.to_string());
    let p = r.numer().to_i64().ok_or_else(overflow)?;
    let q = r.denom().to_i64().ok_or_else(overflow)?;
    Ok((p, q))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("5/4").unwrap(), rational(5, 4));
        assert_eq!(parse_rational("-6/4").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), integer(7));
        assert_eq!(parse_rational(" 1 / 3 ").unwrap(), rational(1, 3));
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        for bad in ["1.5", "1e3", "", "/3", "3/", "3/0", "a/b", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn format_round_trips() {
        assert_eq!(format_rational(&rational(10, 8)), "5/4");
        assert_eq!(format_rational(&integer(0)), "0");
        assert_eq!(format_rational(&integer(-3)), "-3");
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(rational_sqrt(&integer(0)), Some(integer(0)));
        assert_eq!(rational_sqrt(&rational(9, 4)), Some(rational(3, 2)));
        assert_eq!(rational_sqrt(&integer(2)), None);
        assert_eq!(rational_sqrt(&rational(1, 2)), None);
        assert_eq!(rational_sqrt(&integer(-4)), None);
    }

    #[test]
    fn sqrt_of_squares_up_to_1e4() {
        for num in (0..=10_000i64).step_by(37) {
            for den in (1..=10_000i64).step_by(433) {
                let s = rational(num, den);
                assert_eq!(rational_sqrt(&(&s * &s)), Some(s));
            }
        }
    }

    proptest! {
        #[test]
        fn sqrt_inverts_squaring(num in 0i64..=10_000, den in 1i64..=10_000) {
            let s = rational(num, den);
            prop_assert_eq!(rational_sqrt(&(&s * &s)), Some(s));
        }

        #[test]
        fn parse_inverts_format(num in -100_000i64..100_000, den in 1i64..1000) {
            let r = rational(num, den);
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
