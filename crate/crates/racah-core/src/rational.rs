//! Exact rational coefficients.
//!
//! `Rational` is `num_rational::BigRational`: always reduced to lowest terms
//! with a positive denominator, arithmetic exact. The helpers here fix the
//! `p/q` text form used in every serialized output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Render as `p` for integers, `p/q` otherwise (`q > 0` always).
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parse the `p` / `p/q` form produced by [`format_rational`].
pub fn parse_rational(text: &str) -> Result<Rational> {
    let parse_int = |s: &str| -> Result<BigInt> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

/// Exact conversion to `BigInt`; errors if the value is not an integer.
pub fn to_integer(value: &Rational) -> Result<BigInt> {
    if value.denom().is_one() {
        Ok(value.numer().clone())
    } else {
        Err(Error::NonIntegerCoefficient(format_rational(value)))
    }
}

/// Signed magnitude comparison helper used when picking elimination pivots.
pub fn abs_bigint(value: &BigInt) -> BigInt {
    value.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_round_trip() {
        for (n, d) in [(1, 2), (-3, 4), (7, 1), (0, 5), (-10, 3)] {
            let r = rat(n, d);
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn denominator_always_positive() {
        let r = Rational::new(BigInt::from(1), BigInt::from(-2));
        assert_eq!(format_rational(&r), "-1/2");
    }

    #[test]
    fn to_integer_rejects_fractions() {
        assert!(to_integer(&rat(1, 2)).is_err());
        assert_eq!(to_integer(&int(-9)).unwrap(), BigInt::from(-9));
    }
}
