//! Helpers for exact rationals: parsing, floors and integrality.

use crate::{Error, Rational, Result};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Parses `"a/b"` or an integer literal. Decimal notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidData(format!("{s:?} is not an exact rational of the form a/b"));
    if s.is_empty() || s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `a/b` (or plain integer) rendering, the inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Exact floor as a machine integer.
pub fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("floor fits in i64")
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("0").unwrap(), int(0));
        assert_eq!(parse_rational("-2/4").unwrap(), rat(-1, 2));
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        for s in ["0.333", "1e3", "", "1/0", "a/b", "1/2/3"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn floor_rounds_toward_negative_infinity() {
        assert_eq!(floor_i64(&rat(-1, 3)), -1);
        assert_eq!(floor_i64(&rat(7, 3)), 2);
        assert_eq!(floor_i64(&int(-4)), -4);
    }

    #[test]
    fn format_round_trips() {
        for r in [rat(5, 12), int(0), rat(-7, 3)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
