//! Text form of rationals: `"num/den"`, with the denominator omitted when it is 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use super::ExactFieldError;

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"n"`, `"-n"` or `"n/d"`. The result is reduced; a zero denominator is an error.
pub fn parse_rational(s: &str) -> Result<BigRational, ExactFieldError> {
    let bad = || ExactFieldError::BadRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(serde::de::Error::custom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn formats() {
        assert_eq!(format_rational(&q(3, 1)), "3");
        assert_eq!(format_rational(&q(-6, 4)), "-3/2");
        assert_eq!(format_rational(&q(0, 5)), "0");
    }

    #[test]
    fn parses() {
        assert_eq!(parse_rational("3/2").unwrap(), q(3, 2));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), q(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }
}
