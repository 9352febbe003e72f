//! Exact rational scalars and their text form (`"p"` or `"p/q"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(text: &str) -> Result<Q> {
    let bad = || Error::MalformedRational(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

pub fn format_rational(value: &Q) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// True iff `value` lies in {0, 1, 2, ...}.
pub fn is_nonnegative_integer(value: &Q) -> bool {
    value.denom().is_one() && !value.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), q(3));
        assert_eq!(parse_rational("-4/6").unwrap(), q_frac(-2, 3));
        assert_eq!(parse_rational(" 5 / -10 ").unwrap(), q_frac(-1, 2));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1/0", "x", "1/2/3", "0.5"] {
            assert!(matches!(
                parse_rational(bad),
                Err(Error::MalformedRational(_))
            ));
        }
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&q_frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&q(7)), "7");
    }

    #[test]
    fn nonnegative_integer_test() {
        assert!(is_nonnegative_integer(&q(0)));
        assert!(is_nonnegative_integer(&q(3)));
        assert!(!is_nonnegative_integer(&q(-1)));
        assert!(!is_nonnegative_integer(&q_frac(1, 2)));
    }
}
