//! Exact rational scalars and their wire format.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Scalar type used throughout the crate. `BigRational` keeps itself in
/// lowest terms with a positive denominator, which is exactly the canonical
/// form the wire format expects.
pub type Rational = BigRational;

/// Shorthand constructor, mostly for tests and fixed constants. `d` must be
/// nonzero.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the wire form "p/q" or "p".
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.parse()
        .map_err(|_| Error::InvalidRational(s.to_owned()))
}

/// Formats to the wire form: "p/q", or "p" when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/3", "22/7"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }

    #[test]
    fn parse_reduces_to_lowest_terms() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(format_rational(&parse_rational("6/3").unwrap()), "2");
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "a", "1/0", "1/2/3", "1.5"] {
            assert!(parse_rational(s).is_err(), "{s:?} should not parse");
        }
    }
}
