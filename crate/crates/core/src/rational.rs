//! Exact rational scalars.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced to lowest terms. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}` (expected `p` or `p/q`)")]
    Malformed(String),
    #[error("zero or negative denominator in `{0}`")]
    BadDenominator(String),
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Strict parser for `p` or `p/q` with `q > 0`. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !is_digits(unsigned) {
        return Err(ParseRationalError::Malformed(s.into()));
    }
    let numer = BigInt::from_str(num).map_err(|_| ParseRationalError::Malformed(s.into()))?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if !is_digits(d) {
                return Err(ParseRationalError::Malformed(s.into()));
            }
            let d = BigInt::from_str(d).map_err(|_| ParseRationalError::Malformed(s.into()))?;
            if d.is_zero() {
                return Err(ParseRationalError::BadDenominator(s.into()));
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}

/// Exact square root when `x` is the square of a rational.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn is_square(x: &Rational) -> bool {
    sqrt_exact(x).is_some()
}

/// -1, 0 or 1.
pub fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational(" 1/2 ").unwrap(), frac(1, 2));
    }

    #[test]
    fn rejects_decimals_and_bad_denominators() {
        assert!(matches!(parse_rational("0.5"), Err(ParseRationalError::Malformed(_))));
        assert!(matches!(parse_rational("1/0"), Err(ParseRationalError::BadDenominator(_))));
        assert!(matches!(parse_rational("1/-2"), Err(ParseRationalError::Malformed(_))));
        assert!(matches!(parse_rational("--1"), Err(ParseRationalError::Malformed(_))));
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
    }

    #[test]
    fn canonical_display() {
        assert_eq!(frac(4, -6).to_string(), "-2/3");
        assert_eq!(frac(6, 3).to_string(), "2");
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_exact(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
        assert_eq!(sqrt_exact(&int(0)), Some(int(0)));
    }
}
