//! Exact rational arithmetic helpers shared across the crate.
//!
//! Every algebraic quantity (deformation parameters, trace pairings, series
//! partial sums) is kept as an arbitrary-precision rational; floating point
//! appears only in the numerical verification reports of [`crate::oracle`].

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::str::FromStr;
use thiserror::Error;

/// Exact arbitrary-precision rational number.
pub type Rational = BigRational;

/// Error raised when a rational literal cannot be parsed.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`: expected `a` or `a/b` with integers a, b")]
    Malformed(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
}

/// Parses `a` or `a/b` into an exact rational in lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (numer, denom) = match trimmed.split_once('/') {
        None => (trimmed, "1"),
        Some((n, d)) => (n.trim(), d.trim()),
    };
    let numer =
        BigInt::from_str(numer).map_err(|_| ParseRationalError::Malformed(trimmed.into()))?;
    let denom =
        BigInt::from_str(denom).map_err(|_| ParseRationalError::Malformed(trimmed.into()))?;
    if denom.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(trimmed.into()));
    }
    Ok(Rational::new(numer, denom))
}

/// Constructs the rational `numer/denom` from machine integers.
///
/// # Panics
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exact square root of a non-negative rational, if one exists.
///
/// A reduced fraction has a rational square root exactly when its numerator
/// and denominator are both perfect squares.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let numer = q.numer().sqrt();
    let denom = q.denom().sqrt();
    if &(&numer * &numer) == q.numer() && &(&denom * &denom) == q.denom() {
        Some(Rational::new(numer, denom))
    } else {
        None
    }
}

/// Nearest-double rendering, for reports only.
pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("1").unwrap(), Rational::one());
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("-3/9").unwrap(), ratio(-1, 3));
    }

    #[test]
    fn rejects_bad_literals() {
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_rational("a/b"),
            Err(ParseRationalError::Malformed(_))
        ));
        assert!(matches!(
            parse_rational("1.5"),
            Err(ParseRationalError::Malformed(_))
        ));
    }

    #[test]
    fn exact_sqrt_detects_rational_squares() {
        assert_eq!(exact_sqrt(&ratio(1, 4)), Some(ratio(1, 2)));
        assert_eq!(exact_sqrt(&ratio(4, 9)), Some(ratio(2, 3)));
        assert_eq!(exact_sqrt(&Rational::one()), Some(Rational::one()));
        assert_eq!(exact_sqrt(&ratio(1, 2)), None);
        assert_eq!(exact_sqrt(&ratio(2, 9)), None);
        assert_eq!(exact_sqrt(&ratio(-1, 4)), None);
    }

    #[test]
    fn display_is_reduced_num_slash_den() {
        assert_eq!(ratio(2, 4).to_string(), "1/2");
        assert_eq!(ratio(3, 1).to_string(), "3");
    }
}
