//! Exact arithmetic: arbitrary-precision rationals, Gaussian rationals,
//! sparse multivariate polynomials and rational matrices.
//!
//! Everything here is exact; there is no floating-point fallback. Rationals
//! are kept reduced with a positive denominator, polynomials store no zero
//! coefficients and order their terms graded-lexicographically.

mod gaussian;
mod matrix;
mod monomial;
mod poly;

pub use gaussian::GaussianRational;
pub use matrix::RatMatrix;
pub use monomial::Monomial;
pub use poly::Polynomial;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = BigRational;

/// Rational with the given integer numerator and denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse a rational literal: `p` or `p/q`, optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid integer `{num}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid integer `{den}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Render a rational as `p` or `p/q` with q > 0.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn rational_abs(q: &Rational) -> Rational {
    if q.is_negative() {
        -q.clone()
    } else {
        q.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_grammar_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3", "10/4"] {
            let q = parse_rational(s).unwrap();
            let out = format_rational(&q);
            assert_eq!(parse_rational(&out).unwrap(), q);
        }
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
