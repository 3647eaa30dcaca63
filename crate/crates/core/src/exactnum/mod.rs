//! Exact scalars, polynomials and sign verification.

mod expr;
mod interval;
mod linalg;
mod poly;
mod region;
mod sturm;

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use expr::parse_factored;
pub use interval::{exp_enclosure, RatInterval};
pub use linalg::{psd_rank, solve};
pub use poly::{poly_from_factors, Factored, Poly};
pub use region::{verify_sign, Interval, IntervalSet, Region, Sign, SignVerdict};
pub use sturm::{count_roots, square_free_decomposition, square_free_part, sturm_sequence};

use crate::error::{Error, Result};

/// Arbitrary-precision reduced fraction.
pub type Rational = num_rational::BigRational;

/// `num / den` as a reduced rational. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p/q` or `p`, with an optional sign. Accepts the unicode minus.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let cleaned: String = text
        .trim()
        .chars()
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .filter(|c| !c.is_whitespace())
        .collect();
    let bad = || Error::ParseRational(text.to_string());
    let body = cleaned.strip_prefix('+').unwrap_or(&cleaned);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    if num.is_empty() || den.is_empty() || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub(crate) fn min_rat<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a <= b {
        a
    } else {
        b
    }
}

pub(crate) fn sign_of(value: &Rational) -> i8 {
    if value.is_positive() {
        1
    } else if value.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational(" \u{2212}3 / 5").unwrap(), rat(-3, 5));
        assert_eq!(parse_rational("+7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(format!("{}", rat(-10, 4)), "-5/2");
        assert_eq!(format!("{}", rat(8, 4)), "2");
    }

    #[test]
    fn pow_small() {
        assert_eq!(pow(&rat(-2, 3), 3), rat(-8, 27));
        assert_eq!(pow(&rat(5, 7), 0), int(1));
    }
}
