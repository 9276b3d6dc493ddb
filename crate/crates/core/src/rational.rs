//! Exact scalar arithmetic.
//!
//! Coefficients throughout the kernel are arbitrary-precision rationals,
//! always stored reduced with a positive denominator. The representation is
//! `num_rational::BigRational`; this module adds the `p/q` text round-trip
//! used by the table serialization and the command line.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::SchurError;

pub type Rational = num_rational::BigRational;

/// Build a rational from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Render as `p/q`, denominator always written (so `1` becomes `1/1`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parse `p/q` or a bare integer `p`. The denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational, SchurError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| SchurError::Parse(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| SchurError::Parse(format!("bad rational denominator in {s:?}")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(SchurError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Exact integer power with the convention `x^0 = 1` for every `x`.
pub fn pow_u32(base: &Rational, exp: u32) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mut acc = base.clone();
    for _ in 1..exp {
        acc *= base;
    }
    acc
}

/// True for a positive-signed value; handy for deterministic pivoting tests.
pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let q = parse_rational(s).unwrap();
            let t = parse_rational(&format_rational(&q)).unwrap();
            assert_eq!(q, t);
        }
    }

    #[test]
    fn normalizes() {
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&rat(2, -4)), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn zero_power_is_one() {
        assert_eq!(pow_u32(&rat(0, 1), 0), rat_int(1));
        assert_eq!(pow_u32(&rat(1, 2), 3), rat(1, 8));
    }
}
