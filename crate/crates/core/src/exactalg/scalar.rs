//! Exact rational scalars.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type ExactScalar = BigRational;

pub fn int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> ExactScalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &ExactScalar) -> bool {
    x.denom().is_one()
}

/// Canonical rendering used in every machine-readable output: always `num/den`.
pub fn render(x: &ExactScalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Short rendering for human-facing text: `3`, `-1/2`.
pub fn render_short(x: &ExactScalar) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `n`, `n/d` or `-n/d`.
pub fn parse(s: &str) -> Result<ExactScalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

pub fn from_parts(num: &str, den: &str) -> Result<ExactScalar> {
    parse(&format!("{num}/{den}"))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn abs(x: &ExactScalar) -> ExactScalar {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_is_always_a_fraction() {
        assert_eq!(render(&int(3)), "3/1");
        assert_eq!(render(&frac(2, -4)), "-1/2");
        assert_eq!(render_short(&int(-7)), "-7");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "5", "-3/4", "10/6"] {
            let x = parse(s).unwrap();
            assert_eq!(parse(&render(&x)).unwrap(), x);
        }
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
