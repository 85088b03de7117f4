use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. `Ratio` keeps it reduced with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> Scalar {
    frac(1, 2)
}

/// Parses `p/q`, `p` or `-p/q`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::ParseScalar(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn is_integer_valued(x: &Scalar) -> bool {
    x.is_integer()
}

/// Exact power with a nonnegative integer exponent.
pub fn pow(x: &Scalar, k: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_scalar("2/1").unwrap(), int(2));
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar(" 7 ").unwrap(), int(7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn canonical_form() {
        let z = frac(0, 5);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
        let q = frac(4, -6);
        assert_eq!(format_scalar(&q), "-2/3");
    }
}
