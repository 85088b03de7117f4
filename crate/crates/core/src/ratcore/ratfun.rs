use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::YPoly;
use super::scalar::{int, Scalar};
use crate::error::{Error, Result};

/// Reduced rational function num/den in y.
///
/// Canonical form: gcd(num, den) is constant, both have integer coefficients
/// with no common integer factor, and den has a positive leading coefficient.
/// Equal functions therefore compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YRatFun {
    num: YPoly,
    den: YPoly,
}

impl YRatFun {
    pub fn reduce(num: YPoly, den: YPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = YPoly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::normalize_content(num, den))
    }

    fn normalize_content(num: YPoly, den: YPoly) -> Self {
        let lcm = num
            .coeffs()
            .iter()
            .chain(den.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let to_int = |p: &YPoly| -> Vec<BigInt> {
            p.coeffs()
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect()
        };
        let n = to_int(&num);
        let d = to_int(&den);
        let mut g = n.iter().chain(&d).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if d.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let n: Vec<BigInt> = n.iter().map(|c| c / &g).collect();
        let d: Vec<BigInt> = d.iter().map(|c| c / &g).collect();
        YRatFun {
            num: YPoly::from_bigints(&n),
            den: YPoly::from_bigints(&d),
        }
    }

    pub fn zero() -> Self {
        YRatFun {
            num: YPoly::zero(),
            den: YPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_poly(YPoly::constant(c))
    }

    pub fn from_poly(p: YPoly) -> Self {
        Self::reduce(p, YPoly::one()).expect("unit denominator")
    }

    pub fn y() -> Self {
        Self::from_poly(YPoly::y())
    }

    /// c / y
    pub fn inv_y(c: Scalar) -> Self {
        Self::reduce(YPoly::constant(c), YPoly::y()).expect("nonzero denominator")
    }

    /// p'/p
    pub fn log_derivative(p: &YPoly) -> Result<Self> {
        Self::reduce(p.derivative(), p.clone())
    }

    pub fn num(&self) -> &YPoly {
        &self.num
    }

    pub fn den(&self) -> &YPoly {
        &self.den
    }

    pub fn into_parts(self) -> (YPoly, YPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.den.degree() != Some(0) {
            return None;
        }
        self.num.as_constant().map(|c| c / self.den.leading())
    }

    /// Returns the polynomial when the denominator is constant.
    pub fn as_poly(&self) -> Option<YPoly> {
        (self.den.degree() == Some(0)).then(|| self.num.scale(&(Scalar::one() / self.den.leading())))
    }

    pub fn eval(&self, y: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(y);
        (!d.is_zero()).then(|| self.num.eval(y) / d)
    }

    pub fn eval_f64(&self, y: f64) -> f64 {
        self.num.eval_f64(y) / self.den.eval_f64(y)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn mul_poly(&self, p: &YPoly) -> Self {
        Self::reduce(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::reduce(num, den).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self> {
        Self::reduce(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rnum, self.den.clone()).expect("nonzero denominator");
        }
        let g = YPoly::gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&rnum * &a);
        let den = &(&a * &b) * &g;
        Self::reduce(num, den).expect("nonzero denominator")
    }
}

impl Default for YRatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a YRatFun> for &'a YRatFun {
    type Output = YRatFun;
    fn add(self, rhs: &YRatFun) -> YRatFun {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a YRatFun> for &'a YRatFun {
    type Output = YRatFun;
    fn sub(self, rhs: &YRatFun) -> YRatFun {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a YRatFun> for &'a YRatFun {
    type Output = YRatFun;
    fn mul(self, rhs: &YRatFun) -> YRatFun {
        YRatFun::reduce(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl<'a> Div<&'a YRatFun> for &'a YRatFun {
    type Output = YRatFun;
    /// Panics on division by the zero function; use `checked_div` otherwise.
    fn div(self, rhs: &YRatFun) -> YRatFun {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &YRatFun {
    type Output = YRatFun;
    fn neg(self) -> YRatFun {
        YRatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for YRatFun {
            type Output = YRatFun;
            fn $f(self, rhs: YRatFun) -> YRatFun {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for YRatFun {
    type Output = YRatFun;
    fn neg(self) -> YRatFun {
        -&self
    }
}

impl From<YPoly> for YRatFun {
    fn from(p: YPoly) -> Self {
        YRatFun::from_poly(p)
    }
}

impl From<Scalar> for YRatFun {
    fn from(c: Scalar) -> Self {
        YRatFun::constant(c)
    }
}

impl From<i64> for YRatFun {
    fn from(c: i64) -> Self {
        YRatFun::constant(int(c))
    }
}

impl fmt::Display for YRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.leading().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
