use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{format_scalar, int, to_f64, Scalar};

/// Polynomial in the canonical variable y, coefficients in ascending powers.
///
/// The highest stored coefficient is never zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    coeffs: Vec<Scalar>,
}

impl YPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * y^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn y() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    /// `y - c`
    pub fn linear_root(c: &Scalar) -> Self {
        Self::new(vec![-c.clone(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.coeffs.len() {
            0 => Some(Scalar::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, y: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c;
        }
        acc
    }

    pub fn eval_f64(&self, y: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * y + to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        YPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// p(-y)
    pub fn negate_arg(&self) -> Self {
        YPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// y^k p(y)
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        YPoly { coeffs }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        self.scale(&(Scalar::one() / lc))
    }

    /// Splits off the largest power of y dividing the polynomial: returns `(k, q)` with `p = y^k q`.
    pub fn split_y_power(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if self.is_zero() {
            return (0, Self::zero());
        }
        (k, YPoly::new(self.coeffs[k..].to_vec()))
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let lc_inv = Scalar::one() / divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Integer-coefficient primitive part with positive leading coefficient,
    /// together with the rational content `c` such that `self = c * prim`.
    pub fn primitive_part(&self) -> (Scalar, Vec<BigInt>) {
        if self.is_zero() {
            return (Scalar::zero(), Vec::new());
        }
        let lcm_den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm_den / c.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (Scalar::new(g, lcm_den), prim)
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Scalar::from_integer).collect())
    }

    /// Greatest common divisor, monic (zero only when both inputs are zero).
    ///
    /// Uses a primitive pseudo-remainder sequence over the integers.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let (_, mut u) = a.primitive_part();
        let (_, mut v) = b.primitive_part();
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            let r = int_prem(&u, &v);
            u = v;
            v = if r.is_empty() {
                r
            } else {
                YPoly::from_bigints(&r).primitive_part().1
            };
        }
        YPoly::from_bigints(&u).monic()
    }

    pub fn compose_affine(&self, a: &Scalar, b: &Scalar) -> Self {
        // p(a*y + b) by Horner
        let lin = YPoly::new(vec![b.clone(), a.clone()]);
        let mut acc = YPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &YPoly::constant(c.clone());
        }
        acc
    }
}

fn int_prem(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    let mut r = u.to_vec();
    let lv = v.last().expect("nonzero divisor").clone();
    while r.len() >= v.len() && !r.is_empty() {
        let k = r.len() - v.len();
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x *= &lv;
        }
        for (j, c) in v.iter().enumerate() {
            r[j + k] -= &lr * c;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

impl<'a> Add<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        YPoly::new(out)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for YPoly {
    type Output = YPoly;
    fn add(self, rhs: YPoly) -> YPoly {
        &self + &rhs
    }
}

impl Sub for YPoly {
    type Output = YPoly;
    fn sub(self, rhs: YPoly) -> YPoly {
        &self - &rhs
    }
}

impl Mul for YPoly {
    type Output = YPoly;
    fn mul(self, rhs: YPoly) -> YPoly {
        &self * &rhs
    }
}

impl Neg for YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        -&self
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_scalar(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !c.abs().is_one() {
                        write!(f, "{mag} ")?;
                    }
                    if k == 1 {
                        write!(f, "y")?;
                    } else {
                        write!(f, "y^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::scalar::frac;

    #[test]
    fn derivative_examples() {
        assert!(YPoly::one().derivative().is_zero());
        let p = YPoly::new(vec![frac(3, 8), frac(-1, 2), frac(1, 2)]);
        assert_eq!(p.derivative(), YPoly::new(vec![frac(-1, 2), int(1)]));
    }

    #[test]
    fn laguerre_two_zero_derivative() {
        // L_2^0(y) = 1 - 2y + y^2/2, expanded by hand from the series
        let l2 = YPoly::new(vec![int(1), int(-2), frac(1, 2)]);
        assert_eq!(l2.derivative(), YPoly::from_ints(&[-2, 1]));
    }

    #[test]
    fn division() {
        let a = YPoly::from_ints(&[-1, 0, 1]);
        let b = YPoly::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, YPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.div_exact(&YPoly::from_ints(&[2, 1])), None);
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = &YPoly::from_ints(&[-1, 1]) * &YPoly::from_ints(&[2, 0, 3]);
        let b = &YPoly::from_ints(&[-2, 2]) * &YPoly::from_ints(&[5, 1]);
        assert_eq!(YPoly::gcd(&a, &b), YPoly::from_ints(&[-1, 1]));
        assert_eq!(YPoly::gcd(&YPoly::zero(), &b), b.monic());
        assert_eq!(
            YPoly::gcd(&YPoly::from_ints(&[1, 1]), &YPoly::from_ints(&[2, 1])),
            YPoly::one()
        );
    }

    #[test]
    fn display_and_helpers() {
        let p = YPoly::new(vec![frac(3, 8), frac(-1, 2), frac(1, 2)]);
        assert_eq!(p.to_string(), "3/8 - 1/2 y + 1/2 y^2");
        assert_eq!(YPoly::from_ints(&[0, 0, 3, 1]).split_y_power(), (2, YPoly::from_ints(&[3, 1])));
        assert_eq!(YPoly::from_ints(&[1, 2, 3]).negate_arg(), YPoly::from_ints(&[1, -2, 3]));
        assert_eq!(
            YPoly::from_ints(&[0, 1]).compose_affine(&int(2), &int(1)),
            YPoly::from_ints(&[1, 2])
        );
        let (c, prim) = YPoly::new(vec![frac(1, 2), frac(-1, 3)]).primitive_part();
        assert_eq!(c, frac(-1, 6));
        assert_eq!(prim, vec![BigInt::from(-3), BigInt::from(2)]);
    }
}
