use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::potential::Potential;
use super::superpotential::{is_normalizable, Superpotential};
use crate::error::{Error, Result};
use crate::ratcore::{
    frac, int, positive_root_count, serial::scalar_str, to_f64, Scalar, YPoly, YRatFun,
};

/// ψ(r) = c · r^a · e^{s·y/2} · N(y)/D(y), with N/D reduced and D monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WaveFunction {
    constant: Scalar,
    a: Scalar,
    s: i8,
    num: YPoly,
    den: YPoly,
}

impl WaveFunction {
    pub fn new(constant: Scalar, a: Scalar, s: i8, num: YPoly, den: YPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if s != 1 && s != -1 {
            return Err(Error::Degenerate(format!("gaussian sign must be +1 or -1, got {s}")));
        }
        let (num, den) = if num.is_zero() {
            (YPoly::zero(), YPoly::one())
        } else {
            let g = YPoly::gcd(&num, &den);
            let num = num.div_exact(&g).expect("gcd divides");
            let den = den.div_exact(&g).expect("gcd divides");
            let lc = den.leading();
            (num.scale(&(Scalar::one() / &lc)), den.monic())
        };
        Ok(WaveFunction {
            constant,
            a,
            s,
            num,
            den,
        })
    }

    pub fn from_ratio(constant: Scalar, a: Scalar, s: i8, ratio: &YRatFun) -> Result<Self> {
        Self::new(constant, a, s, ratio.num().clone(), ratio.den().clone())
    }

    pub fn constant(&self) -> &Scalar {
        &self.constant
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn s(&self) -> i8 {
        self.s
    }

    pub fn num(&self) -> &YPoly {
        &self.num
    }

    pub fn den(&self) -> &YPoly {
        &self.den
    }

    pub fn ratio(&self) -> YRatFun {
        YRatFun::reduce(self.num.clone(), self.den.clone()).expect("nonzero denominator")
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero() || self.constant.is_zero()
    }

    /// H = s/2 + N′/N − D′/D, so that ψ′/ψ = a/r + ωr·H.
    pub fn log_h(&self) -> Result<YRatFun> {
        if self.is_zero() {
            return Err(Error::ZeroWaveFunction);
        }
        let r = self.ratio();
        let ld = r.derivative().checked_div(&r)?;
        Ok(&YRatFun::constant(frac(self.s as i64, 2)) + &ld)
    }

    /// ψ″/ψ = ωa(a−1)/(2y) + (2a+1)ωH + 2ωy(H² + H′).
    pub fn second_over_psi(&self, omega: &Scalar) -> Result<YRatFun> {
        let h = self.log_h()?;
        let a = &self.a;
        let pole = YRatFun::inv_y(omega * a * (a - Scalar::one()) / int(2));
        let lin = h.scale(&((int(2) * a + Scalar::one()) * omega));
        let quad = (&(&h * &h) + &h.derivative()).mul_poly(&YPoly::monomial(int(2) * omega, 1));
        Ok(&(&pole + &lin) + &quad)
    }

    /// k with self = k·other, decided by cross-multiplication.
    pub fn proportionality(&self, other: &WaveFunction) -> Option<Scalar> {
        if self.is_zero() || other.is_zero() || self.a != other.a || self.s != other.s {
            return None;
        }
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        let k = lhs.leading() / rhs.leading();
        (lhs == rhs.scale(&k)).then(|| k * &self.constant / &other.constant)
    }

    /// Moves factors y^k of N and D into the power of r via y = ωr²/2.
    pub fn canonical(&self, omega: &Scalar) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (kn, num) = self.num.split_y_power();
        let (kd, den) = self.den.split_y_power();
        let k = kn as i64 - kd as i64;
        let half_omega = omega / int(2);
        let factor = if k >= 0 {
            crate::ratcore::pow(&half_omega, k as usize)
        } else {
            crate::ratcore::pow(&(Scalar::one() / half_omega), (-k) as usize)
        };
        WaveFunction {
            constant: &self.constant * factor,
            a: &self.a + int(2 * k),
            s: self.s,
            num,
            den,
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        WaveFunction {
            constant: &self.constant * c,
            ..self.clone()
        }
    }

    /// Distinct zeros of D on (0, ∞).
    pub fn den_roots_in_domain(&self) -> usize {
        positive_root_count(&self.den).expect("nonzero denominator")
    }

    /// Regular on (0, ∞) and square integrable at both ends.
    pub fn is_physical(&self) -> bool {
        self.den_roots_in_domain() == 0 && is_normalizable(&self.a, self.s)
    }

    pub fn eval_f64(&self, r: f64, omega: &Scalar) -> f64 {
        let y = to_f64(omega) * r * r / 2.0;
        to_f64(&self.constant)
            * r.powf(to_f64(&self.a))
            * (self.s as f64 * y / 2.0).exp()
            * self.num.eval_f64(y)
            / self.den.eval_f64(y)
    }
}

#[derive(Serialize, Deserialize)]
struct WaveFunctionRepr {
    #[serde(with = "scalar_str")]
    constant: Scalar,
    #[serde(with = "scalar_str")]
    a: Scalar,
    s: i8,
    num: YPoly,
    den: YPoly,
}

impl Serialize for WaveFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WaveFunctionRepr {
            constant: self.constant.clone(),
            a: self.a.clone(),
            s: self.s,
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WaveFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WaveFunctionRepr::deserialize(d)?;
        WaveFunction::new(r.constant, r.a, r.s, r.num, r.den).map_err(serde::de::Error::custom)
    }
}

/// (±d/dr + W)ψ, with the plus sign for `dagger = false`, in canonical form.
pub fn apply_intertwiner(
    w: &Superpotential,
    dagger: bool,
    psi: &WaveFunction,
    omega: &Scalar,
) -> WaveFunction {
    let sign = if dagger { -Scalar::one() } else { Scalar::one() };
    let r = psi.ratio();
    let two_y = YPoly::monomial(int(2), 1);
    let c = &sign * psi.a() + w.inv_r();
    let drift = &r.scale(&frac(psi.s() as i64, 2)) + &r.derivative();
    let bracket = &drift.scale(&sign) + &(&w.k_part() * &r);
    let out = &r.scale(&c) + &bracket.mul_poly(&two_y);
    WaveFunction::from_ratio(psi.constant().clone(), psi.a() - Scalar::one(), psi.s(), &out)
        .expect("nonzero denominator")
        .canonical(omega)
}

/// (V − E) − ψ″/ψ; identically zero iff (−∂²_r + V)ψ = Eψ.
pub fn schrodinger_residual(
    v: &Potential,
    psi: &WaveFunction,
    e: &Scalar,
    omega: &Scalar,
) -> Result<YRatFun> {
    let kinetic = psi.second_over_psi(omega)?;
    Ok(&(&v.value - &YRatFun::constant(e.clone())) - &kinetic)
}
