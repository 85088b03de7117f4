use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::potential::Potential;
use super::wavefunction::WaveFunction;
use crate::ratcore::{frac, int, is_integer_valued, serial::scalar_str, to_f64, Scalar, YPoly, YRatFun};

/// `weight · ∂_r ln poly(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LogTerm {
    #[serde(with = "scalar_str")]
    pub weight: Scalar,
    pub poly: YPoly,
}

/// W(r) = invR/r + linR·ωr + Σ weight·∂_r ln poly(y).
///
/// Log polynomials never vanish at y = 0: any factor y^k is folded into invR
/// on insertion, so the 1/r pole is fully explicit. Equality ignores the
/// order of log terms and the scaling of their polynomials.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Superpotential {
    #[serde(with = "scalar_str")]
    inv_r: Scalar,
    #[serde(with = "scalar_str")]
    lin_r: Scalar,
    logs: Vec<LogTerm>,
}

impl PartialEq for Superpotential {
    fn eq(&self, other: &Self) -> bool {
        let key = |w: &Superpotential| {
            let mut terms: Vec<(String, Scalar)> = w
                .logs
                .iter()
                .map(|t| (t.poly.monic().to_string(), t.weight.clone()))
                .collect();
            terms.sort();
            terms
        };
        self.inv_r == other.inv_r && self.lin_r == other.lin_r && key(self) == key(other)
    }
}

impl Eq for Superpotential {}

impl Superpotential {
    pub fn new(inv_r: Scalar, lin_r: Scalar) -> Self {
        Superpotential {
            inv_r,
            lin_r,
            logs: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::new(Scalar::zero(), Scalar::zero())
    }

    pub fn inv_r(&self) -> &Scalar {
        &self.inv_r
    }

    pub fn lin_r(&self) -> &Scalar {
        &self.lin_r
    }

    pub fn logs(&self) -> &[LogTerm] {
        &self.logs
    }

    pub fn with_log(mut self, weight: Scalar, poly: &YPoly) -> Self {
        self.push_log(weight, poly);
        self
    }

    pub fn with_inv_r(mut self, inv_r: Scalar) -> Self {
        self.inv_r = inv_r;
        self
    }

    pub fn with_lin_r(mut self, lin_r: Scalar) -> Self {
        self.lin_r = lin_r;
        self
    }

    fn push_log(&mut self, weight: Scalar, poly: &YPoly) {
        assert!(!poly.is_zero(), "log term of the zero polynomial");
        if weight.is_zero() {
            return;
        }
        let (k, rest) = poly.split_y_power();
        self.inv_r += &weight * int(2 * k as i64);
        if rest.degree() == Some(0) {
            return;
        }
        let key = rest.monic();
        if let Some(pos) = self.logs.iter().position(|t| t.poly.monic() == key) {
            self.logs[pos].weight += weight;
            if self.logs[pos].weight.is_zero() {
                self.logs.remove(pos);
            }
        } else {
            self.logs.push(LogTerm { weight, poly: rest });
        }
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = Superpotential::new(&self.inv_r + &other.inv_r, &self.lin_r + &other.lin_r);
        for t in self.logs.iter().chain(&other.logs) {
            out.push_log(t.weight.clone(), &t.poly);
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Superpotential::new(&self.inv_r * c, &self.lin_r * c);
        for t in &self.logs {
            out.push_log(&t.weight * c, &t.poly);
        }
        out
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-Scalar::one())
    }

    /// K(y) with W = invR/r + ωr·K.
    pub fn k_part(&self) -> YRatFun {
        self.logs.iter().fold(YRatFun::constant(self.lin_r.clone()), |acc, t| {
            let ld = YRatFun::log_derivative(&t.poly).expect("nonzero log polynomial");
            &acc + &ld.scale(&t.weight)
        })
    }

    pub fn parts(&self) -> SuperpotentialParts {
        SuperpotentialParts::new(self.inv_r.clone(), self.k_part())
    }

    /// X·Y as a function of y.
    pub fn product(&self, other: &Self, omega: &Scalar) -> YRatFun {
        self.parts().product(&other.parts(), omega)
    }

    pub fn square(&self, omega: &Scalar) -> YRatFun {
        self.product(self, omega)
    }

    /// dW/dr as a function of y.
    pub fn derivative(&self, omega: &Scalar) -> YRatFun {
        self.parts().derivative(omega)
    }

    /// (V⁻, V⁺) = (W² − W′, W² + W′).
    pub fn partner_potentials(&self, omega: &Scalar) -> (Potential, Potential) {
        self.parts().partner_potentials(omega)
    }

    /// −∂_r ln ψ.
    pub fn from_ground_state(psi: &WaveFunction) -> Self {
        Superpotential::new(-psi.a().clone(), frac(-(psi.s() as i64), 2))
            .with_log(-Scalar::one(), psi.num())
            .with_log(Scalar::one(), psi.den())
    }

    /// Exponents (a, s) of exp(∓∫W) = r^a e^{s y/2} · (rational part).
    pub fn ground_state_exponents(&self, partner: bool) -> (Scalar, Scalar) {
        let sign = if partner { Scalar::one() } else { -Scalar::one() };
        (&sign * &self.inv_r, &sign * &self.lin_r * int(2))
    }

    /// exp(−∫W) (or exp(+∫W) for the partner) in canonical form, when every
    /// exponent is integral and the Gaussian factor is e^{±y/2}.
    pub fn ground_state(&self, partner: bool) -> Option<WaveFunction> {
        let (a, s) = self.ground_state_exponents(partner);
        let s = if s == Scalar::one() {
            1
        } else if s == -Scalar::one() {
            -1
        } else {
            return None;
        };
        let mut num = YPoly::one();
        let mut den = YPoly::one();
        for t in &self.logs {
            let w = if partner { t.weight.clone() } else { -t.weight.clone() };
            if !is_integer_valued(&w) {
                return None;
            }
            let k: usize = w.abs().to_integer().try_into().ok()?;
            let target = if w.is_positive() { &mut num } else { &mut den };
            for _ in 0..k {
                *target = &*target * &t.poly;
            }
        }
        WaveFunction::new(Scalar::one(), a, s, num, den).ok()
    }

    pub fn eval_f64(&self, r: f64, omega: &Scalar) -> f64 {
        let w = to_f64(omega);
        let y = w * r * r / 2.0;
        to_f64(&self.inv_r) / r + w * r * self.k_part().eval_f64(y)
    }
}

/// invR/r + ωr·K(y) with an arbitrary rational K.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperpotentialParts {
    pub inv_r: Scalar,
    pub k: YRatFun,
}

impl SuperpotentialParts {
    pub fn new(inv_r: Scalar, k: YRatFun) -> Self {
        SuperpotentialParts { inv_r, k }
    }

    pub fn product(&self, other: &Self, omega: &Scalar) -> YRatFun {
        let pole = YRatFun::inv_y(&self.inv_r * &other.inv_r * omega / int(2));
        let cross = (&other.k.scale(&self.inv_r) + &self.k.scale(&other.inv_r)).scale(omega);
        let quad = (&self.k * &other.k).mul_poly(&YPoly::monomial(int(2) * omega, 1));
        &(&pole + &cross) + &quad
    }

    pub fn derivative(&self, omega: &Scalar) -> YRatFun {
        let pole = YRatFun::inv_y(-&self.inv_r * omega / int(2));
        let lin = self.k.scale(omega);
        let tail = self.k.derivative().mul_poly(&YPoly::monomial(int(2) * omega, 1));
        &(&pole + &lin) + &tail
    }

    pub fn partner_potentials(&self, omega: &Scalar) -> (Potential, Potential) {
        let sq = self.product(self, omega);
        let d = self.derivative(omega);
        (Potential::new(&sq - &d), Potential::new(&sq + &d))
    }
}

/// Square integrability from the endpoint exponents of r^a e^{s y/2}:
/// decaying Gaussian at infinity and a > 1/2 at the origin.
pub fn is_normalizable(a: &Scalar, s: i8) -> bool {
    s == -1 && *a > frac(1, 2)
}
