//! Associated Laguerre polynomials with rational parameter and the radial
//! oscillator eigenpairs built from them.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratcore::{frac, int, serial::scalar_str, Scalar, YPoly};
use crate::susy::{Potential, WaveFunction};

/// Oscillator frequency ω and angular parameter ℓ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OscParams {
    #[serde(with = "scalar_str")]
    omega: Scalar,
    #[serde(with = "scalar_str")]
    ell: Scalar,
}

impl OscParams {
    pub fn new(omega: Scalar, ell: Scalar) -> Result<Self> {
        if !omega.is_positive() {
            return Err(Error::NonPositiveOmega);
        }
        Ok(OscParams { omega, ell })
    }

    pub fn omega(&self) -> &Scalar {
        &self.omega
    }

    pub fn ell(&self) -> &Scalar {
        &self.ell
    }

    pub fn with_ell(&self, ell: Scalar) -> Self {
        OscParams {
            omega: self.omega.clone(),
            ell,
        }
    }
}

/// Whether the polynomial is evaluated at y or at -y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArgSign {
    Plus,
    Minus,
}

impl ArgSign {
    pub fn sign(self) -> i64 {
        match self {
            ArgSign::Plus => 1,
            ArgSign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            ArgSign::Plus => ArgSign::Minus,
            ArgSign::Minus => ArgSign::Plus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaguerreSpec {
    pub n: usize,
    #[serde(with = "scalar_str")]
    pub alpha: Scalar,
    pub arg: ArgSign,
}

impl LaguerreSpec {
    pub fn new(n: usize, alpha: Scalar, arg: ArgSign) -> Self {
        LaguerreSpec { n, alpha, arg }
    }

    pub fn poly(&self) -> YPoly {
        laguerre_poly(self)
    }
}

/// L_n^α(±y) from the three-term recurrence.
pub fn laguerre_poly(spec: &LaguerreSpec) -> YPoly {
    let alpha = &spec.alpha;
    let x = YPoly::y();
    let mut prev = YPoly::one();
    if spec.n == 0 {
        return prev;
    }
    let mut cur = YPoly::new(vec![alpha + Scalar::one(), -Scalar::one()]);
    for k in 1..spec.n {
        let kk = int(k as i64);
        let a = YPoly::constant(int(2 * k as i64 + 1) + alpha);
        let lin = &a - &x;
        let next = &(&lin * &cur) - &prev.scale(&(&kk + alpha));
        let next = next.scale(&(Scalar::one() / int(k as i64 + 1)));
        prev = cur;
        cur = next;
    }
    match spec.arg {
        ArgSign::Plus => cur,
        ArgSign::Minus => cur.negate_arg(),
    }
}

pub fn laguerre(n: usize, alpha: &Scalar, arg: ArgSign) -> YPoly {
    laguerre_poly(&LaguerreSpec::new(n, alpha.clone(), arg))
}

/// ψ_n = r^{ℓ+1} e^{-y/2} L_n^{ℓ+1/2}(y).
pub fn classical_eigenfunction(n: usize, p: &OscParams) -> WaveFunction {
    let a = p.ell() + Scalar::one();
    let num = laguerre(n, &(p.ell() + frac(1, 2)), ArgSign::Plus);
    WaveFunction::new(Scalar::one(), a, -1, num, YPoly::one()).expect("nonzero Laguerre polynomial")
}

pub fn classical_energy(n: usize, p: &OscParams) -> Scalar {
    int(2 * n as i64) * p.omega()
}

/// r^{ℓ+1} e^{-y/2}.
pub fn classical_weight(p: &OscParams) -> WaveFunction {
    classical_eigenfunction(0, p)
}

/// ω²r²/4 + ℓ(ℓ+1)/r², that is ωy/2 + ωℓ(ℓ+1)/(2y).
pub fn radial_oscillator(p: &OscParams) -> Potential {
    let w = p.omega();
    let l = p.ell();
    let quad = crate::ratcore::YRatFun::from_poly(YPoly::monomial(w / int(2), 1));
    let centrifugal = crate::ratcore::YRatFun::inv_y(w * l * (l + Scalar::one()) / int(2));
    Potential::new(&quad + &centrifugal)
}

impl Default for OscParams {
    fn default() -> Self {
        OscParams {
            omega: Scalar::one(),
            ell: Scalar::zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_and_small_cases() {
        assert_eq!(laguerre(0, &frac(7, 3), ArgSign::Plus), YPoly::one());
        assert_eq!(
            laguerre(1, &frac(1, 2), ArgSign::Plus),
            YPoly::new(vec![frac(3, 2), int(-1)])
        );
        assert_eq!(
            laguerre(1, &frac(-5, 2), ArgSign::Minus),
            YPoly::new(vec![frac(-3, 2), int(1)])
        );
    }

    #[test]
    fn classical_objects() {
        let p = OscParams::new(int(2), int(0)).unwrap();
        let psi = classical_eigenfunction(1, &p);
        assert_eq!(psi.num(), &YPoly::new(vec![int(3), int(-2)]).scale(&frac(1, 2)));
        assert_eq!(psi.a(), &int(1));
        let g = classical_eigenfunction(0, &p);
        assert_eq!((g.num(), g.den(), g.s()), (&YPoly::one(), &YPoly::one(), -1));
        assert_eq!(classical_energy(0, &p), int(0));
        assert_eq!(classical_energy(3, &p), int(12));
        let half_omega = OscParams::new(frac(1, 2), int(0)).unwrap();
        assert_eq!(classical_energy(1, &half_omega), int(1));
        assert!(OscParams::new(int(0), int(1)).is_err());
    }
}
