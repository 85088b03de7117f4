use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laguerre::{laguerre, ArgSign, OscParams};
use crate::ratcore::{int, serial::scalar_str, Scalar, YPoly, YRatFun};

/// The three X_m exceptional Laguerre types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EopKind {
    I,
    II,
    III,
}

impl EopKind {
    pub fn label(self) -> &'static str {
        match self {
            EopKind::I => "I",
            EopKind::II => "II",
            EopKind::III => "III",
        }
    }
}

impl std::str::FromStr for EopKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "1" => Ok(EopKind::I),
            "II" | "2" => Ok(EopKind::II),
            "III" | "3" => Ok(EopKind::III),
            other => Err(Error::Config(format!("unknown polynomial type `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct XmEop {
    pub kind: EopKind,
    pub m: usize,
    pub n: usize,
    #[serde(with = "scalar_str")]
    pub alpha: Scalar,
    pub arg: ArgSign,
    pub poly: YPoly,
}

/// Bilinear forms in x, with x = y or x = −y per `arg`:
///
/// - I:   L_m^{α+1}(−x)·L_n^α(x) − L_m^α(−x)·L_n^α′(x)
/// - II:  (m+α)·L_m^{α−1}(x)·L_n^{−α}(x) − x·L_m^α(x)·L_n^{−α}′(x)
/// - III: x·L_n^{−α+1}(x)·L_m^α(−x) + (m+α)·L_m^{α−1}(−x)·L_n^{−α}(x)
pub fn xm_eop_with_alpha(kind: EopKind, m: usize, n: usize, alpha: &Scalar, arg: ArgSign) -> XmEop {
    use ArgSign::{Minus, Plus};
    let one = Scalar::one();
    let x = YPoly::y();
    let m_alpha = int(m as i64) + alpha;
    let poly = match kind {
        EopKind::I => {
            let ln = laguerre(n, alpha, Plus);
            &(&laguerre(m, &(alpha + &one), Minus) * &ln)
                - &(&laguerre(m, alpha, Minus) * &ln.derivative())
        }
        EopKind::II => {
            let ln = laguerre(n, &-alpha, Plus);
            &(&laguerre(m, &(alpha - &one), Plus) * &ln).scale(&m_alpha)
                - &(&(&x * &laguerre(m, alpha, Plus)) * &ln.derivative())
        }
        EopKind::III => {
            &(&(&x * &laguerre(n, &(&one - alpha), Plus)) * &laguerre(m, alpha, Minus))
                + &(&laguerre(m, &(alpha - &one), Minus) * &laguerre(n, &-alpha, Plus))
                    .scale(&m_alpha)
        }
    };
    let poly = match arg {
        Plus => poly,
        Minus => poly.negate_arg(),
    };
    XmEop {
        kind,
        m,
        n,
        alpha: alpha.clone(),
        arg,
        poly,
    }
}

/// The oscillator-family polynomial: I carries α₂ = ℓ−1/2, II carries
/// α₃ = −ℓ−3/2 and III carries α₁ = −ℓ−3/2.
pub fn xm_eop(kind: EopKind, m: usize, n: usize, p: &OscParams) -> XmEop {
    let alpha = match kind {
        EopKind::I => super::gen1_alpha(2, p),
        EopKind::II => super::gen1_alpha(3, p),
        EopKind::III => super::gen1_alpha(1, p),
    }
    .expect("valid family index");
    xm_eop_with_alpha(kind, m, n, &alpha, ArgSign::Plus)
}

/// Left side of the X_1 type-I equation for L(z) = L^{I,δ}_{1,n}(z):
/// z L″ + (−z + δ + 2 − 2z S′/S) L′ + (n − 1 + 2z T′/S) L, with
/// S = L_1^δ(−z) and T = L_1^{δ+1}(−z).
pub fn l1_ode_residual(delta: &Scalar, n: usize, poly: &YPoly) -> YRatFun {
    let z = YPoly::y();
    let s = laguerre(1, delta, ArgSign::Minus);
    let t = laguerre(1, &(delta + Scalar::one()), ArgSign::Minus);
    let d1 = poly.derivative();
    let d2 = d1.derivative();
    let drift = &YPoly::new(vec![delta + int(2), int(-1)]) * &s;
    let drift = &drift - &(&z * &s.derivative()).scale(&int(2));
    let mass = &s.scale(&(int(n as i64) - int(1))) + &(&z * &t.derivative()).scale(&int(2));
    let num = &(&(&(&z * &d2) * &s) + &(&drift * &d1)) + &(&mass * poly);
    YRatFun::reduce(num, s).expect("nonzero seed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::frac;

    #[test]
    fn type_one_example() {
        let p = OscParams::new(int(2), int(1)).unwrap();
        let e = xm_eop(EopKind::I, 1, 1, &p);
        let expected = &(&YPoly::new(vec![frac(5, 2), int(1)]) * &YPoly::new(vec![frac(3, 2), int(-1)]))
            + &YPoly::new(vec![frac(3, 2), int(1)]);
        assert_eq!(e.poly, expected);
    }
}
