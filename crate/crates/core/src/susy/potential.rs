use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::ratcore::{serial::scalar_str, to_f64, Scalar, YRatFun};

/// A potential written as a rational function of y = ωr²/2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Potential {
    pub value: YRatFun,
}

impl Potential {
    pub fn new(value: YRatFun) -> Self {
        Potential { value }
    }

    pub fn zero() -> Self {
        Potential::new(YRatFun::zero())
    }

    pub fn shifted(&self, c: &Scalar) -> Self {
        Potential::new(&self.value + &YRatFun::constant(c.clone()))
    }

    /// The constant `self - other`, if the difference is constant.
    pub fn constant_offset(&self, other: &Potential) -> Option<Scalar> {
        (&self.value - &other.value).as_constant()
    }

    pub fn eval_f64(&self, r: f64, omega: &Scalar) -> f64 {
        self.value.eval_f64(to_f64(omega) * r * r / 2.0)
    }
}

impl Add for &Potential {
    type Output = Potential;
    fn add(self, rhs: &Potential) -> Potential {
        Potential::new(&self.value + &rhs.value)
    }
}

impl Sub for &Potential {
    type Output = Potential;
    fn sub(self, rhs: &Potential) -> Potential {
        Potential::new(&self.value - &rhs.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub n: usize,
    #[serde(with = "scalar_str")]
    pub value: Scalar,
}
