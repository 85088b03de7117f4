use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratcore::{int, serial::scalar_str, Scalar};
use crate::susy::Superpotential;

/// Both roots of ρ² + linear·ρ + constant = 0, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResiduePair {
    #[serde(with = "scalar_str")]
    pub linear: Scalar,
    #[serde(with = "scalar_str")]
    pub constant: Scalar,
    pub values: [ScalarValue; 2],
}

/// Serializable scalar newtype used inside fixed-size arrays.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ScalarValue(#[serde(with = "scalar_str")] pub Scalar);

fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Scalar::new(root(x.numer())?, root(x.denom())?))
}

impl ResiduePair {
    pub fn from_quadratic(linear: Scalar, constant: Scalar) -> Result<Self> {
        let disc = &linear * &linear - int(4) * &constant;
        let s = rational_sqrt(&disc)
            .ok_or_else(|| Error::Degenerate(format!("residue quadratic has irrational roots (discriminant {disc})")))?;
        let lo = (-&linear - &s) / int(2);
        let hi = (-&linear + &s) / int(2);
        Ok(ResiduePair {
            linear,
            constant,
            values: [ScalarValue(lo), ScalarValue(hi)],
        })
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        self.values.iter().any(|v| v.0 == *x)
    }

    pub fn roots(&self) -> [Scalar; 2] {
        [self.values[0].0.clone(), self.values[1].0.clone()]
    }

    /// Vieta: the roots sum to −linear and multiply to constant.
    pub fn vieta_holds(&self) -> bool {
        let [a, b] = self.roots();
        &a + &b == -&self.linear && &a * &b == self.constant
    }

    /// Set equality with a printed pair.
    pub fn matches(&self, printed: &[Scalar; 2]) -> bool {
        let mut mine = self.roots().to_vec();
        let mut theirs = printed.to_vec();
        mine.sort();
        theirs.sort();
        mine == theirs
    }
}

/// Dual residues of the second-iteration Riccati equation, one pair per
/// pole class: the origin, the fixed poles of the seed, the moving poles and
/// infinity (coefficient of r, including ω). `analytic[k]` is the constant
/// part forced by choosing the k-th root at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSet {
    pub b1: ResiduePair,
    pub d1: Option<ResiduePair>,
    pub d1p: ResiduePair,
    pub c1: ResiduePair,
    pub analytic: [ScalarValue; 2],
}

/// One residue picked from each pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueChoice {
    #[serde(with = "scalar_str")]
    pub b1: Scalar,
    #[serde(with = "scalar_str")]
    pub d1: Scalar,
    #[serde(with = "scalar_str")]
    pub d1p: Scalar,
    #[serde(with = "scalar_str")]
    pub c1: Scalar,
}

impl ResidueChoice {
    pub fn new(b1: Scalar, d1: Scalar, d1p: Scalar, c1: Scalar) -> Self {
        ResidueChoice { b1, d1, d1p, c1 }
    }

    pub fn fits(&self, set: &ResidueSet) -> bool {
        set.b1.contains(&self.b1)
            && set.d1.as_ref().map_or(self.d1.is_zero(), |p| p.contains(&self.d1))
            && set.d1p.contains(&self.d1p)
            && set.c1.contains(&self.c1)
    }
}

/// Laurent matching of φ² + 2W̃φ − φ′ − R₂ = 0 at each pole class of W̃:
/// ρ² + (2·invR + 1)ρ = 0 at the origin, ρ² + (2σ + 1)ρ = 0 at a simple
/// pole of W̃ with residue σ, ρ² + ρ = 0 where W̃ is regular, and
/// c² + 2ω·linR·c = 0 at infinity.
pub fn enumerate_residues(wt: &Superpotential, omega: &Scalar) -> Result<ResidueSet> {
    let zero = Scalar::zero();
    let b1 = ResiduePair::from_quadratic(int(2) * wt.inv_r() + Scalar::one(), zero.clone())?;
    let d1 = match wt.logs() {
        [] => None,
        [t] => Some(ResiduePair::from_quadratic(int(2) * &t.weight + Scalar::one(), zero.clone())?),
        _ => {
            return Err(Error::Degenerate(
                "residue enumeration expects a single seed log term".into(),
            ))
        }
    };
    let d1p = ResiduePair::from_quadratic(Scalar::one(), zero.clone())?;
    let c1 = ResiduePair::from_quadratic(int(2) * omega * wt.lin_r(), zero)?;
    let analytic = [
        ScalarValue(analytic_constant(wt, &c1.values[0].0, omega)?),
        ScalarValue(analytic_constant(wt, &c1.values[1].0, omega)?),
    ];
    Ok(ResidueSet {
        b1,
        d1,
        d1p,
        c1,
        analytic,
    })
}

/// The constant part C of φ: the coefficient of r in the large-r expansion
/// of the Riccati residual is 2C(c + ω·linR), so C = 0 unless that factor
/// vanishes.
pub fn analytic_constant(wt: &Superpotential, c: &Scalar, omega: &Scalar) -> Result<Scalar> {
    let factor = int(2) * (c + omega * wt.lin_r());
    if factor.is_zero() {
        return Err(Error::Degenerate(
            "analytic part undetermined by coefficient matching".into(),
        ));
    }
    Ok(Scalar::zero())
}

/// The selections used to build the three second-generation families.
pub fn published_residue_choice(i: u8, ell: &Scalar, omega: &Scalar) -> Result<ResidueChoice> {
    let one = Scalar::one();
    let zero = Scalar::zero();
    match i {
        1 | 3 => Ok(ResidueChoice::new(int(2) * ell + &one, zero.clone(), -one, zero)),
        2 => Ok(ResidueChoice::new(zero.clone(), zero, -one, -omega.clone())),
        _ => Err(Error::FamilyIndex(i, "1..3")),
    }
}

/// The selection that turns W̃ into the conventional superpotential, that is
/// −∂ ln of the lowest tower state.
pub fn conventional_residue_choice(wt: &Superpotential, ell: &Scalar, omega: &Scalar) -> ResidueChoice {
    ResidueChoice::new(
        -(ell + Scalar::one()) - wt.inv_r(),
        Scalar::zero(),
        -Scalar::one(),
        omega * (crate::ratcore::half() - wt.lin_r()),
    )
}
