//! JSON form shared by every serialized polynomial:
//! `{"var": "y", "coeffs": [["num", "den"], ...]}` in ascending powers.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::YPoly;
use super::ratfun::YRatFun;
use super::scalar::{format_scalar, parse_scalar, Scalar};

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    var: String,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for YPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            var: "y".into(),
            coeffs: self
                .coeffs()
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for YPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        if repr.var != "y" {
            return Err(D::Error::custom(format!("unsupported variable `{}`", repr.var)));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n: BigInt = n.parse().map_err(D::Error::custom)?;
                let d: BigInt = d.parse().map_err(D::Error::custom)?;
                if d.sign() != num_bigint::Sign::Plus {
                    return Err(D::Error::custom("denominator must be positive"));
                }
                Ok(Scalar::new(n, d))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(YPoly::new(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFunRepr {
    num: YPoly,
    den: YPoly,
}

impl Serialize for YRatFun {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFunRepr {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for YRatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RatFunRepr::deserialize(d)?;
        YRatFun::reduce(repr.num, repr.den).map_err(D::Error::custom)
    }
}

/// Serde adapter for scalars as `"p/q"` strings.
pub mod scalar_str {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let text = String::deserialize(d)?;
        parse_scalar(&text).map_err(D::Error::custom)
    }
}

pub fn poly_to_json(p: &YPoly) -> String {
    serde_json::to_string(p).expect("polynomial serializes")
}

pub fn poly_from_json(text: &str) -> crate::error::Result<YPoly> {
    serde_json::from_str(text).map_err(|e| crate::error::Error::Serial(e.to_string()))
}
