#![allow(dead_code)]

use proptest::prelude::*;
use xlaguerre::laguerre::{ArgSign, OscParams};
use xlaguerre::ratcore::{frac, int, Scalar, YPoly};

/// Σ_k binom(n+α, n−k) (−x)^k / k!, with x = ±y.
pub fn laguerre_series(n: usize, alpha: &Scalar, arg: ArgSign) -> YPoly {
    let binom = |z: &Scalar, j: usize| -> Scalar {
        let mut acc = int(1);
        for t in 0..j {
            acc = acc * (z - int(t as i64)) / int(t as i64 + 1);
        }
        acc
    };
    let top = int(n as i64) + alpha;
    let mut coeffs = Vec::new();
    let mut fact = int(1);
    for k in 0..=n {
        if k > 0 {
            fact *= int(k as i64);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 } * if arg == ArgSign::Minus && k % 2 == 1 { -1 } else { 1 };
        coeffs.push(binom(&top, n - k) * int(sign) / &fact);
    }
    YPoly::new(coeffs)
}

pub fn params(omega: (i64, i64), ell: (i64, i64)) -> OscParams {
    OscParams::new(frac(omega.0, omega.1), frac(ell.0, ell.1)).unwrap()
}

pub fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

pub fn poly_strategy(max_len: usize) -> impl Strategy<Value = YPoly> {
    prop::collection::vec(scalar_strategy(), 0..=max_len).prop_map(YPoly::new)
}

pub fn nonzero_poly_strategy(max_len: usize) -> impl Strategy<Value = YPoly> {
    poly_strategy(max_len).prop_filter("nonzero", |p| !p.is_zero())
}
