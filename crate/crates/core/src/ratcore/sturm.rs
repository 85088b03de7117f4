use num_traits::{Signed, Zero};

use super::poly::YPoly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Finite(Scalar),
    /// Just above zero: a root at 0 itself is excluded.
    ZeroPlus,
    PosInfinity,
}

impl Bound {
    fn finite(&self) -> Option<Scalar> {
        match self {
            Bound::Finite(x) => Some(x.clone()),
            Bound::ZeroPlus => Some(Scalar::zero()),
            Bound::PosInfinity => None,
        }
    }
}

/// Sturm chain of a square-free polynomial, scaled by positive constants only.
fn sturm_chain(p: &YPoly) -> Vec<YPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let (content, _) = r.primitive_part();
        chain.push(r.scale(&(-Scalar::from_integer(1.into()) / content.abs())));
    }
    chain
}

fn variations_at(chain: &[YPoly], x: Option<&Scalar>) -> usize {
    let mut signs = chain.iter().filter_map(|q| {
        let v = match x {
            Some(x) => q.eval(x),
            None => q.leading(),
        };
        (!v.is_zero()).then(|| v.is_positive())
    });
    let Some(mut prev) = signs.next() else {
        return 0;
    };
    let mut count = 0;
    for s in signs {
        if s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &YPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lo_x = match lo {
        Bound::PosInfinity => return Err(Error::EmptyInterval),
        b => b.finite().expect("finite lower bound"),
    };
    let hi_x = hi.finite();
    if let Some(h) = &hi_x {
        if *h <= lo_x {
            return Err(Error::EmptyInterval);
        }
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let g = YPoly::gcd(p, &p.derivative());
    let mut q = p.div_exact(&g).expect("gcd divides");
    for x in std::iter::once(&lo_x).chain(hi_x.iter()) {
        while q.degree().unwrap_or(0) > 0 && q.eval(x).is_zero() {
            q = q.div_exact(&YPoly::linear_root(x)).expect("root divides");
        }
    }
    if q.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&q);
    let v_lo = variations_at(&chain, Some(&lo_x));
    let v_hi = variations_at(&chain, hi_x.as_ref());
    Ok(v_lo - v_hi)
}

/// Roots in `(0, +inf)`.
pub fn positive_root_count(p: &YPoly) -> Result<usize> {
    sturm_count(p, &Bound::ZeroPlus, &Bound::PosInfinity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::scalar::{frac, int};

    fn p(c: &[i64]) -> YPoly {
        YPoly::from_ints(c)
    }

    #[test]
    fn counts_examples() {
        assert_eq!(positive_root_count(&p(&[2, -3, 1])).unwrap(), 2);
        assert_eq!(positive_root_count(&p(&[1, 0, 1])).unwrap(), 0);
        let q = YPoly::new(vec![frac(3, 8), frac(-1, 2), frac(1, 2)]);
        assert_eq!(positive_root_count(&q).unwrap(), 0);
    }

    #[test]
    fn endpoint_and_multiplicity_handling() {
        // y^2 (y-1)^2 (y+2)
        let q = &(&p(&[0, 0, 1]) * &p(&[1, -2, 1])) * &p(&[2, 1]);
        assert_eq!(positive_root_count(&q).unwrap(), 1);
        assert_eq!(
            sturm_count(&q, &Bound::Finite(int(-3)), &Bound::PosInfinity).unwrap(),
            3
        );
        assert_eq!(
            sturm_count(&q, &Bound::Finite(int(-3)), &Bound::Finite(int(1))).unwrap(),
            2
        );
        assert_eq!(sturm_count(&p(&[5]), &Bound::ZeroPlus, &Bound::PosInfinity).unwrap(), 0);
    }

    #[test]
    fn errors() {
        assert_eq!(positive_root_count(&YPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(
            sturm_count(&p(&[1, 1]), &Bound::Finite(int(2)), &Bound::Finite(int(1))),
            Err(Error::EmptyInterval)
        );
    }
}
