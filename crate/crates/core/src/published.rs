//! Printed closed forms, transcribed as written.
//!
//! Nothing here is used to construct objects; these exist so derived results
//! can be compared against the printed expressions and mismatches reported.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laguerre::OscParams;
use crate::ratcore::{frac, int, Scalar, YPoly, YRatFun};
use crate::laguerre::{laguerre, ArgSign};
use crate::susy::{Potential, Superpotential, SuperpotentialParts};

/// ω²r²/4 + k/r² + c in y-form.
pub fn oscillator_like(p: &OscParams, k: &Scalar, c: &Scalar) -> Potential {
    let w = p.omega();
    let quad = YRatFun::from_poly(YPoly::new(vec![c.clone(), w / int(2)]));
    Potential::new(&quad + &YRatFun::inv_y(w * k / int(2)))
}

/// Printed (V⁻ᵢ, V⁺ᵢ) for the four oscillator superpotentials.
pub fn printed_partners(i: u8, p: &OscParams) -> Result<(Potential, Potential)> {
    let l = p.ell();
    let w = p.omega();
    let one = Scalar::one();
    let centrifugal = l * (l + &one);
    let up = (l + &one) * (l + int(2));
    let down = l * (l - &one);
    let (c_minus, k_plus, c_plus) = match i {
        1 => (-(l + frac(3, 2)), up, -(l + frac(1, 2))),
        2 => (l - frac(1, 2), down, l + frac(1, 2)),
        3 => (l + frac(3, 2), up, l + frac(1, 2)),
        4 => (-(l - frac(1, 2)), down, -(l + frac(1, 2))),
        _ => return Err(Error::FamilyIndex(i, "1..4")),
    };
    Ok((
        oscillator_like(p, &centrifugal, &(c_minus * w)),
        oscillator_like(p, &k_plus, &(c_plus * w)),
    ))
}

/// Printed type-II form (ℓ+1/2)·L_m^{α₃+1}(y)·L_n^{−α₃}(y) + 2y·L_m^{α₃}(y)·L_n^{−α₃}′(y).
pub fn printed_type_two(m: usize, n: usize, p: &OscParams) -> YPoly {
    let a3 = -(p.ell() + frac(3, 2));
    let ln = laguerre(n, &-&a3, ArgSign::Plus);
    let first = (&laguerre(m, &(&a3 + int(1)), ArgSign::Plus) * &ln).scale(&(p.ell() + frac(1, 2)));
    let second = &(&YPoly::monomial(int(2), 1) * &laguerre(m, &a3, ArgSign::Plus)) * &ln.derivative();
    &first + &second
}

/// Printed X_1 type-I equation applied to `poly` at parameter g:
/// z L″ + (−z + g + 3/2 − 2z S′/S) L′ + (−2z T′/S + n′ + 1) L with
/// S = L_1^{g−1/2}(z), T = L_1^{g+1/2}(z).
pub fn l1_ode_printed_residual(g: &Scalar, nprime: usize, poly: &YPoly) -> YRatFun {
    let z = YPoly::y();
    let s = laguerre(1, &(g - frac(1, 2)), ArgSign::Plus);
    let t = laguerre(1, &(g + frac(1, 2)), ArgSign::Plus);
    let d1 = poly.derivative();
    let d2 = d1.derivative();
    let drift = &(&YPoly::new(vec![g + frac(3, 2), int(-1)]) * &s) - &(&z * &s.derivative()).scale(&int(2));
    let mass = &s.scale(&int(nprime as i64 + 1)) - &(&z * &t.derivative()).scale(&int(2));
    let num = &(&(&(&z * &d2) * &s) + &(&drift * &d1)) + &(&mass * poly);
    YRatFun::reduce(num, s).expect("nonzero seed")
}

fn w1_parts(p: &OscParams) -> SuperpotentialParts {
    SuperpotentialParts::new(-(p.ell() + Scalar::one()), YRatFun::constant(frac(1, 2)))
}

/// ∂_r num(y) / den(y) in K-form, that is num′(y)/den(y).
fn ratio_term(num: &YPoly, den: &YPoly) -> YRatFun {
    YRatFun::reduce(num.derivative(), den.clone()).expect("nonzero polynomial")
}

/// Printed conventional superpotential rows.
pub fn printed_conventional_row(i: u8, m: usize, p: &OscParams) -> Result<SuperpotentialParts> {
    use ArgSign::{Minus, Plus};
    let l = p.ell();
    let a1 = -(l + frac(3, 2));
    let a2 = l - frac(1, 2);
    let a3 = a1.clone();
    let base = w1_parts(p);
    let (plus, minus) = match i {
        1 => {
            let s = laguerre(m, &a1, Minus);
            let t = laguerre(m + 1, &(&a1 - int(1)), Minus);
            (ratio_term(&s, &s), ratio_term(&t, &t))
        }
        2 => {
            let s = laguerre(m, &a2, Minus);
            let t = laguerre(m, &(&a2 + int(1)), Minus);
            (ratio_term(&s, &s), ratio_term(&t, &t))
        }
        3 => {
            let t = laguerre(m, &(&a3 + int(1)), Plus);
            (
                ratio_term(&laguerre(m, &a3, Minus), &laguerre(m, &a2, Minus)),
                ratio_term(&t, &t),
            )
        }
        _ => return Err(Error::FamilyIndex(i, "1..3")),
    };
    Ok(SuperpotentialParts::new(base.inv_r, &(&base.k + &plus) - &minus))
}

/// Printed residue pairs (b₁, d₁, d′₁, c₁) of the second iteration.
pub fn gen2_residue_sets(i: u8, p: &OscParams) -> Result<[[Scalar; 2]; 4]> {
    let z = Scalar::zero();
    let b = int(2) * p.ell() + Scalar::one();
    let w = p.omega().clone();
    let moving = [z.clone(), int(-1)];
    match i {
        1 => Ok([[z.clone(), b], [z.clone(), int(-3)], moving, [z, -w]]),
        2 => Ok([[z.clone(), -b], [z.clone(), int(-3)], moving, [z, -w]]),
        3 => Ok([[z.clone(), b], [z.clone(), int(3)], moving, [z, w]]),
        _ => Err(Error::FamilyIndex(i, "1..3")),
    }
}

/// Printed R₂: −2ω(−n′+d+3/2), 2ω(a+1/2+n′), 2ω(n′+b+3/2).
pub fn gen2_r2(i: u8, nprime: usize, reparam: &Scalar, omega: &Scalar) -> Result<Scalar> {
    let n = int(nprime as i64);
    let k = match i {
        1 => -(-n + reparam + frac(3, 2)),
        2 => reparam + frac(1, 2) + n,
        3 => n + reparam + frac(3, 2),
        _ => return Err(Error::FamilyIndex(i, "1..3")),
    };
    Ok(int(2) * omega * k)
}

/// Printed family-2 polynomial
/// (a+1/2)·L_1^{β+1}(−y)·L_{n′}^{−β}(−y) + 2y·L_1^β(−y)·∂_y[L_{n′}^{−β}(−y)], β = −a−3/2.
pub fn gen2_type_two(nprime: usize, a: &Scalar) -> YPoly {
    let beta = -(a + frac(3, 2));
    let ln = laguerre(nprime, &-&beta, ArgSign::Minus);
    let first = (&laguerre(1, &(&beta + int(1)), ArgSign::Minus) * &ln).scale(&(a + frac(1, 2)));
    let second = &(&YPoly::monomial(int(2), 1) * &laguerre(1, &beta, ArgSign::Minus)) * &ln.derivative();
    &first + &second
}

/// Printed W̄ᵢ with moving-pole polynomial `pn`:
/// ωr/2 − ℓ/r (family 1) or −ωr/2 + ℓ/r (families 2, 3), plus ∂ ln S − ∂ ln P.
pub fn gen2_superpotential(i: u8, p: &OscParams, pn: &YPoly) -> Result<Superpotential> {
    use ArgSign::{Minus, Plus};
    let l = p.ell();
    let (inv_r, lin_r, seed) = match i {
        1 => (-l.clone(), frac(1, 2), laguerre(1, &-(l + frac(3, 2)), Minus)),
        2 => (l.clone(), frac(-1, 2), laguerre(1, &(l - frac(1, 2)), Minus)),
        3 => (l.clone(), frac(-1, 2), laguerre(1, &-(l + frac(3, 2)), Plus)),
        _ => return Err(Error::FamilyIndex(i, "1..3")),
    };
    Ok(Superpotential::new(inv_r, lin_r)
        .with_log(Scalar::one(), &seed)
        .with_log(-Scalar::one(), pn))
}

/// Printed V̄ᵢ⁺:
///
/// - family 1: V₁⁺ + 2∂_r((2ℓ+1)/r − ∂_r ln P) + 2ω(ℓ−n′−1/2)
/// - family 2: V₂⁺ − 2∂²_r ln P + 2ω(n′+a+1/2)
/// - family 3: V₃⁺ − 2∂²_r ln P + 2ω(n′−ℓ+1/2)
pub fn gen2_potential(i: u8, nprime: usize, p: &OscParams, pn: &YPoly) -> Result<Potential> {
    let w = p.omega();
    let l = p.ell();
    let n = int(nprime as i64);
    let (_, vplus) = printed_partners(i, p)?;
    let (correction, constant) = match i {
        1 => (
            Superpotential::new(int(2) * l + Scalar::one(), Scalar::zero()).with_log(-Scalar::one(), pn),
            l - &n - frac(1, 2),
        ),
        2 => (
            Superpotential::zero().with_log(-Scalar::one(), pn),
            // a = −ℓ−1
            &n - l - frac(1, 2),
        ),
        3 => (Superpotential::zero().with_log(-Scalar::one(), pn), &n - l + frac(1, 2)),
        _ => return Err(Error::FamilyIndex(i, "1..3")),
    };
    let extra = &correction.derivative(w).scale(&int(2)) + &YRatFun::constant(int(2) * w * constant);
    Ok(Potential::new(&vplus.value + &extra))
}

/// Printed two-index numerators with first-generation numerator `e` and
/// moving-pole polynomial `pn`, using r∂_r = 2y∂_y:
///
/// - family 1: (2ℓ+1)·P·E + 2y·P·E′ − 2y·E·P′
/// - family 2: (2ℓ+1−2y)·E·P − 2y·P·E′ − 2y·E·P′
/// - family 3: (2ℓ+1−2y)·P·E + 2y·P·E′ − 2y·E·P′
pub fn gen2_two_index(i: u8, p: &OscParams, e: &YPoly, pn: &YPoly) -> Result<YPoly> {
    let c = int(2) * p.ell() + Scalar::one();
    let two_y = YPoly::monomial(int(2), 1);
    let pe = &(pn * &e.derivative()) * &two_y;
    let ep = &(e * &pn.derivative()) * &two_y;
    let (lead, sign) = match i {
        1 => (YPoly::constant(c), 1),
        2 => (YPoly::new(vec![c, int(-2)]), -1),
        3 => (YPoly::new(vec![c, int(-2)]), 1),
        _ => return Err(Error::FamilyIndex(i, "1..3")),
    };
    Ok(&(&(&(&lead * pn) * e) + &pe.scale(&int(sign))) - &ep)
}

/// Printed Ē: 2ω(n−n′+ℓ+1/2), 2ω(n+n′−ℓ+1/2), 2ω(n+n′−ℓ−1/2).
pub fn gen2_energy(i: u8, n: usize, nprime: usize, p: &OscParams) -> Result<Scalar> {
    let n = int(n as i64);
    let np = int(nprime as i64);
    let l = p.ell();
    let k = match i {
        1 => n - np + l + frac(1, 2),
        2 => n + np - l + frac(1, 2),
        3 => n + np - l - frac(1, 2),
        _ => return Err(Error::FamilyIndex(i, "1..3")),
    };
    Ok(int(2) * p.omega() * k)
}
