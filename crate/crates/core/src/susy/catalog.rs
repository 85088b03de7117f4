use num_traits::One;

use super::superpotential::Superpotential;
use crate::error::{Error, Result};
use crate::laguerre::OscParams;
use crate::ratcore::{frac, Scalar};

fn check_index(i: u8) -> Result<()> {
    if (1..=4).contains(&i) {
        Ok(())
    } else {
        Err(Error::FamilyIndex(i, "1..4"))
    }
}

/// The four radial oscillator superpotentials ±ωr/2 + (−(ℓ+1) or ℓ)/r.
pub fn catalog_superpotential(i: u8, p: &OscParams) -> Result<Superpotential> {
    check_index(i)?;
    let l = p.ell();
    let lin = if i <= 2 { frac(1, 2) } else { frac(-1, 2) };
    let inv = if i % 2 == 1 { -(l + Scalar::one()) } else { l.clone() };
    Ok(Superpotential::new(inv, lin))
}

/// ℓ after one shape-invariant step: ℓ+1 for rows 1 and 3, ℓ−1 for rows 2 and 4.
pub fn shifted_ell(i: u8, p: &OscParams) -> Result<Scalar> {
    check_index(i)?;
    Ok(if i % 2 == 1 {
        p.ell() + Scalar::one()
    } else {
        p.ell() - Scalar::one()
    })
}

/// c with V⁻ᵢ = ω²r²/4 + ℓ(ℓ+1)/r² + c.
pub fn oscillator_offset(i: u8, p: &OscParams) -> Result<Scalar> {
    check_index(i)?;
    let l = p.ell();
    let c = match i {
        1 => -(l + frac(3, 2)),
        2 => l - frac(1, 2),
        3 => l + frac(3, 2),
        _ => -(l - frac(1, 2)),
    };
    Ok(c * p.omega())
}

/// The constant V⁺(ℓ) − V⁻(ℓ shifted); errors if the difference depends on r.
pub fn shape_invariance_shift(i: u8, p: &OscParams) -> Result<Scalar> {
    let (_, vp) = catalog_superpotential(i, p)?.partner_potentials(p.omega());
    let shifted = p.with_ell(shifted_ell(i, p)?);
    let (vm, _) = catalog_superpotential(i, &shifted)?.partner_potentials(p.omega());
    let diff = &vp - &vm;
    diff.value
        .as_constant()
        .ok_or_else(|| Error::NotConstant(diff.value.to_string()))
}
