use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::residues::ResidueChoice;
use crate::deform1::{gen1_alpha, polynomial_eigensolution, xm_eop_with_alpha, EopKind, XmEop};
use crate::error::{Error, Result};
use crate::laguerre::{ArgSign, OscParams};
use crate::ratcore::{int, serial::scalar_str, Scalar, YPoly, YRatFun};
use crate::susy::Superpotential;

/// Limit of a rational function as y → ∞, `None` if it diverges.
fn limit_at_infinity(f: &YRatFun) -> Option<Scalar> {
    if f.is_zero() {
        return Some(Scalar::zero());
    }
    let dn = f.num().degree()?;
    let dd = f.den().degree()?;
    match dn.cmp(&dd) {
        std::cmp::Ordering::Less => Some(Scalar::zero()),
        std::cmp::Ordering::Equal => Some(f.num().leading() / f.den().leading()),
        std::cmp::Ordering::Greater => None,
    }
}

/// The fixed part F = b/r + c·r + d·∂_r ln S of φ for a residue selection.
pub fn fixed_part(choice: &ResidueChoice, seed: &YPoly, omega: &Scalar) -> Superpotential {
    Superpotential::new(choice.b1.clone(), &choice.c1 / omega).with_log(choice.d1.clone(), seed)
}

/// Linear equation for the moving-pole polynomial P of φ = F − ∂_r ln P:
///
/// 2ωy P″ + ω(1 − 2u − 4y K_U) P′ + (G − R₂) P = 0,
///
/// with u = b + invR(W̃), U = F + W̃ = u/r + ωr·K_U and G = F² + 2W̃F − F′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnEquation {
    omega: Scalar,
    u: Scalar,
    k_u: YRatFun,
    g: YRatFun,
}

/// Large-y behaviour of the coefficients of the P equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PnLeading {
    /// 1 − 2u, the indicial term at y = 0.
    #[serde(with = "scalar_str")]
    pub indicial: Scalar,
    /// lim K_U, `None` when unbounded.
    #[serde(with = "crate::deform2::opt_scalar")]
    pub drift: Option<Scalar>,
    /// lim G, `None` when unbounded.
    #[serde(with = "crate::deform2::opt_scalar")]
    pub mass: Option<Scalar>,
}

impl PnEquation {
    pub fn new(wt: &Superpotential, fixed: &Superpotential, omega: &Scalar) -> Self {
        let u = fixed.inv_r() + wt.inv_r();
        let k_u = wt.sum(fixed).k_part();
        let g = &(&fixed.square(omega) + &fixed.product(wt, omega).scale(&int(2))) - &fixed.derivative(omega);
        PnEquation {
            omega: omega.clone(),
            u,
            k_u,
            g,
        }
    }

    pub fn from_choice(wt: &Superpotential, choice: &ResidueChoice, seed: &YPoly, omega: &Scalar) -> Self {
        Self::new(wt, &fixed_part(choice, seed, omega), omega)
    }

    pub fn g(&self) -> &YRatFun {
        &self.g
    }

    pub fn leading(&self) -> PnLeading {
        PnLeading {
            indicial: Scalar::one() - int(2) * &self.u,
            drift: limit_at_infinity(&self.k_u),
            mass: limit_at_infinity(&self.g),
        }
    }

    /// Left side of the equation divided by P.
    pub fn residual(&self, p: &YPoly, r2: &Scalar) -> Result<YRatFun> {
        let w = &self.omega;
        let d1 = YRatFun::from_poly(p.derivative());
        let d2 = YRatFun::from_poly(p.derivative().derivative());
        let y = YRatFun::y();
        let drift = &YRatFun::constant(w * (Scalar::one() - int(2) * &self.u))
            - &(&y * &self.k_u).scale(&(int(4) * w));
        let lhs = &(&(&y * &d2).scale(&(int(2) * w)) + &(&drift * &d1))
            + &(&self.g - &YRatFun::constant(r2.clone())).mul_poly(p);
        lhs.checked_div(&YRatFun::from_poly(p.clone()))
    }

    /// Monic degree-`n` polynomial solution and its R₂, by clearing the
    /// common denominator of K_U and G.
    pub fn solve(&self, n: usize) -> Result<(YPoly, Scalar)> {
        let w = self.omega.clone();
        let g_den = self.g.den().clone();
        let k_den = self.k_u.den().clone();
        let common = YPoly::gcd(&g_den, &k_den);
        let m = &g_den * &k_den.div_exact(&common).expect("gcd divides");
        let mk = YRatFun::from_poly(m.clone());
        let mg = (&mk * &self.g).as_poly().expect("common denominator clears G");
        let m_ku = (&mk * &self.k_u).as_poly().expect("common denominator clears K_U");
        let base = YPoly::constant(&w * (Scalar::one() - int(2) * &self.u));
        let drift = &(&m * &base) - &(&YPoly::monomial(int(4) * &w, 1) * &m_ku);
        let op = |p: &YPoly| {
            let d1 = p.derivative();
            let second = &(&YPoly::monomial(int(2) * &w, 1) * &d1.derivative()) * &m;
            &(&second + &(&drift * &d1)) + &(&mg * p)
        };
        polynomial_eigensolution(op, &m, n)
    }
}

/// Moving-pole polynomial of a second-generation family with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PnSolution {
    pub eop: XmEop,
    #[serde(with = "scalar_str")]
    pub r2: Scalar,
}

/// ℓ as a function of the family reparameterization: ℓ = −x − 1.
pub fn gen2_ell(reparam: &Scalar) -> Scalar {
    -(reparam + Scalar::one())
}

/// Closed-form P_N and R₂ for m = 1:
///
/// - family 1: L^{I,α₁}_{1,n′}(y), R₂ = −2ω(n′ + d + 3/2)
/// - family 2: L^{II,α₂}_{1,n′}(−y), R₂ = 2ω(n′ + a + 1/2)
/// - family 3: L^{I,α₃}_{1,n′}(−y), R₂ = 2ω(n′ + b + 3/2)
pub fn closed_form_pn(i: u8, nprime: usize, reparam: &Scalar, omega: &Scalar) -> Result<PnSolution> {
    let p = OscParams::new(omega.clone(), gen2_ell(reparam))?;
    let alpha = gen1_alpha(i, &p)?;
    let n = int(nprime as i64);
    let (kind, arg, r2) = match i {
        1 => (EopKind::I, ArgSign::Plus, -(n + reparam + crate::ratcore::frac(3, 2))),
        2 => (EopKind::II, ArgSign::Minus, n + reparam + crate::ratcore::half()),
        _ => (EopKind::I, ArgSign::Minus, n + reparam + crate::ratcore::frac(3, 2)),
    };
    Ok(PnSolution {
        eop: xm_eop_with_alpha(kind, 1, nprime, &alpha, arg),
        r2: int(2) * omega * r2,
    })
}

/// Closed-form P_N, certified by the P equation of the published residue
/// selection: it must solve it exactly with the stated R₂ and the
/// independent polynomial solve must agree up to scale.
pub fn solve_pn(i: u8, nprime: usize, reparam: &Scalar, omega: &Scalar) -> Result<PnSolution> {
    let closed = closed_form_pn(i, nprime, reparam, omega)?;
    let p = OscParams::new(omega.clone(), gen2_ell(reparam))?;
    let parent = crate::deform1::Gen1Family::new_unchecked(i, 1, &p)?;
    let choice = super::residues::published_residue_choice(i, p.ell(), omega)?;
    let eq = PnEquation::from_choice(&parent.deformed_superpotential(), &choice, &parent.seed_poly(), omega);
    let key = || format!("i={i},nprime={nprime},reparam={reparam}");
    if closed.eop.poly.degree() != Some(nprime + 1) {
        return Err(Error::Identification(format!("{}: closed form has degree {:?}", key(), closed.eop.poly.degree())));
    }
    if !eq.residual(&closed.eop.poly, &closed.r2)?.is_zero() {
        return Err(Error::Identification(format!("{}: closed form does not solve the P equation", key())));
    }
    let (derived, r2) = eq.solve(nprime + 1)?;
    if r2 != closed.r2 || derived != closed.eop.poly.monic() {
        return Err(Error::Identification(format!("{}: polynomial solve disagrees with closed form", key())));
    }
    Ok(closed)
}
