use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::pn::{fixed_part, gen2_ell, solve_pn, PnEquation};
use super::residues::{published_residue_choice, ResidueChoice};
use crate::deform1::{Gen1Family, XmEop};
use crate::error::{Error, Result};
use crate::laguerre::OscParams;
use crate::ratcore::{format_scalar, int, positive_root_count, serial::scalar_str, Scalar, YPoly, YRatFun};
use crate::susy::{apply_intertwiner, Potential, Superpotential, WaveFunction};

/// Second rational extension built on an m = 1 first-generation family.
///
/// The family is labelled by (i, n′) and a reparameterization x with
/// ℓ = −x − 1: x is d for family 1, a for family 2 and b for family 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gen2Family {
    nprime: usize,
    #[serde(with = "scalar_str")]
    reparam: Scalar,
    parent: Gen1Family,
    choice: ResidueChoice,
    #[serde(with = "scalar_str")]
    r2: Scalar,
    pn: XmEop,
    pn_roots: usize,
}

/// Two-index numerator polynomial 𝒬 of a second-generation state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoIndexEop {
    pub i: u8,
    pub n: usize,
    pub nprime: usize,
    pub poly: YPoly,
}

impl Gen2Family {
    /// Builds the family only if P_N has no zeros on (0, ∞).
    pub fn new(i: u8, nprime: usize, reparam: &Scalar, omega: &Scalar) -> Result<Self> {
        let f = Self::new_unchecked(i, nprime, reparam, omega)?;
        if f.pn_roots > 0 {
            return Err(Error::InvalidFamily(f.key(), f.pn_roots));
        }
        Ok(f)
    }

    /// The second iteration is only available for m = 1.
    pub fn with_m(i: u8, m: usize, nprime: usize, reparam: &Scalar, omega: &Scalar) -> Result<Self> {
        if m != 1 {
            return Err(Error::SecondIterationM(m));
        }
        Self::new(i, nprime, reparam, omega)
    }

    pub fn new_unchecked(i: u8, nprime: usize, reparam: &Scalar, omega: &Scalar) -> Result<Self> {
        let p = OscParams::new(omega.clone(), gen2_ell(reparam))?;
        let parent = Gen1Family::new_unchecked(i, 1, &p)?;
        let choice = published_residue_choice(i, p.ell(), omega)?;
        let sol = solve_pn(i, nprime, reparam, omega)?;
        let pn_roots = positive_root_count(&sol.eop.poly)?;
        Ok(Gen2Family {
            nprime,
            reparam: reparam.clone(),
            parent,
            choice,
            r2: sol.r2,
            pn: sol.eop,
            pn_roots,
        })
    }

    pub fn i(&self) -> u8 {
        self.parent.i()
    }

    pub fn nprime(&self) -> usize {
        self.nprime
    }

    pub fn reparam(&self) -> &Scalar {
        &self.reparam
    }

    pub fn reparam_name(&self) -> &'static str {
        match self.i() {
            1 => "d",
            2 => "a",
            _ => "b",
        }
    }

    pub fn params(&self) -> &OscParams {
        self.parent.params()
    }

    pub fn ell(&self) -> &Scalar {
        self.params().ell()
    }

    fn omega(&self) -> &Scalar {
        self.params().omega()
    }

    pub fn parent(&self) -> &Gen1Family {
        &self.parent
    }

    pub fn choice(&self) -> &ResidueChoice {
        &self.choice
    }

    pub fn r1(&self) -> &Scalar {
        self.parent.r1()
    }

    pub fn r2(&self) -> &Scalar {
        &self.r2
    }

    pub fn pn(&self) -> &XmEop {
        &self.pn
    }

    pub fn pn_poly(&self) -> &YPoly {
        &self.pn.poly
    }

    pub fn pn_roots_in_domain(&self) -> usize {
        self.pn_roots
    }

    pub fn seed_roots_in_domain(&self) -> usize {
        self.parent.seed_roots_in_domain()
    }

    /// Certificate: P_N is zero-free on (0, ∞). Seed zeros are reported
    /// separately and do not enter.
    pub fn is_valid(&self) -> bool {
        self.pn_roots == 0
    }

    pub fn key(&self) -> String {
        format!(
            "gen2:i={},nprime={},{}={},omega={}",
            self.i(),
            self.nprime,
            self.reparam_name(),
            format_scalar(&self.reparam),
            format_scalar(self.omega())
        )
    }

    /// The P equation of the selected residues.
    pub fn pn_equation(&self) -> PnEquation {
        PnEquation::from_choice(
            &self.parent.deformed_superpotential(),
            &self.choice,
            &self.parent.seed_poly(),
            self.omega(),
        )
    }

    /// φ = b/r + c·r + d·∂_r ln S − ∂_r ln P_N.
    pub fn phi(&self) -> Superpotential {
        fixed_part(&self.choice, &self.parent.seed_poly(), self.omega()).with_log(-Scalar::one(), self.pn_poly())
    }

    /// W̄ = W̃ + φ.
    pub fn superpotential(&self) -> Superpotential {
        self.parent.deformed_superpotential().sum(&self.phi())
    }

    /// φ² + 2W̃φ − φ′ − R₂, identically zero for a consistent family.
    pub fn riccati_residual(&self) -> YRatFun {
        self.riccati_residual_with(&self.r2)
    }

    pub fn riccati_residual_with(&self, r2: &Scalar) -> YRatFun {
        let w = self.omega();
        let phi = self.phi();
        let wt = self.parent.deformed_superpotential();
        let lhs = &(&phi.square(w) + &phi.product(&wt, w).scale(&int(2))) - &phi.derivative(w);
        &lhs - &YRatFun::constant(r2.clone())
    }

    /// V̄⁻ = W̄² − W̄′, equal to Ṽ⁻ + R₂.
    pub fn minus_potential(&self) -> Potential {
        self.superpotential().partner_potentials(self.omega()).0
    }

    /// V̄⁺ = W̄² + W̄′, the new potential.
    pub fn potential(&self) -> Potential {
        self.superpotential().partner_potentials(self.omega()).1
    }

    pub fn reference_offset(&self) -> Scalar {
        self.parent.reference_offset()
    }

    /// V̄⁺ minus the reference offset; `energy(n)` is its spectrum.
    pub fn reference_potential(&self) -> Potential {
        self.potential().shifted(&-self.reference_offset())
    }

    pub fn first_index(&self) -> usize {
        self.parent.first_index()
    }

    /// (2ℓ+1)·P·E + 2y(P E′ − E P′) for family 1 and
    /// (2ℓ+1−2y)·P·E + 2y(P E′ − E P′) for families 2 and 3, with E the
    /// first-generation numerator of state n.
    pub fn two_index_eop(&self, n: usize) -> Result<TwoIndexEop> {
        let e = self.parent.eop(n)?.poly;
        let p = self.pn_poly();
        let c = int(2) * self.ell() + Scalar::one();
        let lead = if self.i() == 1 {
            YPoly::constant(c)
        } else {
            YPoly::new(vec![c, int(-2)])
        };
        let wronskian = &(p * &e.derivative()) - &(&e * &p.derivative());
        let poly = &(&(&lead * p) * &e) + &(&YPoly::monomial(int(2), 1) * &wronskian);
        Ok(TwoIndexEop {
            i: self.i(),
            n,
            nprime: self.nprime,
            poly,
        })
    }

    /// r^ℓ e^{−y/2} 𝒬 / (S·P_N).
    pub fn eigenfunction(&self, n: usize) -> Result<WaveFunction> {
        let q = self.two_index_eop(n)?.poly;
        if q.is_zero() {
            return Err(Error::ZeroWaveFunction);
        }
        let den = &self.parent.seed_poly() * self.pn_poly();
        Ok(WaveFunction::new(Scalar::one(), self.ell().clone(), -1, q, den)?.canonical(self.omega()))
    }

    /// (d/dr + W̄) applied to the first-generation state.
    pub fn operator_eigenfunction(&self, n: usize) -> Result<WaveFunction> {
        let psi = self.parent.eigenfunction(n)?;
        let out = apply_intertwiner(&self.superpotential(), false, &psi, self.omega());
        if out.is_zero() {
            return Err(Error::ZeroWaveFunction);
        }
        Ok(out)
    }

    /// Ẽₙ + R₂ in the reference of `reference_potential`.
    pub fn energy(&self, n: usize) -> Scalar {
        self.parent.energy(n) + &self.r2
    }

    /// r^ℓ e^{−y/2} / (S·P_N); its square times 𝒬ₙ𝒬ₘ is the orthogonality
    /// integrand.
    pub fn weight(&self) -> WaveFunction {
        let den = &self.parent.seed_poly() * self.pn_poly();
        WaveFunction::new(Scalar::one(), self.ell().clone(), -1, YPoly::one(), den).expect("nonzero denominator")
    }

    /// Sufficient condition (at ω = 1, R₂ in units of ω) for P_N to be
    /// zero-free; `None` where no window applies.
    pub fn window_predicts_valid(&self) -> Option<bool> {
        let r2 = &self.r2 / self.omega();
        window_predicts_valid(self.i(), self.nprime, self.ell(), &r2)
    }
}

fn integer_parity(x: &Scalar) -> Option<bool> {
    x.is_integer().then(|| x.to_integer().bit(0))
}

/// Windows on R₂/ω:
///
/// - family 1: −2 < R₂ < 0
/// - family 2: R₂ ≥ −3/2 with n′ and ℓ odd, R₂ ≤ −5/2 with n′ and ℓ even
/// - family 3: R₂ > 3/2 with ℓ even, R₂ < 0 with ℓ odd
///
/// A window that holds predicts a valid family; outside every window the
/// prediction is `Some(false)` where a window applies to the parity class,
/// otherwise `None`.
pub fn window_predicts_valid(i: u8, nprime: usize, ell: &Scalar, r2: &Scalar) -> Option<bool> {
    let zero = Scalar::zero();
    let frac = crate::ratcore::frac;
    match i {
        1 => Some(*r2 > int(-2) && *r2 < zero),
        2 => match (nprime % 2 == 1, integer_parity(ell)?) {
            (true, true) => Some(*r2 >= frac(-3, 2)),
            (false, false) => Some(*r2 <= frac(-5, 2)),
            _ => None,
        },
        3 => Some(if integer_parity(ell)? { *r2 < zero } else { *r2 > frac(3, 2) }),
        _ => None,
    }
}
