use num_traits::One;
use serde::{Deserialize, Serialize};

use super::eop::{xm_eop_with_alpha, EopKind, XmEop};
use crate::error::{Error, Result};
use crate::laguerre::{classical_eigenfunction, classical_energy, ArgSign, LaguerreSpec, OscParams};
use crate::ratcore::{format_scalar, frac, int, positive_root_count, serial::scalar_str, Scalar, YPoly};
use crate::susy::{catalog_superpotential, oscillator_offset, shifted_ell, Potential, Superpotential, WaveFunction};

/// α₁ = α₃ = −ℓ−3/2, α₂ = ℓ−1/2.
pub fn gen1_alpha(i: u8, p: &OscParams) -> Result<Scalar> {
    match i {
        1 | 3 => Ok(-(p.ell() + frac(3, 2))),
        2 => Ok(p.ell() - frac(1, 2)),
        _ => Err(Error::FamilyIndex(i, "1..3")),
    }
}

/// 2mω for families 1 and 2, −2mω for family 3.
pub fn gen1_r1(i: u8, m: usize, p: &OscParams) -> Result<Scalar> {
    let base = int(2 * m as i64) * p.omega();
    match i {
        1 | 2 => Ok(base),
        3 => Ok(-base),
        _ => Err(Error::FamilyIndex(i, "1..3")),
    }
}

/// Rational extension generated by the seed L_m^{αᵢ}(∓y).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gen1Family {
    i: u8,
    m: usize,
    params: OscParams,
    #[serde(with = "scalar_str")]
    alpha: Scalar,
    #[serde(with = "scalar_str")]
    r1: Scalar,
    seed: LaguerreSpec,
    seed_roots: usize,
}

impl Gen1Family {
    /// Builds the family only if the seed has no zeros on (0, ∞).
    pub fn new(i: u8, m: usize, p: &OscParams) -> Result<Self> {
        let f = Self::new_unchecked(i, m, p)?;
        if f.seed_roots > 0 {
            return Err(Error::InvalidFamily(f.key(), f.seed_roots));
        }
        Ok(f)
    }

    pub fn new_unchecked(i: u8, m: usize, p: &OscParams) -> Result<Self> {
        let alpha = gen1_alpha(i, p)?;
        let r1 = gen1_r1(i, m, p)?;
        let arg = if i == 3 { ArgSign::Plus } else { ArgSign::Minus };
        let seed = LaguerreSpec::new(m, alpha.clone(), arg);
        let seed_roots = positive_root_count(&seed.poly()).expect("nonzero seed");
        Ok(Gen1Family {
            i,
            m,
            params: p.clone(),
            alpha,
            r1,
            seed,
            seed_roots,
        })
    }

    pub fn i(&self) -> u8 {
        self.i
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn params(&self) -> &OscParams {
        &self.params
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn r1(&self) -> &Scalar {
        &self.r1
    }

    pub fn seed(&self) -> &LaguerreSpec {
        &self.seed
    }

    pub fn seed_poly(&self) -> YPoly {
        self.seed.poly()
    }

    pub fn seed_roots_in_domain(&self) -> usize {
        self.seed_roots
    }

    pub fn is_valid(&self) -> bool {
        self.seed_roots == 0
    }

    pub fn key(&self) -> String {
        format!(
            "gen1:i={},m={},ell={},omega={}",
            self.i,
            self.m,
            format_scalar(self.params.ell()),
            format_scalar(self.params.omega())
        )
    }

    fn omega(&self) -> &Scalar {
        self.params.omega()
    }

    pub fn base_superpotential(&self) -> Superpotential {
        catalog_superpotential(self.i, &self.params).expect("index checked at construction")
    }

    /// Wᵢ + ∂_r ln P_m^{αᵢ}.
    pub fn deformed_superpotential(&self) -> Superpotential {
        self.base_superpotential().with_log(Scalar::one(), &self.seed_poly())
    }

    /// Ṽᵢ⁻ = W̃² − W̃′.
    pub fn potential(&self) -> Potential {
        self.deformed_superpotential().partner_potentials(self.omega()).0
    }

    /// Ṽᵢ⁺ = W̃² + W̃′.
    pub fn partner_potential(&self) -> Potential {
        self.deformed_superpotential().partner_potentials(self.omega()).1
    }

    /// Vᵢ⁻ − V₁⁻, the offset between this family's potential and the common
    /// reference in which the energies are quoted.
    pub fn reference_offset(&self) -> Scalar {
        let p = &self.params;
        oscillator_offset(self.i, p).expect("valid index") - oscillator_offset(1, p).expect("valid index")
    }

    /// Ṽᵢ⁻ minus the reference offset; `energy(n)` is its spectrum.
    pub fn reference_potential(&self) -> Potential {
        self.potential().shifted(&-self.reference_offset())
    }

    /// Smallest state index: family 1 starts at n = 1.
    pub fn first_index(&self) -> usize {
        usize::from(self.i == 1)
    }

    pub fn eop_kind(&self) -> EopKind {
        match self.i {
            1 => EopKind::III,
            2 => EopKind::I,
            _ => EopKind::II,
        }
    }

    /// Numerator polynomial of the n-th state.
    pub fn eop(&self, n: usize) -> Result<XmEop> {
        let first = self.first_index();
        if n < first {
            return Err(Error::IndexBelowFirst { n, first });
        }
        Ok(xm_eop_with_alpha(
            self.eop_kind(),
            self.m,
            n - first,
            &self.alpha,
            ArgSign::Plus,
        ))
    }

    /// r^{ℓ+1} e^{−y/2} L^{j}_{m,n}(y) / P_m^{αᵢ}(y).
    pub fn eigenfunction(&self, n: usize) -> Result<WaveFunction> {
        let num = self.eop(n)?.poly;
        WaveFunction::new(
            Scalar::one(),
            self.params.ell() + Scalar::one(),
            -1,
            num,
            self.seed_poly(),
        )
    }

    /// 2ω(n+m) for families 1 and 2, 2ω(n−m) for family 3.
    pub fn energy(&self, n: usize) -> Scalar {
        let n = int(n as i64);
        let m = int(self.m as i64);
        let k = if self.i == 3 { n - m } else { n + m };
        int(2) * k * self.omega()
    }

    /// r^{ℓ+1} e^{−y/2} / P_m^{αᵢ}(y).
    pub fn weight(&self) -> WaveFunction {
        WaveFunction::new(
            Scalar::one(),
            self.params.ell() + Scalar::one(),
            -1,
            YPoly::one(),
            self.seed_poly(),
        )
        .expect("nonzero seed")
    }

    /// Family 1 only: the zero-energy state exp(−∫W̃₁) of Ṽ₁⁻ below the
    /// exceptional tower.
    pub fn zero_mode(&self) -> Option<WaveFunction> {
        (self.i == 1).then(|| self.weight())
    }

    /// −∂_r ln of the lowest tower state.
    pub fn conventional_superpotential(&self) -> Result<Superpotential> {
        let psi = self.eigenfunction(self.first_index())?;
        Ok(Superpotential::from_ground_state(&psi))
    }

    /// Energy of the state generating the conventional superpotential, in the
    /// reference of `reference_potential`.
    pub fn conventional_ground_energy(&self) -> Scalar {
        self.energy(self.first_index())
    }

    /// Eigenfunctions of Ṽᵢ⁺: classical states at the shifted angular parameter.
    pub fn partner_eigenfunction(&self, n: usize) -> WaveFunction {
        let shifted = self.shifted_params();
        classical_eigenfunction(n, &shifted)
    }

    /// 2nω plus the constant Ṽᵢ⁺ − V₁⁻(ℓ shifted).
    pub fn partner_energy(&self, n: usize) -> Result<Scalar> {
        let shifted = self.shifted_params();
        let (v1, _) = catalog_superpotential(1, &shifted)?.partner_potentials(self.omega());
        let shift = self
            .partner_potential()
            .constant_offset(&v1)
            .ok_or_else(|| Error::NotConstant(self.key()))?;
        Ok(classical_energy(n, &shifted) + shift)
    }

    fn shifted_params(&self) -> OscParams {
        self.params
            .with_ell(shifted_ell(self.i, &self.params).expect("valid index"))
    }
}
