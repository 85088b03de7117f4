use super::quadrature::{gram_matrix, sufficient_radius, QuadratureConfig};
use crate::deform1::Gen1Family;
use crate::deform2::Gen2Family;
use crate::error::{Error, Result};
use crate::laguerre::{classical_eigenfunction, OscParams};
use crate::ratcore::{format_scalar, to_f64, Scalar};
use crate::susy::WaveFunction;

/// A family whose states are orthogonal on (0, ∞).
#[derive(Clone, Copy, Debug)]
pub enum FamilyRef<'a> {
    Classical(&'a OscParams),
    Gen1(&'a Gen1Family),
    Gen2(&'a Gen2Family),
}

impl FamilyRef<'_> {
    pub fn key(&self) -> String {
        match self {
            FamilyRef::Classical(p) => format!(
                "gen0:ell={},omega={}",
                format_scalar(p.ell()),
                format_scalar(p.omega())
            ),
            FamilyRef::Gen1(f) => f.key(),
            FamilyRef::Gen2(f) => f.key(),
        }
    }

    pub fn params(&self) -> &OscParams {
        match self {
            FamilyRef::Classical(p) => p,
            FamilyRef::Gen1(f) => f.params(),
            FamilyRef::Gen2(f) => f.params(),
        }
    }

    pub fn omega(&self) -> &Scalar {
        self.params().omega()
    }

    fn seed_degree(&self) -> usize {
        match self {
            FamilyRef::Classical(_) => 0,
            FamilyRef::Gen1(f) => f.m(),
            FamilyRef::Gen2(f) => 2 + f.nprime(),
        }
    }

    fn check_valid(&self) -> Result<()> {
        match self {
            FamilyRef::Classical(_) => Ok(()),
            FamilyRef::Gen1(f) if !f.is_valid() => Err(Error::InvalidFamily(f.key(), f.seed_roots_in_domain())),
            FamilyRef::Gen2(f) if !f.is_valid() => Err(Error::InvalidFamily(f.key(), f.pn_roots_in_domain())),
            _ => Ok(()),
        }
    }

    /// The first `count` states of the tower.
    pub fn states(&self, count: usize) -> Result<Vec<WaveFunction>> {
        match self {
            FamilyRef::Classical(p) => Ok((0..count).map(|n| classical_eigenfunction(n, p)).collect()),
            FamilyRef::Gen1(f) => (f.first_index()..f.first_index() + count)
                .map(|n| f.eigenfunction(n))
                .collect(),
            FamilyRef::Gen2(f) => (f.first_index()..f.first_index() + count)
                .map(|n| f.eigenfunction(n))
                .collect(),
        }
    }
}

/// Gram matrix of the states n = first..=first + n_max.
pub fn orthogonality_matrix(family: FamilyRef<'_>, n_max: usize, q: &QuadratureConfig) -> Result<Vec<Vec<f64>>> {
    family.check_valid()?;
    let states = family.states(n_max + 1)?;
    let p = family.params();
    let start = q.radius(n_max, to_f64(p.ell()), family.seed_degree(), to_f64(p.omega()));
    let r_max = match q.r_max {
        Some(r) => r,
        None => sufficient_radius(&states, family.omega(), start, q.abs_tol).ok_or(Error::TailBound(start))?,
    };
    gram_matrix(&states, family.omega(), r_max, q)
}
