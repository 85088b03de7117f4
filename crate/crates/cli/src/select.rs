use clap::Args;
use xlaguerre::deform1::Gen1Family;
use xlaguerre::deform2::Gen2Family;
use xlaguerre::error::Error as CoreError;
use xlaguerre::laguerre::{classical_eigenfunction, classical_energy, classical_weight, radial_oscillator, OscParams};
use xlaguerre::ratcore::{format_scalar, int, parse_scalar, Scalar, YPoly};
use xlaguerre::susy::{oscillator_offset, Potential, WaveFunction};

use crate::UsageError;

/// Family selectors shared by `gen` and `plot-data`.
#[derive(Args, Debug, Clone)]
pub struct Selector {
    /// Iteration: 0 classical, 1 first deformation, 2 second deformation.
    #[arg(long = "iter", default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=2))]
    pub iter: u8,
    /// Parent family index 1..3.
    #[arg(long)]
    pub family: Option<u8>,
    /// Seed degree of the first deformation.
    #[arg(long)]
    pub m: Option<usize>,
    /// Degree index of the second-deformation polynomial.
    #[arg(long)]
    pub nprime: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub ell: Option<String>,
    /// Family 1 reparameterization, ℓ = −d−1.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// Family 2 reparameterization, ℓ = −a−1.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Family 3 reparameterization, ℓ = −b−1.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Oscillator frequency as "p/q".
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub omega: String,
    /// Accept families whose denominator vanishes on (0, ∞).
    #[arg(long)]
    pub allow_invalid: bool,
}

#[derive(Clone, Debug)]
pub enum Family {
    Classical(OscParams),
    Gen1(Gen1Family),
    Gen2(Gen2Family),
}

pub fn scalar(flag: &str, text: &str) -> Result<Scalar, UsageError> {
    parse_scalar(text).map_err(|_| UsageError(format!("--{flag}: cannot parse `{text}` as a rational p/q")))
}

fn core(e: CoreError) -> UsageError {
    UsageError(e.to_string())
}

impl Selector {
    pub fn omega(&self) -> Result<Scalar, UsageError> {
        let w = scalar("omega", &self.omega)?;
        if w <= int(0) {
            return Err(UsageError("--omega must be positive".into()));
        }
        Ok(w)
    }

    fn reparams(&self) -> Vec<(&'static str, &String)> {
        [("d", &self.d), ("a", &self.a), ("b", &self.b)]
            .into_iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
            .collect()
    }

    fn family_index(&self) -> Result<u8, UsageError> {
        let i = self.family.ok_or_else(|| UsageError(format!("--iter {} requires --family", self.iter)))?;
        if !(1..=3).contains(&i) {
            return Err(UsageError(format!("--family must be 1, 2 or 3 (got {i})")));
        }
        Ok(i)
    }

    /// Validates every selector and builds the family, refusing
    /// invalid families unless `allow_invalid` is set.
    pub fn resolve(&self) -> Result<Family, UsageError> {
        let omega = self.omega()?;
        match self.iter {
            0 => {
                if self.family.is_some() || self.m.is_some() || self.nprime.is_some() || !self.reparams().is_empty() {
                    return Err(UsageError("--iter 0 takes only --ell and --omega".into()));
                }
                let ell = scalar("ell", self.ell.as_deref().unwrap_or("0"))?;
                Ok(Family::Classical(OscParams::new(omega, ell).map_err(core)?))
            }
            1 => {
                let i = self.family_index()?;
                if self.nprime.is_some() || !self.reparams().is_empty() {
                    return Err(UsageError("--nprime, --d, --a and --b need --iter 2".into()));
                }
                let m = self.m.unwrap_or(1);
                if m == 0 {
                    return Err(UsageError("--m must be at least 1".into()));
                }
                let ell = scalar("ell", self.ell.as_deref().unwrap_or("0"))?;
                let p = OscParams::new(omega, ell).map_err(core)?;
                let f = Gen1Family::new_unchecked(i, m, &p).map_err(core)?;
                if !f.is_valid() && !self.allow_invalid {
                    return Err(UsageError(format!(
                        "{} is invalid: seed has {} root(s) in (0, inf); pass --allow-invalid to inspect it",
                        f.key(),
                        f.seed_roots_in_domain()
                    )));
                }
                Ok(Family::Gen1(f))
            }
            _ => {
                let i = self.family_index()?;
                if let Some(m) = self.m {
                    if m != 1 {
                        return Err(UsageError(CoreError::SecondIterationM(m).to_string()));
                    }
                }
                let nprime = self.nprime.ok_or_else(|| UsageError("--iter 2 requires --nprime".into()))?;
                let expected = ["d", "a", "b"][usize::from(i - 1)];
                let reparam = match (self.reparams().as_slice(), &self.ell) {
                    ([(name, v)], None) if *name == expected => scalar(name, v)?,
                    ([], Some(ell)) => -scalar("ell", ell)? - int(1),
                    ([], None) => {
                        return Err(UsageError(format!("--iter 2 --family {i} requires --{expected} (or --ell)")))
                    }
                    _ => {
                        return Err(UsageError(format!(
                            "family {i} is parameterized by exactly one of --{expected} or --ell"
                        )))
                    }
                };
                let f = Gen2Family::new_unchecked(i, nprime, &reparam, &omega).map_err(core)?;
                if !f.is_valid() && !self.allow_invalid {
                    return Err(UsageError(format!(
                        "{} is invalid: P_N has {} root(s) in (0, inf); pass --allow-invalid to inspect it",
                        f.key(),
                        f.pn_roots_in_domain()
                    )));
                }
                Ok(Family::Gen2(f))
            }
        }
    }
}

impl Family {
    pub fn key(&self) -> String {
        match self {
            Family::Classical(p) => format!("gen0:ell={},omega={}", format_scalar(p.ell()), format_scalar(p.omega())),
            Family::Gen1(f) => f.key(),
            Family::Gen2(f) => f.key(),
        }
    }

    pub fn omega(&self) -> &Scalar {
        match self {
            Family::Classical(p) => p.omega(),
            Family::Gen1(f) => f.params().omega(),
            Family::Gen2(f) => f.params().omega(),
        }
    }

    pub fn is_valid(&self) -> bool {
        match self {
            Family::Classical(_) => true,
            Family::Gen1(f) => f.is_valid(),
            Family::Gen2(f) => f.is_valid(),
        }
    }

    pub fn first_index(&self) -> usize {
        match self {
            Family::Classical(_) => 0,
            Family::Gen1(f) => f.first_index(),
            Family::Gen2(f) => f.first_index(),
        }
    }

    /// The potential whose spectrum `energy` reports.
    pub fn potential(&self) -> Potential {
        match self {
            Family::Classical(p) => radial_oscillator(p).shifted(&oscillator_offset(1, p).expect("index in range")),
            Family::Gen1(f) => f.reference_potential(),
            Family::Gen2(f) => f.reference_potential(),
        }
    }

    pub fn weight(&self) -> WaveFunction {
        match self {
            Family::Classical(p) => classical_weight(p),
            Family::Gen1(f) => f.weight(),
            Family::Gen2(f) => f.weight(),
        }
    }

    pub fn energy(&self, n: usize) -> Scalar {
        match self {
            Family::Classical(p) => classical_energy(n, p),
            Family::Gen1(f) => f.energy(n),
            Family::Gen2(f) => f.energy(n),
        }
    }

    pub fn eigenfunction(&self, n: usize) -> Result<WaveFunction, UsageError> {
        match self {
            Family::Classical(p) => Ok(classical_eigenfunction(n, p)),
            Family::Gen1(f) => f.eigenfunction(n).map_err(core),
            Family::Gen2(f) => f.eigenfunction(n).map_err(core),
        }
    }

    /// Numerator polynomial of state n before canonical rescaling.
    pub fn polynomial(&self, n: usize) -> Result<YPoly, UsageError> {
        match self {
            Family::Classical(p) => Ok(classical_eigenfunction(n, p).num().clone()),
            Family::Gen1(f) => Ok(f.eop(n).map_err(core)?.poly),
            Family::Gen2(f) => Ok(f.two_index_eop(n).map_err(core)?.poly),
        }
    }
}
