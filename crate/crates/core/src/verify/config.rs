use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::quadrature::QuadratureConfig;
use crate::error::{Error, Result};
use crate::ratcore::{format_scalar, frac, int, parse_scalar, Scalar};

/// Check groups, in execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    Ratcore,
    Laguerre,
    Partners,
    Classical,
    Gen1,
    Conventional,
    Residues,
    Gen2Riccati,
    Gen2Residual,
    Operator,
    Orthogonality,
    Scan,
}

impl Group {
    pub const ALL: [Group; 12] = [
        Group::Ratcore,
        Group::Laguerre,
        Group::Partners,
        Group::Classical,
        Group::Gen1,
        Group::Conventional,
        Group::Residues,
        Group::Gen2Riccati,
        Group::Gen2Residual,
        Group::Operator,
        Group::Orthogonality,
        Group::Scan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Ratcore => "ratcore",
            Group::Laguerre => "laguerre",
            Group::Partners => "partners",
            Group::Classical => "classical",
            Group::Gen1 => "gen1",
            Group::Conventional => "conventional",
            Group::Residues => "residues",
            Group::Gen2Riccati => "gen2-riccati",
            Group::Gen2Residual => "gen2-residual",
            Group::Operator => "operator",
            Group::Orthogonality => "orthogonality",
            Group::Scan => "scan",
        }
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown check group `{s}`")))
    }
}

/// Suite selection and tolerances, read from `key = value` lines.
///
/// ```text
/// # comments and blank lines are ignored
/// only = gen2-riccati, gen2-residual
/// families = 3
/// omega = 1, 2, 1/2
/// rel_tol = 1e-9
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub groups: Vec<Group>,
    pub families: Vec<u8>,
    pub omegas: Vec<Scalar>,
    pub ell_max: usize,
    pub m_max: usize,
    pub n_max: usize,
    pub nprime_max: usize,
    pub gen2_n_max: usize,
    pub gen2_omegas: Vec<Scalar>,
    pub reparam_min: i64,
    pub reparam_max: i64,
    pub scan_nprime_max: usize,
    pub scan_reparam_min: i64,
    pub scan_reparam_max: i64,
    pub scan_omega: Scalar,
    pub quadrature: QuadratureConfig,
    pub inject_wrong_energy: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            groups: Group::ALL.to_vec(),
            families: vec![1, 2, 3],
            omegas: vec![int(1), int(2), frac(1, 2)],
            ell_max: 5,
            m_max: 3,
            n_max: 5,
            nprime_max: 5,
            gen2_n_max: 4,
            gen2_omegas: vec![int(1), int(2)],
            reparam_min: -4,
            reparam_max: 3,
            scan_nprime_max: 5,
            scan_reparam_min: -6,
            scan_reparam_max: 5,
            scan_omega: int(1),
            quadrature: QuadratureConfig::default(),
            inject_wrong_energy: false,
        }
    }
}

fn list<T>(value: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse)
        .collect()
}

fn number<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("bad value `{value}` for `{key}`")))
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = SuiteConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "only" => c.groups = list(value, Group::from_str)?,
                "families" => {
                    c.families = list(value, |s| number::<u8>(key, s))?;
                    if let Some(&bad) = c.families.iter().find(|&&i| !(1..=3).contains(&i)) {
                        return Err(Error::FamilyIndex(bad, "1..3"));
                    }
                }
                "omega" => c.omegas = list(value, parse_scalar)?,
                "gen2_omega" => c.gen2_omegas = list(value, parse_scalar)?,
                "scan_omega" => c.scan_omega = parse_scalar(value)?,
                "ell_max" => c.ell_max = number(key, value)?,
                "m_max" => c.m_max = number(key, value)?,
                "n_max" => c.n_max = number(key, value)?,
                "nprime_max" => c.nprime_max = number(key, value)?,
                "gen2_n_max" => c.gen2_n_max = number(key, value)?,
                "reparam_min" => c.reparam_min = number(key, value)?,
                "reparam_max" => c.reparam_max = number(key, value)?,
                "scan_nprime_max" => c.scan_nprime_max = number(key, value)?,
                "scan_reparam_min" => c.scan_reparam_min = number(key, value)?,
                "scan_reparam_max" => c.scan_reparam_max = number(key, value)?,
                "rel_tol" => c.quadrature.rel_tol = number(key, value)?,
                "abs_tol" => c.quadrature.abs_tol = number(key, value)?,
                "panels" => c.quadrature.panels = number(key, value)?,
                "r_max" => c.quadrature.r_max = Some(number(key, value)?),
                "inject_wrong_energy" => c.inject_wrong_energy = number(key, value)?,
                other => return Err(Error::Config(format!("unknown key `{other}`"))),
            }
        }
        if c.omegas.iter().chain(&c.gen2_omegas).any(|w| *w <= int(0)) || c.scan_omega <= int(0) {
            return Err(Error::NonPositiveOmega);
        }
        c.quadrature.validate()?;
        c.groups.sort();
        c.groups.dedup();
        Ok(c)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn runs(&self, g: Group) -> bool {
        self.groups.contains(&g)
    }

    pub fn reparams(&self) -> Vec<Scalar> {
        (self.reparam_min..=self.reparam_max).map(int).collect()
    }

    pub fn scan_reparams(&self) -> Vec<Scalar> {
        (self.scan_reparam_min..=self.scan_reparam_max).map(int).collect()
    }

    /// Canonical `key = value` rendering accepted by `parse`.
    pub fn to_text(&self) -> String {
        let join = |v: &[Scalar]| v.iter().map(format_scalar).collect::<Vec<_>>().join(", ");
        let mut out = String::new();
        let groups: Vec<&str> = self.groups.iter().map(|g| g.name()).collect();
        out += &format!("only = {}\n", groups.join(", "));
        let fams: Vec<String> = self.families.iter().map(u8::to_string).collect();
        out += &format!("families = {}\n", fams.join(", "));
        out += &format!("omega = {}\n", join(&self.omegas));
        out += &format!("gen2_omega = {}\n", join(&self.gen2_omegas));
        out += &format!("scan_omega = {}\n", format_scalar(&self.scan_omega));
        for (k, v) in [
            ("ell_max", self.ell_max),
            ("m_max", self.m_max),
            ("n_max", self.n_max),
            ("nprime_max", self.nprime_max),
            ("gen2_n_max", self.gen2_n_max),
            ("scan_nprime_max", self.scan_nprime_max),
        ] {
            out += &format!("{k} = {v}\n");
        }
        for (k, v) in [
            ("reparam_min", self.reparam_min),
            ("reparam_max", self.reparam_max),
            ("scan_reparam_min", self.scan_reparam_min),
            ("scan_reparam_max", self.scan_reparam_max),
        ] {
            out += &format!("{k} = {v}\n");
        }
        out += &format!("rel_tol = {:e}\n", self.quadrature.rel_tol);
        out += &format!("abs_tol = {:e}\n", self.quadrature.abs_tol);
        out += &format!("panels = {}\n", self.quadrature.panels);
        if let Some(r) = self.quadrature.r_max {
            out += &format!("r_max = {r}\n");
        }
        out += &format!("inject_wrong_energy = {}\n", self.inject_wrong_energy);
        out
    }
}
