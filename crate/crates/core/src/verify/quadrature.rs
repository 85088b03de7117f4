use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratcore::{to_f64, Scalar, YPoly};
use crate::susy::WaveFunction;

const NODES: usize = 20;
const MAX_DEPTH: usize = 18;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Truncation radius; `None` picks max(12, 3·sqrt((2n_max + ℓ + 2m + 4)/ω)).
    pub r_max: Option<f64>,
    pub panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-9,
            abs_tol: 1e-12,
            r_max: None,
            panels: 32,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        if self.panels == 0 {
            return Err(Error::Config("panels must be positive".into()));
        }
        if self.r_max.is_some_and(|r| !(r > 0.0)) {
            return Err(Error::Config("r_max must be positive".into()));
        }
        Ok(())
    }

    pub fn with_panels(&self, panels: usize) -> Self {
        QuadratureConfig {
            panels,
            ..self.clone()
        }
    }

    /// The pinned radius, or the starting radius for automatic growth.
    pub fn radius(&self, n_max: usize, ell: f64, m: usize, omega: f64) -> f64 {
        self.r_max.unwrap_or_else(|| default_r_max(n_max, ell, m, omega))
    }
}

pub fn default_r_max(n_max: usize, ell: f64, m: usize, omega: f64) -> f64 {
    let scale = (2 * n_max + 2 * m + 4) as f64 + ell;
    f64::max(12.0, 3.0 * (scale.max(0.0) / omega).sqrt())
}

/// Adaptive composite Gauss–Legendre on [a, b]: each of `panels` equal
/// panels is bisected until one rule and its two halves agree.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, cfg: &QuadratureConfig) -> f64 {
    let rule = GaussLegendre::new(NonZeroUsize::new(NODES).expect("nonzero"));
    let width = (b - a) / cfg.panels as f64;
    let panel_tol = cfg.abs_tol / cfg.panels as f64;
    (0..cfg.panels)
        .map(|k| {
            let lo = a + k as f64 * width;
            let hi = if k + 1 == cfg.panels { b } else { lo + width };
            let whole = rule.integrate(lo, hi, f);
            adapt(&rule, f, lo, hi, whole, panel_tol, cfg.rel_tol, 0)
        })
        .sum()
}

#[allow(clippy::too_many_arguments)]
fn adapt(
    rule: &GaussLegendre,
    f: &dyn Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    whole: f64,
    abs_tol: f64,
    rel_tol: f64,
    depth: usize,
) -> f64 {
    let mid = 0.5 * (lo + hi);
    let left = rule.integrate(lo, mid, f);
    let right = rule.integrate(mid, hi, f);
    let split = left + right;
    if (split - whole).abs() <= f64::max(abs_tol, rel_tol * split.abs()) || depth >= MAX_DEPTH {
        return split;
    }
    adapt(rule, f, lo, mid, left, abs_tol / 2.0, rel_tol, depth + 1)
        + adapt(rule, f, mid, hi, right, abs_tol / 2.0, rel_tol, depth + 1)
}

fn abs_coeff_sum(p: &YPoly) -> f64 {
    p.coeffs().iter().map(|c| to_f64(&c.abs())).sum()
}

/// Bound on ∫_R^∞ |ψ_j ψ_k| dr for decaying states.
///
/// With q = deg N − deg D of the product, |N| ≤ Σ|nᵢ|·y^{deg N} and
/// |D| ≥ y^{deg D}/2 once y ≥ max(1, 2Σ|dᵢ|), so the integrand is at most
/// A·r^P·e^{−br²} with b = ω/2, P = a_j + a_k + 2q and
/// ∫_R^∞ r^P e^{−br²} dr ≤ R^{P−1}e^{−bR²}/b when bR² ≥ P − 1.
pub fn tail_bound(left: &WaveFunction, right: &WaveFunction, omega: &Scalar, r: f64) -> Option<f64> {
    if left.s() != -1 || right.s() != -1 {
        return None;
    }
    let w = to_f64(omega);
    let b = w / 2.0;
    let num = left.num() * right.num();
    let den = left.den() * right.den();
    let dn = num.degree()? as f64;
    let dd = den.degree()? as f64;
    let lead = to_f64(&den.leading().abs());
    let lower_tail = abs_coeff_sum(&den) / lead - 1.0;
    let y = w * r * r / 2.0;
    if y < f64::max(1.0, 2.0 * lower_tail) {
        return None;
    }
    let q = dn - dd;
    let p = to_f64(left.a()) + to_f64(right.a()) + 2.0 * q;
    if b * r * r < p - 1.0 {
        return None;
    }
    let amp = (to_f64(left.constant()) * to_f64(right.constant())).abs() * 2.0 * abs_coeff_sum(&num) / lead
        * b.powf(q);
    Some(amp * r.powf(p - 1.0) * (-b * r * r).exp() / b)
}

/// Smallest radius start·1.25^k, k ≤ 16, at which every pairwise tail
/// bound is below abs_tol/10.
pub fn sufficient_radius(states: &[WaveFunction], omega: &Scalar, start: f64, abs_tol: f64) -> Option<f64> {
    let mut r = start;
    for _ in 0..=16 {
        let ok = states.iter().enumerate().all(|(j, sj)| {
            states[j..]
                .iter()
                .all(|sk| tail_bound(sj, sk, omega, r).is_some_and(|t| t <= abs_tol / 10.0))
        });
        if ok {
            return Some(r);
        }
        r *= 1.25;
    }
    None
}

/// Gram matrix G[j][k] = ∫₀^∞ ψ_j ψ_k dr, truncated at `r_max` after checking
/// that every tail is below abs_tol/10.
pub fn gram_matrix(states: &[WaveFunction], omega: &Scalar, r_max: f64, cfg: &QuadratureConfig) -> Result<Vec<Vec<f64>>> {
    cfg.validate()?;
    let n = states.len();
    let mut g = vec![vec![0.0; n]; n];
    for j in 0..n {
        for k in j..n {
            let tail = tail_bound(&states[j], &states[k], omega, r_max).ok_or(Error::TailBound(r_max))?;
            if tail > cfg.abs_tol / 10.0 {
                return Err(Error::TailBound(r_max));
            }
            let (sj, sk) = (&states[j], &states[k]);
            let f = |r: f64| sj.eval_f64(r, omega) * sk.eval_f64(r, omega);
            let v = integrate(&f, 0.0, r_max, cfg);
            g[j][k] = v;
            g[k][j] = v;
        }
    }
    Ok(g)
}

/// Largest |G[j][k]| / sqrt(G[j][j]·G[k][k]) over j ≠ k.
pub fn max_normalized_off_diagonal(g: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for j in 0..g.len() {
        for k in 0..g.len() {
            if j != k {
                worst = worst.max(g[j][k].abs() / (g[j][j] * g[k][k]).sqrt());
            }
        }
    }
    worst
}

pub fn max_off_diagonal(g: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for j in 0..g.len() {
        for k in 0..g.len() {
            if j != k {
                worst = worst.max(g[j][k].abs());
            }
        }
    }
    worst
}

/// Largest change between two Gram matrices, relative to sqrt(G[j][j]·G[k][k]).
pub fn max_relative_change(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for j in 0..a.len() {
        for k in 0..a.len() {
            let scale = (a[j][j] * a[k][k]).sqrt().max(f64::MIN_POSITIVE);
            worst = worst.max((a[j][k] - b[j][k]).abs() / scale);
        }
    }
    worst
}
