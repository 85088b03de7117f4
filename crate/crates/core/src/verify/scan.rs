use rayon::prelude::*;
use serde::Serialize;

use crate::deform1::Gen1Family;
use crate::deform2::Gen2Family;
use crate::error::{Error, Result};
use crate::laguerre::OscParams;
use crate::ratcore::{format_scalar, Scalar};

/// One grid point of a zero-free scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub i: u8,
    pub nprime: usize,
    pub reparam: Scalar,
    pub r2: Scalar,
    pub roots_in_domain: usize,
    /// `None` where no window covers the point.
    pub window_predicts_valid: Option<bool>,
    pub certificate_valid: bool,
}

impl ScanRow {
    /// Windows are sufficient conditions: a disagreement is a point inside a
    /// window whose certificate fails.
    pub fn agree(&self) -> bool {
        self.window_predicts_valid != Some(true) || self.certificate_valid
    }

    pub fn covered(&self) -> bool {
        self.window_predicts_valid.is_some()
    }
}

/// Certifies P_N at every (n′, reparam) of the grid, in grid order.
pub fn zero_free_scan(i: u8, nprimes: &[usize], reparams: &[Scalar], omega: &Scalar) -> Result<Vec<ScanRow>> {
    if !(1..=3).contains(&i) {
        return Err(Error::FamilyIndex(i, "1..3"));
    }
    let grid: Vec<(usize, &Scalar)> = nprimes
        .iter()
        .flat_map(|&n| reparams.iter().map(move |x| (n, x)))
        .collect();
    grid.par_iter()
        .map(|&(nprime, x)| {
            let f = Gen2Family::new_unchecked(i, nprime, x, omega)?;
            Ok(ScanRow {
                i,
                nprime,
                reparam: x.clone(),
                r2: f.r2().clone(),
                roots_in_domain: f.pn_roots_in_domain(),
                window_predicts_valid: f.window_predicts_valid(),
                certificate_valid: f.is_valid(),
            })
        })
        .collect()
}

#[derive(Serialize)]
struct ScanCsvRow<'a> {
    i: u8,
    nprime: usize,
    reparam: String,
    #[serde(rename = "R2")]
    r2: String,
    roots_in_domain: usize,
    window_predicts_valid: &'a str,
    certificate_valid: bool,
    agree: bool,
}

fn tri(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "true",
        Some(false) => "false",
        None => "na",
    }
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

pub fn scan_csv(rows: &[ScanRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record([
            "i",
            "nprime",
            "reparam",
            "R2",
            "roots_in_domain",
            "window_predicts_valid",
            "certificate_valid",
            "agree",
        ])
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    for r in rows {
        w.serialize(ScanCsvRow {
            i: r.i,
            nprime: r.nprime,
            reparam: format_scalar(&r.reparam),
            r2: format_scalar(&r.r2),
            roots_in_domain: r.roots_in_domain,
            window_predicts_valid: tri(r.window_predicts_valid),
            certificate_valid: r.certificate_valid,
            agree: r.agree(),
        })
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    finish(w)
}

#[derive(Serialize)]
struct CatalogCsvRow {
    i: u8,
    m: usize,
    ell: String,
    omega: String,
    alpha_i: String,
    #[serde(rename = "R1")]
    r1: String,
    valid: bool,
    seed_roots_in_domain: usize,
}

/// First-generation catalog listing, one row per (i, m, ℓ).
pub fn catalog_csv(ms: &[usize], ells: &[Scalar], omega: &Scalar) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if ms.is_empty() || ells.is_empty() {
        w.write_record(["i", "m", "ell", "omega", "alpha_i", "R1", "valid", "seed_roots_in_domain"])
            .map_err(|e| Error::Io(e.to_string()))?;
    }
    for i in 1..=3u8 {
        for &m in ms {
            for ell in ells {
                let p = OscParams::new(omega.clone(), ell.clone())?;
                let f = Gen1Family::new_unchecked(i, m, &p)?;
                w.serialize(CatalogCsvRow {
                    i,
                    m,
                    ell: format_scalar(ell),
                    omega: format_scalar(omega),
                    alpha_i: format_scalar(f.alpha()),
                    r1: format_scalar(f.r1()),
                    valid: f.is_valid(),
                    seed_roots_in_domain: f.seed_roots_in_domain(),
                })
                .map_err(|e| Error::Io(e.to_string()))?;
            }
        }
    }
    finish(w)
}
