use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{Group, SuiteConfig};
use super::orthogonality::{orthogonality_matrix, FamilyRef};
use super::quadrature::{max_normalized_off_diagonal, max_off_diagonal, max_relative_change};
use super::scan::zero_free_scan;
use crate::deform1::{l1_ode_residual, Gen1Family};
use crate::deform2::{enumerate_other_choices, enumerate_residues, ChoiceClass, Gen2Family};
use crate::error::{Error, Result};
use crate::laguerre::{classical_eigenfunction, classical_energy, laguerre, radial_oscillator, ArgSign, OscParams};
use crate::published;
use crate::ratcore::{format_scalar, frac, int, positive_root_count, serial, YPoly, YRatFun};
use crate::susy::{catalog_superpotential, oscillator_offset, Potential, schrodinger_residual, shape_invariance_shift, WaveFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A printed expression disagrees with the derived one.
    Flagged,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub group: Group,
    pub key: String,
    pub name: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub records: Vec<CheckRecord>,
}

impl SuiteReport {
    fn from_records(mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| (a.group, &a.key, &a.name).cmp(&(b.group, &b.key, &b.name)));
        SuiteReport { records }
    }

    pub fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn in_group(&self, g: Group) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(move |r| r.group == g)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = write!(out, "{:<7} {:<13} {} {}", r.status.label(), r.group.name(), r.key, r.name);
            if !r.witness.is_empty() {
                let _ = write!(out, " [{}]", r.witness);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "total {}: {} pass, {} fail, {} flagged",
            self.records.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Flagged)
        );
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["group", "key", "name", "status", "witness"]).map_err(io)?;
        for r in &self.records {
            w.write_record([r.group.name(), &r.key, &r.name, r.status.label(), &r.witness])
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }
}

fn check(group: Group, key: impl Into<String>, name: impl Into<String>, ok: bool, witness: impl Into<String>) -> CheckRecord {
    CheckRecord {
        group,
        key: key.into(),
        name: name.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        witness: witness.into(),
    }
}

fn compare(group: Group, key: impl Into<String>, name: impl Into<String>, matches: bool, witness: impl Into<String>) -> CheckRecord {
    CheckRecord {
        group,
        key: key.into(),
        name: name.into(),
        status: if matches { Status::Pass } else { Status::Flagged },
        witness: witness.into(),
    }
}

fn errored(group: Group, key: impl Into<String>, name: impl Into<String>, e: &Error) -> CheckRecord {
    check(group, key, name, false, e.to_string())
}

/// Nonzero residuals are summarized by their numerator degree.
fn residual_witness(r: &YRatFun) -> String {
    if r.is_zero() {
        String::new()
    } else if let Some(c) = r.as_constant() {
        format!("residual {}", format_scalar(&c))
    } else {
        format!("residual non-constant, numerator degree {:?}", r.num().degree())
    }
}

/// Runs the suite described by the config file at `path`.
pub fn run_suite(path: &std::path::Path) -> Result<SuiteReport> {
    Ok(run_suite_with(&SuiteConfig::load(path)?))
}

pub fn run_suite_with(cfg: &SuiteConfig) -> SuiteReport {
    let groups: Vec<Group> = cfg.groups.clone();
    let records: Vec<CheckRecord> = groups
        .par_iter()
        .flat_map(|&g| match g {
            Group::Ratcore => ratcore_checks(),
            Group::Laguerre => laguerre_checks(cfg),
            Group::Partners => partner_checks(cfg),
            Group::Classical => classical_checks(cfg),
            Group::Gen1 => gen1_checks(cfg),
            Group::Conventional => conventional_checks(cfg),
            Group::Residues => residue_checks(cfg),
            Group::Gen2Riccati => gen2_riccati_checks(cfg),
            Group::Gen2Residual => gen2_residual_checks(cfg),
            Group::Operator => operator_checks(cfg),
            Group::Orthogonality => orthogonality_checks(cfg),
            Group::Scan => scan_checks(cfg),
        })
        .collect();
    SuiteReport::from_records(records)
}

fn params_grid(cfg: &SuiteConfig) -> Vec<OscParams> {
    cfg.omegas
        .iter()
        .flat_map(|w| (0..=cfg.ell_max as i64).map(move |l| OscParams::new(w.clone(), int(l)).expect("positive omega")))
        .collect()
}

fn ratcore_checks() -> Vec<CheckRecord> {
    let g = Group::Ratcore;
    let p = YPoly::new(vec![frac(1, 2), int(-3), int(0), int(2)]);
    let q = YPoly::new(vec![int(4), frac(-2, 3), int(1)]);
    let product = (&p * &q).derivative() == &(&p.derivative() * &q) + &(&p * &q.derivative());
    let reduced = YRatFun::reduce(YPoly::from_ints(&[-1, 0, 1]), YPoly::from_ints(&[-1, 1]))
        .map(|r| r.as_poly() == Some(YPoly::from_ints(&[1, 1])))
        .unwrap_or(false);
    let cubic = &(&YPoly::from_ints(&[-1, 1]) * &YPoly::from_ints(&[-2, 1])) * &YPoly::from_ints(&[3, 1]);
    let sturm = positive_root_count(&cubic) == Ok(2);
    let json = serial::poly_from_json(&serial::poly_to_json(&p)).as_ref() == Ok(&p);
    vec![
        check(g, "ratcore", "product rule", product, ""),
        check(g, "ratcore", "gcd reduction", reduced, ""),
        check(g, "ratcore", "sturm count", sturm, ""),
        check(g, "ratcore", "json round trip", json, ""),
    ]
}

fn laguerre_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Laguerre;
    let alphas = [frac(-5, 2), frac(-1, 2), frac(1, 2), int(3)];
    alphas
        .iter()
        .flat_map(|a| (0..=cfg.n_max.max(8)).map(move |n| (a, n)))
        .map(|(a, n)| {
            let l = laguerre(n, a, ArgSign::Plus);
            let d1 = l.derivative();
            let ode = &(&(&YPoly::y() * &d1.derivative()) + &(&YPoly::new(vec![a + int(1), int(-1)]) * &d1))
                + &l.scale(&int(n as i64));
            let key = format!("alpha={},n={n}", format_scalar(a));
            check(g, key, "laguerre equation", ode.is_zero(), "")
        })
        .collect()
}

fn partner_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Partners;
    params_grid(cfg)
        .par_iter()
        .flat_map_iter(|p| {
            (1..=4u8).flat_map(move |i| {
                let key = format!("i={i},ell={},omega={}", format_scalar(p.ell()), format_scalar(p.omega()));
                let w = catalog_superpotential(i, p).expect("index in range");
                let derived = w.partner_potentials(p.omega());
                let printed = published::printed_partners(i, p).expect("index in range");
                let si = shape_invariance_shift(i, p);
                [
                    check(g, key.clone(), "partners equal printed forms", derived == printed, ""),
                    match si {
                        Ok(c) => check(g, key, "shape invariance shift constant", true, format_scalar(&c)),
                        Err(e) => errored(g, key, "shape invariance shift constant", &e),
                    },
                ]
            })
        })
        .collect()
}

fn classical_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Classical;
    let mut out: Vec<CheckRecord> = params_grid(cfg)
        .par_iter()
        .map(|p| {
            let v = classical_potential(p);
            let key = format!("gen0:ell={},omega={}", format_scalar(p.ell()), format_scalar(p.omega()));
            let bad: Vec<usize> = (0..=8)
                .filter(|&n| {
                    let psi = classical_eigenfunction(n, p);
                    !schrodinger_residual(&v, &psi, &classical_energy(n, p), p.omega())
                        .map(|r| r.is_zero())
                        .unwrap_or(false)
                })
                .collect();
            check(g, key, "residual n<=8", bad.is_empty(), if bad.is_empty() { String::new() } else { format!("n={bad:?}") })
        })
        .collect();
    if cfg.inject_wrong_energy {
        let p = OscParams::new(int(1), int(0)).expect("positive omega");
        let psi = classical_eigenfunction(1, &p);
        let wrong = classical_energy(1, &p) + int(1);
        let res = schrodinger_residual(&classical_potential(&p), &psi, &wrong, p.omega()).expect("finite");
        out.push(check(g, "gen0:ell=0,omega=1", "injected wrong energy n=1", res.is_zero(), residual_witness(&res)));
    }
    out
}

fn classical_potential(p: &OscParams) -> Potential {
    radial_oscillator(p).shifted(&oscillator_offset(1, p).expect("index in range"))
}

fn gen1_families(cfg: &SuiteConfig) -> Vec<Gen1Family> {
    let grid = params_grid(cfg);
    cfg.families
        .iter()
        .flat_map(|&i| (1..=cfg.m_max).map(move |m| (i, m)))
        .flat_map(|(i, m)| grid.iter().map(move |p| (i, m, p)))
        .map(|(i, m, p)| Gen1Family::new_unchecked(i, m, p).expect("index in range"))
        .collect()
}

fn gen1_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Gen1;
    gen1_families(cfg)
        .par_iter()
        .flat_map_iter(|f| {
            let key = f.key();
            let mut out = Vec::new();
            if !f.is_valid() {
                out.push(check(g, key, "certificate", true, format!("invalid, {} seed root(s), skipped", f.seed_roots_in_domain())));
                return out;
            }
            out.push(check(g, key.clone(), "certificate", true, "valid"));
            let v = f.reference_potential();
            let w = f.params().omega();
            let first = f.first_index();
            let mut bad = Vec::new();
            for n in first..=first + cfg.n_max {
                let ok = f
                    .eigenfunction(n)
                    .and_then(|psi| schrodinger_residual(&v, &psi, &f.energy(n), w))
                    .map(|r| r.is_zero())
                    .unwrap_or(false);
                if !ok {
                    bad.push(n);
                }
            }
            let name = format!("residual n<={}", first + cfg.n_max);
            out.push(check(g, key.clone(), name, bad.is_empty(), if bad.is_empty() { String::new() } else { format!("n={bad:?}") }));
            if f.i() == 2 && f.m() == 1 {
                let delta = f.alpha().clone();
                let printed_param = &delta + frac(1, 2);
                let mut corrected = true;
                let mut printed = true;
                for n in 0..=cfg.n_max {
                    let poly = f.eop(n).expect("index in range").poly;
                    corrected &= l1_ode_residual(&delta, n, &poly).is_zero();
                    printed &= published::l1_ode_printed_residual(&printed_param, n, &poly).is_zero();
                }
                out.push(check(g, key.clone(), "type I equation (derived form)", corrected, ""));
                out.push(compare(g, key.clone(), "type I equation (printed form)", printed, if printed { "" } else { "printed equation not satisfied" }));
            }
            if f.i() == 3 {
                let n = 2;
                let printed = published::printed_type_two(f.m(), n, f.params());
                let psi = WaveFunction::new(int(1), f.params().ell() + int(1), -1, printed, f.seed_poly());
                let ok = psi
                    .and_then(|psi| schrodinger_residual(&v, &psi, &f.energy(n), w))
                    .map(|r| r.is_zero())
                    .unwrap_or(false);
                out.push(compare(g, key, "printed type II form solves", ok, if ok { "" } else { "residual nonzero at n=2" }));
            }
            out
        })
        .collect()
}

fn conventional_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Conventional;
    gen1_families(cfg)
        .par_iter()
        .filter(|f| f.is_valid())
        .flat_map_iter(|f| {
            let key = f.key();
            let w = f.params().omega();
            match f.conventional_superpotential() {
                Err(e) => vec![errored(g, key, "conventional superpotential", &e)],
                Ok(wbar) => {
                    let (vm, _) = wbar.partner_potentials(w);
                    let target = f.reference_potential().shifted(&-f.conventional_ground_energy());
                    let printed = published::printed_conventional_row(f.i(), f.m(), f.params()).expect("index in range");
                    let matches = wbar.parts() == printed;
                    vec![
                        check(g, key.clone(), "W^2 - W' = reference potential - E0", vm == target, ""),
                        compare(g, key, "printed row", matches, if matches { "" } else { "derived superpotential differs from printed row" }),
                    ]
                }
            }
        })
        .collect()
}

fn residue_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Residues;
    let grid = params_grid(cfg);
    let cases: Vec<(u8, &OscParams)> = cfg
        .families
        .iter()
        .flat_map(|&i| grid.iter().map(move |p| (i, p)))
        .collect();
    let probe_omega = cfg.omegas.first().cloned();
    cases
        .par_iter()
        .flat_map_iter(|&(i, p)| {
            let f = Gen1Family::new_unchecked(i, 1, p).expect("index in range");
            let key = format!("i={i},m=1,ell={},omega={}", format_scalar(p.ell()), format_scalar(p.omega()));
            let mut out = Vec::new();
            let set = match enumerate_residues(&f.deformed_superpotential(), p.omega()) {
                Ok(s) => s,
                Err(e) => return vec![errored(g, key, "residue enumeration", &e)],
            };
            let printed = published::gen2_residue_sets(i, p).expect("index in range");
            let pairs = [
                ("b1", &set.b1),
                ("d1", set.d1.as_ref().expect("seed present")),
                ("d1p", &set.d1p),
                ("c1", &set.c1),
            ];
            for ((label, pair), want) in pairs.iter().zip(&printed) {
                out.push(check(g, key.clone(), format!("{label} vieta"), pair.vieta_holds(), ""));
                let got: Vec<String> = pair.roots().iter().map(format_scalar).collect();
                let matches = pair.matches(want);
                let witness = if matches {
                    String::new()
                } else {
                    let w: Vec<String> = want.iter().map(format_scalar).collect();
                    format!("derived {{{}}}, printed {{{}}}", got.join(", "), w.join(", "))
                };
                out.push(compare(g, key.clone(), format!("{label} printed set"), matches, witness));
            }
            let analytic_zero = set.analytic.iter().all(|c| c.0 == int(0));
            out.push(check(g, key.clone(), "analytic part C = 0", analytic_zero, ""));
            if Some(p.omega()) == probe_omega.as_ref() && *p.ell() <= int(2) {
                match enumerate_other_choices(&f) {
                    Ok(reports) => {
                        let published_count = reports.iter().filter(|r| r.class == ChoiceClass::Published).count();
                        let conventional_count =
                            reports.iter().filter(|r| r.class == ChoiceClass::Conventional).count();
                        let r_dependent = reports.iter().filter(|r| r.r_dependent).count();
                        out.push(check(
                            g,
                            key,
                            "16 selections, one published, one conventional",
                            reports.len() == 16 && published_count == 1 && conventional_count == 1,
                            format!("{} selections, {r_dependent} with r-dependent R2", reports.len()),
                        ));
                    }
                    Err(e) => out.push(errored(g, key, "selection enumeration", &e)),
                }
            }
            out
        })
        .collect()
}

fn gen2_families(cfg: &SuiteConfig) -> Vec<(String, Result<Gen2Family>)> {
    let reparams = cfg.reparams();
    let mut grid = Vec::new();
    for &i in &cfg.families {
        for nprime in 0..=cfg.nprime_max {
            for x in &reparams {
                for w in &cfg.gen2_omegas {
                    grid.push((i, nprime, x.clone(), w.clone()));
                }
            }
        }
    }
    grid.into_par_iter()
        .map(|(i, nprime, x, w)| {
            let key = format!("gen2:i={i},nprime={nprime},x={},omega={}", format_scalar(&x), format_scalar(&w));
            let f = Gen2Family::new_unchecked(i, nprime, &x, &w);
            (f.as_ref().map(|f| f.key()).unwrap_or(key), f)
        })
        .collect()
}

fn gen2_riccati_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Gen2Riccati;
    gen2_families(cfg)
        .par_iter()
        .flat_map_iter(|(key, f)| {
            let f = match f {
                Ok(f) => f,
                Err(e) => return vec![errored(g, key.clone(), "construction", e)],
            };
            let res = f.riccati_residual();
            let w = f.params().omega();
            let printed = published::gen2_r2(f.i(), f.nprime(), f.reparam(), w).expect("index in range");
            let printed_ok = printed == *f.r2();
            let printed_witness = if printed_ok {
                String::new()
            } else {
                format!(
                    "derived {}, printed {}, printed residual {}",
                    format_scalar(f.r2()),
                    format_scalar(&printed),
                    residual_witness(&f.riccati_residual_with(&printed))
                )
            };
            vec![
                check(g, key.clone(), "riccati residual", res.is_zero(), residual_witness(&res)),
                check(g, key.clone(), "deg P_N = n'+1", f.pn_poly().degree() == Some(f.nprime() + 1), ""),
                compare(g, key.clone(), "printed R2", printed_ok, printed_witness),
            ]
        })
        .collect()
}

fn gen2_residual_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Gen2Residual;
    gen2_families(cfg)
        .par_iter()
        .filter_map(|(key, f)| f.as_ref().ok().map(|f| (key, f)))
        .flat_map_iter(|(key, f)| {
            let w = f.params().omega();
            let v = f.reference_potential();
            let first = f.first_index();
            let mut bad = Vec::new();
            let mut shift_ok = true;
            let mut printed_energy = true;
            for n in first..=first + cfg.gen2_n_max {
                let ok = f
                    .eigenfunction(n)
                    .and_then(|psi| schrodinger_residual(&v, &psi, &f.energy(n), w))
                    .map(|r| r.is_zero())
                    .unwrap_or(false);
                if !ok {
                    bad.push(n);
                }
                shift_ok &= f.energy(n) - f.parent().energy(n) == *f.r2();
                printed_energy &= published::gen2_energy(f.i(), n, f.nprime(), f.params()).ok().as_ref() == Some(&f.energy(n));
            }
            let pn = f.pn_poly();
            let vbar = published::gen2_potential(f.i(), f.nprime(), f.params(), pn).expect("index in range");
            let vbar_ok = vbar == f.potential();
            let vbar_witness = match f.potential().constant_offset(&vbar) {
                _ if vbar_ok => String::new(),
                Some(c) => format!("derived minus printed = {}", format_scalar(&c)),
                None => "derived minus printed is not constant".to_string(),
            };
            let wbar = published::gen2_superpotential(f.i(), f.params(), pn).expect("index in range");
            let wbar_ok = wbar == f.superpotential();
            let wbar_witness = if wbar_ok {
                String::new()
            } else {
                format!(
                    "1/r coefficient derived {}, printed {}",
                    format_scalar(f.superpotential().inv_r()),
                    format_scalar(wbar.inv_r())
                )
            };
            let name = format!("residual n<={}", first + cfg.gen2_n_max);
            vec![
                check(g, key.clone(), name, bad.is_empty(), if bad.is_empty() { String::new() } else { format!("n={bad:?}") }),
                check(g, key.clone(), "energy shift equals R2", shift_ok, ""),
                compare(g, key.clone(), "printed energies", printed_energy, ""),
                compare(g, key.clone(), "printed potential", vbar_ok, vbar_witness),
                compare(g, key.clone(), "printed superpotential", wbar_ok, wbar_witness),
            ]
        })
        .collect()
}

fn operator_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Operator;
    gen2_families(cfg)
        .par_iter()
        .filter_map(|(key, f)| f.as_ref().ok().map(|f| (key, f)))
        .flat_map_iter(|(key, f)| {
            let first = f.first_index();
            let mut constants = Vec::new();
            let mut ok = true;
            let mut printed_q = true;
            for n in first..=first + 3 {
                let k = match (f.operator_eigenfunction(n), f.eigenfunction(n)) {
                    (Ok(a), Ok(b)) => a.proportionality(&b),
                    _ => None,
                };
                match k {
                    Some(k) => constants.push(format_scalar(&k)),
                    None => {
                        ok = false;
                        constants.push("none".into());
                    }
                }
                let e = f.parent().eop(n).expect("index in range").poly;
                let printed = published::gen2_two_index(f.i(), f.params(), &e, f.pn_poly()).expect("index in range");
                printed_q &= f.two_index_eop(n).map(|q| q.poly == printed).unwrap_or(false);
            }
            let mut out = vec![
                check(g, key.clone(), "operator route proportional to closed form n<=3", ok, format!("k = {}", constants.join(", "))),
                compare(g, key.clone(), "printed two-index polynomial", printed_q, ""),
            ];
            if f.i() == 2 && f.nprime() >= 1 {
                let printed = published::gen2_type_two(f.nprime(), f.reparam());
                let matches = printed.monic() == f.pn_poly().monic();
                out.push(compare(g, key.clone(), "printed moving-pole polynomial", matches, ""));
            }
            out
        })
        .collect()
}

/// Fixed orthogonality cases: the classical family, first generation i=2,
/// m=1, ℓ=1, ω=2 and second generation i=1, d=−2, n′=1, ω=1.
fn orthogonality_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Orthogonality;
    let q = &cfg.quadrature;
    let classical = OscParams::new(int(2), int(1)).expect("positive omega");
    let gen1 = Gen1Family::new(2, 1, &classical).expect("valid family");
    let gen2 = Gen2Family::new(1, 1, &int(-2), &int(1)).expect("valid family");
    let cases = [
        (FamilyRef::Classical(&classical), 4usize),
        (FamilyRef::Gen1(&gen1), 4),
        (FamilyRef::Gen2(&gen2), 3),
    ];
    cases
        .par_iter()
        .flat_map_iter(|&(fam, n_max)| {
            let key = fam.key();
            let base = orthogonality_matrix(fam, n_max, q);
            let doubled = orthogonality_matrix(fam, n_max, &q.with_panels(2 * q.panels));
            match (base, doubled) {
                (Ok(a), Ok(b)) => {
                    let off = max_off_diagonal(&a);
                    let rel = max_normalized_off_diagonal(&a);
                    let diag = (0..a.len()).all(|j| a[j][j] > 0.0);
                    let change = max_relative_change(&a, &b);
                    vec![
                        check(g, key.clone(), format!("off-diagonal < 1e-8, n<={n_max}"), off < 1e-8, format!("max |G_jk| = {off:.3e}, normalized {rel:.3e}")),
                        check(g, key.clone(), "diagonal positive", diag, ""),
                        check(g, key, "panel doubling stable", change <= q.rel_tol, format!("max change {change:.3e}")),
                    ]
                }
                (Err(e), _) | (_, Err(e)) => vec![errored(g, key, "gram matrix", &e)],
            }
        })
        .collect()
}

fn scan_checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let g = Group::Scan;
    let nprimes: Vec<usize> = (1..=cfg.scan_nprime_max).collect();
    let reparams = cfg.scan_reparams();
    cfg.families
        .iter()
        .flat_map(|&i| {
            let key = format!("scan:i={i},omega={}", format_scalar(&cfg.scan_omega));
            match zero_free_scan(i, &nprimes, &reparams, &cfg.scan_omega) {
                Err(e) => vec![errored(g, key, "zero-free scan", &e)],
                Ok(rows) => {
                    let covered = rows.iter().filter(|r| r.covered()).count();
                    let valid = rows.iter().filter(|r| r.certificate_valid).count();
                    let mut out = vec![check(
                        g,
                        key.clone(),
                        "scan completed",
                        true,
                        format!("{} points, {covered} covered by a window, {valid} certified", rows.len()),
                    )];
                    for r in rows.iter().filter(|r| !r.agree()) {
                        out.push(compare(
                            g,
                            key.clone(),
                            format!("window disagreement nprime={} x={}", r.nprime, format_scalar(&r.reparam)),
                            false,
                            format!("R2 = {}, {} root(s) in (0, inf)", format_scalar(&r.r2), r.roots_in_domain),
                        ));
                    }
                    out
                }
            }
        })
        .collect()
}
