//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use xlaguerre::deform1::{l1_ode_residual, Gen1Family};
use xlaguerre::deform2::{enumerate_residues, Gen2Family};
use xlaguerre::laguerre::{classical_eigenfunction, classical_energy, radial_oscillator, OscParams};
use xlaguerre::published;
use xlaguerre::ratcore::{format_scalar, frac, int, Scalar};
use xlaguerre::susy::{catalog_superpotential, oscillator_offset, schrodinger_residual, shape_invariance_shift};
use xlaguerre::verify::{
    max_off_diagonal, max_relative_change, orthogonality_matrix, run_suite_with, zero_free_scan, FamilyRef,
    QuadratureConfig, SuiteConfig,
};

const OFF_DIAGONAL_TOL: f64 = 1e-8;
const PANEL_REL_TOL: f64 = 1e-9;
const N_CLASSICAL: usize = 8;
const N_GEN1: usize = 5;
const N_GEN2: usize = 4;
const NPRIME_MAX: usize = 5;
const N_OPERATOR: usize = 3;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn omegas() -> [Scalar; 3] {
    [int(1), int(2), frac(1, 2)]
}

fn grid(ell_max: i64) -> Vec<OscParams> {
    omegas()
        .iter()
        .flat_map(|w| (0..=ell_max).map(move |l| OscParams::new(w.clone(), int(l)).unwrap()))
        .collect()
}

fn gen2_grid() -> Vec<Gen2Family> {
    let mut points = Vec::new();
    for i in 1..=3u8 {
        for nprime in 0..=NPRIME_MAX {
            for x in -4..=3 {
                for w in [int(1), int(2)] {
                    points.push((i, nprime, int(x), w));
                }
            }
        }
    }
    points
        .into_par_iter()
        .map(|(i, nprime, x, w)| Gen2Family::new_unchecked(i, nprime, &x, &w).unwrap())
        .collect()
}

fn partners() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for p in grid(5) {
        for i in 1..=4u8 {
            checked += 1;
            let derived = catalog_superpotential(i, &p).unwrap().partner_potentials(p.omega());
            if derived != published::printed_partners(i, &p).unwrap() || shape_invariance_shift(i, &p).is_err() {
                bad.push(format!("i={i},ell={},omega={}", p.ell(), p.omega()));
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} rows, {} mismatched {bad:?}", bad.len()))
}

fn classical() -> Outcome {
    let mut bad = Vec::new();
    for p in grid(5) {
        let v = radial_oscillator(&p).shifted(&oscillator_offset(1, &p).unwrap());
        for n in 0..=N_CLASSICAL {
            let e = classical_energy(n, &p);
            let ok = e == int(2 * n as i64) * p.omega()
                && schrodinger_residual(&v, &classical_eigenfunction(n, &p), &e, p.omega()).unwrap().is_zero();
            if !ok {
                bad.push(format!("ell={},omega={},n={n}", p.ell(), p.omega()));
            }
        }
    }
    outcome(bad.is_empty(), format!("n<={N_CLASSICAL}, {} nonzero residuals", bad.len()))
}

fn gen1() -> Outcome {
    let families: Vec<Gen1Family> = grid(5)
        .iter()
        .flat_map(|p| (1..=3u8).flat_map(move |i| (1..=3).map(move |m| Gen1Family::new_unchecked(i, m, p).unwrap())))
        .filter(Gen1Family::is_valid)
        .collect();
    let residual_bad: usize = families
        .par_iter()
        .map(|f| {
            let v = f.reference_potential();
            (f.first_index()..=N_GEN1)
                .filter(|&n| {
                    let m = int(f.m() as i64);
                    let nn = int(n as i64);
                    let expected = int(2) * f.params().omega() * if f.i() == 3 { nn - m } else { nn + m };
                    let psi = f.eigenfunction(n).unwrap();
                    !(f.energy(n) == expected
                        && schrodinger_residual(&v, &psi, &expected, f.params().omega()).unwrap().is_zero())
                })
                .count()
        })
        .sum();
    let mut printed_bad = 0;
    let mut corrected_bad = 0;
    let mut polys = 0;
    for f in families.iter().filter(|f| f.i() == 2 && f.m() == 1) {
        for n in 0..=N_GEN1 {
            polys += 1;
            let poly = f.eop(n).unwrap().poly;
            if !published::l1_ode_printed_residual(&(f.alpha() + frac(1, 2)), n, &poly).is_zero() {
                printed_bad += 1;
            }
            if !l1_ode_residual(f.alpha(), n, &poly).is_zero() {
                corrected_bad += 1;
            }
        }
    }
    outcome(
        residual_bad == 0 && printed_bad == 0,
        format!(
            "{} valid families, {residual_bad} nonzero residuals; m=1 type I polynomials: printed equation fails for {printed_bad}/{polys}, derived equation fails for {corrected_bad}/{polys}",
            families.len()
        ),
    )
}

fn conventional() -> Outcome {
    let results: Vec<(bool, bool)> = grid(5)
        .par_iter()
        .flat_map_iter(|p| (1..=3u8).flat_map(move |i| (1..=3).map(move |m| Gen1Family::new_unchecked(i, m, p).unwrap())))
        .filter(Gen1Family::is_valid)
        .map(|f| {
            let w = f.conventional_superpotential().unwrap();
            let (vm, _) = w.partner_potentials(f.params().omega());
            let identity = vm == f.reference_potential().shifted(&-f.conventional_ground_energy());
            let printed = published::printed_conventional_row(f.i(), f.m(), f.params()).unwrap() == w.parts();
            (identity, printed)
        })
        .collect();
    let failed = results.iter().filter(|r| !r.0).count();
    let flagged = results.iter().filter(|r| !r.1).count();
    outcome(
        failed == 0,
        format!("{} valid families, identity fails for {failed}, {flagged} printed rows flagged", results.len()),
    )
}

fn residues() -> Outcome {
    let labels = ["b1", "d1", "d1'", "c1"];
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for p in grid(5) {
        for i in 1..=3u8 {
            let f = Gen1Family::new_unchecked(i, 1, &p).unwrap();
            let set = enumerate_residues(&f.deformed_superpotential(), p.omega()).unwrap();
            let printed = published::gen2_residue_sets(i, &p).unwrap();
            let pairs = [&set.b1, set.d1.as_ref().unwrap(), &set.d1p, &set.c1];
            for ((pair, want), label) in pairs.iter().zip(&printed).zip(labels) {
                checked += 1;
                if !pair.matches(want) {
                    let got: Vec<String> = pair.roots().iter().map(format_scalar).collect();
                    let key = format!("i={i} {label} derived {{{}}} printed {{{}, {}}}", got.join(", "), want[0], want[1]);
                    if !mismatches.contains(&key) {
                        mismatches.push(key);
                    }
                }
            }
        }
    }
    outcome(mismatches.is_empty(), format!("{checked} pairs; mismatches: {mismatches:?}"))
}

fn gen2_keystone(families: &[Gen2Family]) -> Outcome {
    let rows: Vec<(u8, bool, bool, bool)> = families
        .par_iter()
        .map(|f| {
            let w = f.params().omega();
            let printed_r2 = published::gen2_r2(f.i(), f.nprime(), f.reparam(), w).unwrap();
            let riccati = f.riccati_residual_with(&printed_r2).is_zero();
            let derived = f.riccati_residual().is_zero();
            let v = f.reference_potential();
            let schrodinger = (f.first_index()..=f.first_index() + N_GEN2).all(|n| {
                let e = published::gen2_energy(f.i(), n, f.nprime(), f.params()).unwrap();
                schrodinger_residual(&v, &f.eigenfunction(n).unwrap(), &e, w).unwrap().is_zero()
            });
            (f.i(), riccati, derived, schrodinger)
        })
        .collect();
    let mut parts = Vec::new();
    let mut pass = true;
    for i in 1..=3u8 {
        let of_i: Vec<_> = rows.iter().filter(|r| r.0 == i).collect();
        let ric = of_i.iter().filter(|r| !r.1).count();
        let der = of_i.iter().filter(|r| !r.2).count();
        let sch = of_i.iter().filter(|r| !r.3).count();
        pass &= ric == 0 && sch == 0;
        parts.push(format!(
            "i={i}: {} points, printed R2 residual nonzero {ric}, derived R2 residual nonzero {der}, schrodinger nonzero {sch}",
            of_i.len()
        ));
    }
    outcome(pass, parts.join("; "))
}

fn operator(families: &[Gen2Family]) -> Outcome {
    let results: Vec<Option<Vec<Scalar>>> = families
        .par_iter()
        .map(|f| {
            (f.first_index()..=f.first_index() + N_OPERATOR)
                .map(|n| f.operator_eigenfunction(n).ok()?.proportionality(&f.eigenfunction(n).ok()?))
                .collect()
        })
        .collect();
    let bad = results.iter().filter(|r| r.is_none()).count();
    let sample = families
        .iter()
        .zip(&results)
        .find(|(f, _)| f.i() == 1 && f.nprime() == 1 && *f.reparam() == int(-2) && *f.params().omega() == int(1))
        .and_then(|(_, r)| r.as_ref())
        .map(|ks| ks.iter().map(format_scalar).collect::<Vec<_>>().join(", "))
        .unwrap_or_default();
    outcome(
        bad == 0,
        format!("{} families, n<={N_OPERATOR}, {bad} not proportional; k for i=1,n'=1,d=-2: [{sample}]", families.len()),
    )
}

fn scans() -> Outcome {
    let nprimes: Vec<usize> = (1..=NPRIME_MAX).collect();
    let xs: Vec<Scalar> = (-6..=5).map(int).collect();
    let mut parts = Vec::new();
    let mut pass = true;
    for i in 1..=3u8 {
        let rows = zero_free_scan(i, &nprimes, &xs, &int(1)).unwrap();
        let covered = rows.iter().filter(|r| r.covered()).count();
        let flagged = rows.iter().filter(|r| !r.agree()).count();
        if i == 1 {
            pass &= flagged == 0 && covered > 0;
        }
        parts.push(format!("i={i}: {} points, {covered} covered, {flagged} flagged", rows.len()));
    }
    outcome(pass, parts.join("; "))
}

fn orthogonality() -> Outcome {
    let q = QuadratureConfig {
        rel_tol: PANEL_REL_TOL,
        ..QuadratureConfig::default()
    };
    let classical: Vec<OscParams> = [(int(1), int(0)), (int(2), int(1)), (frac(1, 2), int(3))]
        .into_iter()
        .map(|(w, l)| OscParams::new(w, l).unwrap())
        .collect();
    let gen1 = Gen1Family::new(2, 1, &OscParams::new(int(2), int(1)).unwrap()).unwrap();
    let mut cases: Vec<FamilyRef> = classical.iter().map(FamilyRef::Classical).collect();
    cases.push(FamilyRef::Gen1(&gen1));
    let rows: Vec<String> = cases
        .par_iter()
        .map(|&fam| {
            let a = orthogonality_matrix(fam, 4, &q);
            let b = orthogonality_matrix(fam, 4, &q.with_panels(2 * q.panels));
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    let off = max_off_diagonal(&a);
                    let diag = (0..a.len()).all(|j| a[j][j] > 0.0);
                    let change = max_relative_change(&a, &b);
                    let ok = off < OFF_DIAGONAL_TOL && diag && change <= PANEL_REL_TOL;
                    format!("{}{} off {off:.1e} doubling {change:.1e}", if ok { "" } else { "!" }, fam.key())
                }
                (Err(e), _) | (_, Err(e)) => format!("!{} {e}", fam.key()),
            }
        })
        .collect();
    outcome(rows.iter().all(|r| !r.starts_with('!')), rows.join("; "))
}

fn determinism() -> Outcome {
    let cfg = SuiteConfig::default();
    let a = run_suite_with(&cfg).to_csv().unwrap();
    let b = run_suite_with(&cfg).to_csv().unwrap();
    outcome(a == b, format!("{} report bytes, identical: {}", a.len(), a == b))
}

fn main() {
    let gen2 = gen2_grid();
    let criteria: Vec<(u32, &str, Option<u64>, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "oscillator partner potentials and shape invariance", Some(1), Box::new(partners)),
        (2, "classical spectrum residuals", Some(5), Box::new(classical)),
        (3, "first-generation residuals and type I polynomial equation", Some(60), Box::new(gen1)),
        (4, "conventional superpotential identity", Some(10), Box::new(conventional)),
        (5, "dual-valued residue sets against printed sets", Some(1), Box::new(residues)),
        (6, "second-generation Riccati and Schrodinger residuals", Some(120), Box::new(|| gen2_keystone(&gen2))),
        (7, "operator route proportional to closed form", None, Box::new(|| operator(&gen2))),
        (8, "zero-free scans against windows", Some(30), Box::new(scans)),
        (9, "numeric orthogonality", Some(30), Box::new(orthogonality)),
        (10, "whole-suite determinism", None, Box::new(determinism)),
    ];
    let mut failed = Vec::new();
    for (id, title, budget, run) in &criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = budget.map_or(true, |b| elapsed <= Duration::from_secs(b));
        let pass = o.pass && in_time;
        let limit = budget.map_or(String::new(), |b| format!(" (limit {b} s)"));
        println!(
            "{} criterion {id:>2}: {title} [{:.2} s{limit}] {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            o.detail
        );
        if !pass {
            failed.push(*id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
    } else {
        println!("acceptance: {} of {} criteria fail: {failed:?}", failed.len(), criteria.len());
        std::process::exit(1);
    }
}
