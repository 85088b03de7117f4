//! JSON entry points for the static demo page in `www/`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use xlaguerre::deform1::Gen1Family;
use xlaguerre::deform2::Gen2Family;
use xlaguerre::laguerre::{classical_eigenfunction, classical_energy, radial_oscillator, OscParams};
use xlaguerre::ratcore::{format_scalar, int, parse_scalar, Scalar, YPoly};
use xlaguerre::susy::{oscillator_offset, Potential, WaveFunction};
use xlaguerre::verify::zero_free_scan;

const MAX_STATES: usize = 6;
const MAX_SAMPLES: usize = 4000;

struct Selected {
    key: String,
    valid: bool,
    omega: Scalar,
    potential: Potential,
    first: usize,
    r2: Option<Scalar>,
    states: Vec<(usize, Scalar, YPoly, WaveFunction)>,
}

fn scalar(name: &str, text: &str) -> Result<Scalar, String> {
    parse_scalar(text).map_err(|_| format!("{name}: cannot read `{text}` as p/q"))
}

/// `param` is ℓ for iterations 0 and 1 and the family reparameterization
/// (d, a or b) for iteration 2.
fn select(iter: u8, family: u8, m: usize, nprime: usize, param: &str, omega: &str, count: usize) -> Result<Selected, String> {
    let omega = scalar("omega", omega)?;
    if omega <= int(0) {
        return Err("omega must be positive".into());
    }
    let param = scalar("parameter", param)?;
    let count = count.clamp(1, MAX_STATES);
    let err = |e: xlaguerre::error::Error| e.to_string();
    match iter {
        0 => {
            let p = OscParams::new(omega.clone(), param).map_err(err)?;
            let states = (0..count)
                .map(|n| {
                    let psi = classical_eigenfunction(n, &p);
                    (n, classical_energy(n, &p), psi.num().clone(), psi)
                })
                .collect();
            Ok(Selected {
                key: format!("gen0:ell={},omega={}", format_scalar(p.ell()), format_scalar(&omega)),
                valid: true,
                potential: radial_oscillator(&p).shifted(&oscillator_offset(1, &p).map_err(err)?),
                first: 0,
                r2: None,
                omega,
                states,
            })
        }
        1 => {
            let p = OscParams::new(omega.clone(), param).map_err(err)?;
            let f = Gen1Family::new_unchecked(family, m, &p).map_err(err)?;
            let first = f.first_index();
            let states = (first..first + count)
                .map(|n| Ok((n, f.energy(n), f.eop(n).map_err(err)?.poly, f.eigenfunction(n).map_err(err)?)))
                .collect::<Result<_, String>>()?;
            Ok(Selected {
                key: f.key(),
                valid: f.is_valid(),
                potential: f.reference_potential(),
                first,
                r2: None,
                omega,
                states,
            })
        }
        2 => {
            if m != 1 {
                return Err(xlaguerre::error::Error::SecondIterationM(m).to_string());
            }
            let f = Gen2Family::new_unchecked(family, nprime, &param, &omega).map_err(err)?;
            let first = f.first_index();
            let states = (first..first + count)
                .map(|n| Ok((n, f.energy(n), f.two_index_eop(n).map_err(err)?.poly, f.eigenfunction(n).map_err(err)?)))
                .collect::<Result<_, String>>()?;
            Ok(Selected {
                key: f.key(),
                valid: f.is_valid(),
                potential: f.reference_potential(),
                first,
                r2: Some(f.r2().clone()),
                omega,
                states,
            })
        }
        _ => Err(format!("iteration must be 0, 1 or 2 (got {iter})")),
    }
}

fn finite(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

/// Samples V(r) and the first `count` states on (0, rmax]. States are scaled
/// to unit maximum on the grid and offset by their energies.
#[allow(clippy::too_many_arguments)]
pub fn curves(
    iter: u8,
    family: u8,
    m: usize,
    nprime: usize,
    param: &str,
    omega: &str,
    count: usize,
    rmax: f64,
    samples: usize,
) -> Result<String, String> {
    if !(rmax > 0.0 && rmax.is_finite()) {
        return Err("rmax must be positive".into());
    }
    let samples = samples.clamp(2, MAX_SAMPLES);
    let s = select(iter, family, m, nprime, param, omega, count)?;
    let rs: Vec<f64> = (1..=samples).map(|k| rmax * k as f64 / samples as f64).collect();
    let v: Vec<Value> = rs.iter().map(|&r| finite(s.potential.eval_f64(r, &s.omega))).collect();
    let states: Vec<Value> = s
        .states
        .iter()
        .map(|(n, e, _, psi)| {
            let raw: Vec<f64> = rs.iter().map(|&r| psi.eval_f64(r, &s.omega)).collect();
            let peak = raw.iter().fold(0.0f64, |a, x| a.max(x.abs()));
            let scale = if peak > 0.0 && peak.is_finite() { 1.0 / peak } else { 1.0 };
            json!({
                "n": n,
                "energy": format_scalar(e),
                "energy_value": xlaguerre::ratcore::to_f64(e),
                "psi": raw.iter().map(|x| finite(x * scale)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({ "key": s.key, "valid": s.valid, "r": rs, "V": v, "states": states }).to_string())
}

/// Exact numerator polynomials and energies of the first `count` states.
pub fn polynomials(iter: u8, family: u8, m: usize, nprime: usize, param: &str, omega: &str, count: usize) -> Result<String, String> {
    let s = select(iter, family, m, nprime, param, omega, count)?;
    let states: Vec<Value> = s
        .states
        .iter()
        .map(|(n, e, poly, _)| {
            json!({
                "n": n,
                "energy": format_scalar(e),
                "degree": poly.degree(),
                "polynomial": poly.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "key": s.key,
        "valid": s.valid,
        "first_index": s.first,
        "R2": s.r2.as_ref().map(format_scalar),
        "potential": s.potential.value.to_string(),
        "states": states,
    })
    .to_string())
}

/// Zero-free scan over n′ ∈ 1..=nprime_max and integer reparameterizations lo..=hi.
pub fn scan(family: u8, nprime_max: usize, lo: i32, hi: i32, omega: &str) -> Result<String, String> {
    if lo > hi || i64::from(hi) - i64::from(lo) > 40 || nprime_max > 10 {
        return Err("grid too large or empty: at most 41 parameter values and n' <= 10".into());
    }
    let omega = scalar("omega", omega)?;
    if omega <= int(0) {
        return Err("omega must be positive".into());
    }
    let nprimes: Vec<usize> = (1..=nprime_max).collect();
    let xs: Vec<Scalar> = (lo..=hi).map(|x| int(i64::from(x))).collect();
    let rows = zero_free_scan(family, &nprimes, &xs, &omega).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "nprime": r.nprime,
                "reparam": format_scalar(&r.reparam),
                "R2": format_scalar(&r.r2),
                "roots": r.roots_in_domain,
                "window": r.window_predicts_valid,
                "certificate": r.certificate_valid,
                "agree": r.agree(),
            })
        })
        .collect();
    Ok(json!({ "family": family, "rows": rows }).to_string())
}

#[wasm_bindgen(js_name = curves)]
#[allow(clippy::too_many_arguments)]
pub fn curves_js(
    iter: u8,
    family: u8,
    m: usize,
    nprime: usize,
    param: &str,
    omega: &str,
    count: usize,
    rmax: f64,
    samples: usize,
) -> Result<String, JsError> {
    curves(iter, family, m, nprime, param, omega, count, rmax, samples).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = polynomials)]
pub fn polynomials_js(iter: u8, family: u8, m: usize, nprime: usize, param: &str, omega: &str, count: usize) -> Result<String, JsError> {
    polynomials(iter, family, m, nprime, param, omega, count).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = scan)]
pub fn scan_js(family: u8, nprime_max: usize, lo: i32, hi: i32, omega: &str) -> Result<String, JsError> {
    scan(family, nprime_max, lo, hi, omega).map_err(|e| JsError::new(&e))
}
