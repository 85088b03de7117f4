//! Command-line front end: `gen`, `verify`, `scan`, `plot-data` and `list`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use xlaguerre::deform1::Gen1Family;
use xlaguerre::deform2::Gen2Family;
use xlaguerre::laguerre::OscParams;
use xlaguerre::ratcore::{format_scalar, serial::scalar_str, Scalar, YPoly};
use xlaguerre::susy::{Potential, WaveFunction};
use xlaguerre::verify::{catalog_csv, run_suite_with, scan_csv, zero_free_scan, Group, ScanRow, SuiteConfig};

pub mod select;

use select::{scalar, Family, Selector};

/// A rejected request; reported on stderr with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "xlag", version, about = "Exact rational extensions of the radial oscillator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit a family with its potential and selected states.
    Gen {
        #[command(flatten)]
        select: Selector,
        /// State indices: "3", "0..4" or "1,3,5". Defaults to the first four.
        #[arg(long)]
        n: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        /// key = value configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated groups, overriding the config.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify P_N over a grid of (n′, reparameterization) and compare with the windows.
    Scan {
        #[arg(long)]
        family: u8,
        /// Range "1..5" or list "1,2,4".
        #[arg(long, default_value = "1..5")]
        nprime: String,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        omega: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample V(r), w(r) and ψₙ(r) on r = rmin, rmin+step, ..., rmax.
    PlotData {
        #[command(flatten)]
        select: Selector,
        #[arg(long)]
        n: Option<String>,
        #[arg(long, default_value_t = 8.0)]
        rmax: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        /// First grid point; defaults to `step`.
        #[arg(long, allow_hyphen_values = true)]
        rmin: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List suite groups or the first-deformation catalog.
    List {
        #[arg(value_enum, default_value = "groups")]
        what: ListWhat,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        #[arg(long, default_value_t = 5)]
        ell_max: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        omega: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListWhat {
    Groups,
    Families,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilyRecord {
    Classical(OscParams),
    Gen1(Gen1Family),
    Gen2(Gen2Family),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateRecord {
    pub n: usize,
    #[serde(with = "scalar_str")]
    pub energy: Scalar,
    pub polynomial: YPoly,
    pub eigenfunction: WaveFunction,
}

/// The `gen` document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenRecord {
    pub key: String,
    pub iter: u8,
    pub valid: bool,
    #[serde(rename = "R1", default, skip_serializing_if = "Option::is_none", with = "opt_scalar")]
    pub r1: Option<Scalar>,
    #[serde(rename = "R2", default, skip_serializing_if = "Option::is_none", with = "opt_scalar")]
    pub r2: Option<Scalar>,
    pub family: FamilyRecord,
    pub potential: Potential,
    pub weight: WaveFunction,
    pub states: Vec<StateRecord>,
}

mod opt_scalar {
    use serde::{Deserialize, Deserializer, Serializer};
    use xlaguerre::ratcore::{format_scalar, parse_scalar, Scalar};

    pub fn serialize<S: Serializer>(x: &Option<Scalar>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_str(&format_scalar(v)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Scalar>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| parse_scalar(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Parses "k", "a..b" (inclusive) or "a,b,c".
pub fn parse_indices(flag: &str, text: &str) -> Result<Vec<usize>, UsageError> {
    let bad = || UsageError(format!("--{flag}: expected N, A..B or A,B,C (got `{text}`)"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect()
}

/// Parses an integer range "a..b" (inclusive) or a list of rationals.
pub fn parse_scalars(flag: &str, text: &str) -> Result<Vec<Scalar>, UsageError> {
    if let Some((lo, hi)) = text.split_once("..") {
        let bad = || UsageError(format!("--{flag}: range bounds must be integers (got `{text}`)"));
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).map(xlaguerre::ratcore::int).collect());
    }
    text.split(',').map(|s| scalar(flag, s)).collect()
}

fn io_err(path: &std::path::Path, e: std::io::Error) -> UsageError {
    UsageError(format!("{}: {e}", path.display()))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), UsageError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_err(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn states(family: &Family, n: &Option<String>) -> Result<Vec<usize>, UsageError> {
    let first = family.first_index();
    let ns = match n {
        Some(text) => parse_indices("n", text)?,
        None => (first..first + 4).collect(),
    };
    if let Some(&bad) = ns.iter().find(|&&k| k < first) {
        return Err(UsageError(format!("--n {bad} is below the first state index {first} of {}", family.key())));
    }
    Ok(ns)
}

pub fn gen_record(select: &Selector, n: &Option<String>) -> Result<GenRecord, UsageError> {
    let family = select.resolve()?;
    let ns = states(&family, n)?;
    let mut records = Vec::new();
    for k in ns {
        records.push(StateRecord {
            n: k,
            energy: family.energy(k),
            polynomial: family.polynomial(k)?,
            eigenfunction: family.eigenfunction(k)?,
        });
    }
    let (r1, r2, record) = match &family {
        Family::Classical(p) => (None, None, FamilyRecord::Classical(p.clone())),
        Family::Gen1(f) => (Some(f.r1().clone()), None, FamilyRecord::Gen1(f.clone())),
        Family::Gen2(f) => (Some(f.r1().clone()), Some(f.r2().clone()), FamilyRecord::Gen2(f.clone())),
    };
    Ok(GenRecord {
        key: family.key(),
        iter: select.iter,
        valid: family.is_valid(),
        r1,
        r2,
        family: record,
        potential: family.potential(),
        weight: family.weight(),
        states: records,
    })
}

fn gen_text(rec: &GenRecord, format: Format) -> Result<String, UsageError> {
    match format {
        Format::Json => serde_json::to_string_pretty(rec).map(|s| s + "\n").map_err(|e| UsageError(e.to_string())),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let err = |e: csv::Error| UsageError(e.to_string());
            w.write_record(["key", "n", "energy", "degree", "coefficients"]).map_err(err)?;
            for s in &rec.states {
                let coeffs: Vec<String> = s.polynomial.coeffs().iter().map(format_scalar).collect();
                let degree = s.polynomial.degree().map_or(String::new(), |d| d.to_string());
                w.write_record([rec.key.as_str(), &s.n.to_string(), &format_scalar(&s.energy), &degree, &coeffs.join(" ")])
                    .map_err(err)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| UsageError(e.to_string()))?).map_err(|e| UsageError(e.to_string()))
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{} ({})", rec.key, if rec.valid { "valid" } else { "invalid" });
            if let Some(r1) = &rec.r1 {
                let _ = writeln!(out, "R1 = {}", format_scalar(r1));
            }
            if let Some(r2) = &rec.r2 {
                let _ = writeln!(out, "R2 = {}", format_scalar(r2));
            }
            let _ = writeln!(out, "V(y) = {}", rec.potential.value);
            for s in &rec.states {
                let _ = writeln!(out, "n = {}: E = {}, polynomial {}", s.n, format_scalar(&s.energy), s.polynomial);
            }
            Ok(out)
        }
    }
}

fn verify(config: &Option<PathBuf>, only: &Option<String>, format: Format, out: &Option<PathBuf>) -> Result<i32, UsageError> {
    let mut cfg = match config {
        Some(path) => SuiteConfig::load(path).map_err(|e| UsageError(e.to_string()))?,
        None => SuiteConfig::default(),
    };
    if let Some(groups) = only {
        let mut parsed = groups
            .split(',')
            .map(|g| g.trim().parse::<Group>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| UsageError(e.to_string()))?;
        parsed.sort();
        parsed.dedup();
        cfg.groups = parsed;
    }
    let report = run_suite_with(&cfg);
    let text = match format {
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv().map_err(|e| UsageError(e.to_string()))?,
        Format::Json => serde_json::to_string_pretty(&report).map_err(|e| UsageError(e.to_string()))? + "\n",
    };
    emit(out, &text)?;
    Ok(report.exit_code())
}

fn scan_json(rows: &[ScanRow]) -> String {
    let items: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "i": r.i,
                "nprime": r.nprime,
                "reparam": format_scalar(&r.reparam),
                "R2": format_scalar(&r.r2),
                "roots_in_domain": r.roots_in_domain,
                "window_predicts_valid": r.window_predicts_valid,
                "certificate_valid": r.certificate_valid,
                "agree": r.agree(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&items).expect("plain json values") + "\n"
}

#[allow(clippy::too_many_arguments)]
fn scan(
    family: u8,
    nprime: &str,
    reparams: [(&str, &Option<String>); 3],
    omega: &str,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<i32, UsageError> {
    if !(1..=3).contains(&family) {
        return Err(UsageError(format!("--family must be 1, 2 or 3 (got {family})")));
    }
    let expected = reparams[usize::from(family - 1)].0;
    for (name, value) in reparams {
        if value.is_some() && name != expected {
            return Err(UsageError(format!("family {family} is parameterized by --{expected}, not --{name}")));
        }
    }
    let grid = match reparams[usize::from(family - 1)].1 {
        Some(text) => parse_scalars(expected, text)?,
        None => parse_scalars(expected, "-6..5")?,
    };
    let nprimes = parse_indices("nprime", nprime)?;
    let w = scalar("omega", omega)?;
    let rows = zero_free_scan(family, &nprimes, &grid, &w).map_err(|e| UsageError(e.to_string()))?;
    let text = match format {
        Format::Csv => scan_csv(&rows).map_err(|e| UsageError(e.to_string()))?,
        Format::Json => scan_json(&rows),
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let window = r.window_predicts_valid.map_or("n/a", |v| if v { "valid" } else { "invalid" });
                let _ = writeln!(
                    s,
                    "i={} nprime={} {}={} R2={} roots={} window={window} certificate={} {}",
                    r.i,
                    r.nprime,
                    expected,
                    format_scalar(&r.reparam),
                    format_scalar(&r.r2),
                    r.roots_in_domain,
                    if r.certificate_valid { "valid" } else { "invalid" },
                    if r.agree() { "agree" } else { "FLAGGED" }
                );
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(0)
}

/// Grid r_k = rmin + k·step up to rmax, with a relative slack of 1e-9 steps.
pub fn plot_grid(rmin: f64, rmax: f64, step: f64) -> Result<Vec<f64>, UsageError> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(UsageError("--step must be positive".into()));
    }
    if !(rmin > 0.0) {
        return Err(UsageError("the plot grid must stay in r > 0: the potential is singular at r = 0".into()));
    }
    if !(rmax >= rmin && rmax.is_finite()) {
        return Err(UsageError("--rmax must be finite and at least rmin".into()));
    }
    let count = ((rmax - rmin) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| rmin + k as f64 * step).collect())
}

pub fn plot_data(select: &Selector, n: &Option<String>, rmin: f64, rmax: f64, step: f64) -> Result<String, UsageError> {
    let grid = plot_grid(rmin, rmax, step)?;
    let family = select.resolve()?;
    let ns = match n {
        Some(_) => states(&family, n)?,
        None => (family.first_index()..family.first_index() + 3).collect(),
    };
    let psis = ns.iter().map(|&k| family.eigenfunction(k)).collect::<Result<Vec<_>, _>>()?;
    let v = family.potential();
    let w = family.weight();
    let omega = family.omega();
    let mut wr = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| UsageError(e.to_string());
    let mut header = vec!["r".to_string(), "V".to_string(), "w".to_string()];
    header.extend(ns.iter().map(|k| format!("psi_{k}")));
    wr.write_record(&header).map_err(err)?;
    for r in grid {
        let mut row = vec![r.to_string(), v.eval_f64(r, omega).to_string(), w.eval_f64(r, omega).to_string()];
        row.extend(psis.iter().map(|p| p.eval_f64(r, omega).to_string()));
        wr.write_record(&row).map_err(err)?;
    }
    String::from_utf8(wr.into_inner().map_err(|e| UsageError(e.to_string()))?).map_err(|e| UsageError(e.to_string()))
}

fn list(what: ListWhat, m_max: usize, ell_max: usize, omega: &str, format: Format) -> Result<String, UsageError> {
    match what {
        ListWhat::Groups => {
            let names: Vec<&str> = Group::ALL.iter().map(|g| g.name()).collect();
            Ok(match format {
                Format::Json => serde_json::to_string(&names).expect("strings") + "\n",
                _ => names.join("\n") + "\n",
            })
        }
        ListWhat::Families => {
            let w = scalar("omega", omega)?;
            if w <= xlaguerre::ratcore::int(0) {
                return Err(UsageError("--omega must be positive".into()));
            }
            let ms: Vec<usize> = (1..=m_max).collect();
            let ells: Vec<Scalar> = (0..=ell_max as i64).map(xlaguerre::ratcore::int).collect();
            catalog_csv(&ms, &ells, &w).map_err(|e| UsageError(e.to_string()))
        }
    }
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, UsageError> {
    match cli.command {
        Command::Gen { select, n, format, out } => {
            let rec = gen_record(&select, &n)?;
            emit(&out, &gen_text(&rec, format)?)?;
            Ok(0)
        }
        Command::Verify { config, only, format, out } => verify(&config, &only, format, &out),
        Command::Scan { family, nprime, d, a, b, omega, format, out } => {
            scan(family, &nprime, [("d", &d), ("a", &a), ("b", &b)], &omega, format, &out)
        }
        Command::PlotData { select, n, rmax, step, rmin, out } => {
            let text = plot_data(&select, &n, rmin.unwrap_or(step), rmax, step)?;
            emit(&out, &text)?;
            Ok(0)
        }
        Command::List { what, m_max, ell_max, omega, format, out } => {
            emit(&out, &list(what, m_max, ell_max, &omega, format)?)?;
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use xlaguerre::ratcore::{frac, int};

    #[test]
    fn index_forms() {
        assert_eq!(parse_indices("n", "3").unwrap(), vec![3]);
        assert_eq!(parse_indices("n", "1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_indices("n", "0, 2,5").unwrap(), vec![0, 2, 5]);
        assert!(parse_indices("n", "4..1").is_err());
        assert!(parse_indices("n", "-1").is_err());
    }

    #[test]
    fn scalar_forms() {
        assert_eq!(parse_scalars("d", "-2..1").unwrap(), vec![int(-2), int(-1), int(0), int(1)]);
        assert_eq!(parse_scalars("d", "1/2,-3").unwrap(), vec![frac(1, 2), int(-3)]);
        assert!(parse_scalars("d", "1/2..3").is_err());
    }

    #[test]
    fn grid_counts() {
        assert_eq!(plot_grid(0.01, 8.0, 0.01).unwrap().len(), 800);
        assert_eq!(plot_grid(0.5, 0.5, 0.1).unwrap(), vec![0.5]);
        assert!(plot_grid(0.0, 1.0, 0.1).is_err());
        assert!(plot_grid(-1.0, 1.0, 0.1).is_err());
        assert!(plot_grid(0.1, 1.0, -0.1).is_err());
        assert!(plot_grid(2.0, 1.0, 0.1).is_err());
    }
}
