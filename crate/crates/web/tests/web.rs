use serde_json::Value;
use xlaguerre_web::{curves, polynomials, scan};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn classical_curves() {
    let v = parse(&curves(0, 1, 1, 0, "1", "2", 3, 6.0, 300).unwrap());
    assert_eq!(v["r"].as_array().unwrap().len(), 300);
    assert_eq!(v["V"].as_array().unwrap().len(), 300);
    let states = v["states"].as_array().unwrap();
    assert_eq!(states.len(), 3);
    assert_eq!(states[1]["energy"], "4");
    let peak = states[0]["psi"].as_array().unwrap().iter().filter_map(Value::as_f64).fold(0.0f64, |a, x| a.max(x.abs()));
    assert!((peak - 1.0).abs() < 1e-12);
}

#[test]
fn second_generation_polynomials() {
    let v = parse(&polynomials(2, 1, 1, 1, "-2", "1", 2).unwrap());
    assert_eq!(v["key"], "gen2:i=1,nprime=1,d=-2,omega=1");
    assert_eq!(v["valid"], true);
    assert_eq!(v["R2"], "-1");
    assert_eq!(v["first_index"], 1);
    assert_eq!(v["states"].as_array().unwrap().len(), 2);
}

#[test]
fn first_generation_invalid_is_reported() {
    let v = parse(&polynomials(1, 1, 1, 0, "0", "1", 1).unwrap());
    assert_eq!(v["valid"], false);
}

#[test]
fn scan_rows() {
    let v = parse(&scan(1, 2, -3, 0, "1").unwrap());
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r["agree"] == true));
}

#[test]
fn errors() {
    assert!(polynomials(2, 1, 2, 1, "-2", "1", 1).unwrap_err().contains("m=1"));
    assert!(polynomials(3, 1, 1, 1, "0", "1", 1).is_err());
    assert!(curves(0, 1, 1, 0, "0", "-1", 1, 5.0, 10).is_err());
    assert!(curves(0, 1, 1, 0, "0", "1", 1, 0.0, 10).is_err());
    assert!(scan(1, 2, 5, 0, "1").is_err());
    assert!(scan(4, 2, 0, 1, "1").is_err());
}
