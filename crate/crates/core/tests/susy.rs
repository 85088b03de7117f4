mod common;

use common::{nonzero_poly_strategy, params};
use proptest::prelude::*;
use xlaguerre::laguerre::{classical_eigenfunction, classical_energy, OscParams};
use xlaguerre::published::printed_partners;
use xlaguerre::ratcore::{frac, int, Scalar, YPoly, YRatFun};
use xlaguerre::susy::{
    apply_intertwiner, catalog_superpotential, is_normalizable, schrodinger_residual,
    shape_invariance_shift, Potential, Superpotential, WaveFunction,
};

/// c·R(y)·r^{a−a0} rewritten as a function of y with r² = 2y/ω.
fn ratio_at(psi: &WaveFunction, a0: &Scalar, omega: &Scalar) -> YRatFun {
    if psi.is_zero() {
        return YRatFun::zero();
    }
    let k = (psi.a() - a0) / int(2);
    assert!(k.is_integer());
    let k = k.to_integer().to_string().parse::<i64>().unwrap();
    let r2 = YRatFun::from_poly(YPoly::monomial(int(2) / omega, 1));
    let mut out = psi.ratio().scale(psi.constant());
    for _ in 0..k.abs() {
        out = if k > 0 { &out * &r2 } else { &out / &r2 };
    }
    out
}

fn grid() -> Vec<OscParams> {
    let mut out = Vec::new();
    for w in [(1, 1), (2, 1), (1, 2)] {
        for l in 0..=5 {
            out.push(params(w, (l, 1)));
        }
    }
    out
}

#[test]
fn catalog_rows() {
    let p = params((1, 1), (2, 1));
    let w1 = catalog_superpotential(1, &p).unwrap();
    assert_eq!((w1.lin_r(), w1.inv_r()), (&frac(1, 2), &int(-3)));
    assert!(w1.logs().is_empty());
    let w2 = catalog_superpotential(2, &p).unwrap();
    assert_eq!((w2.lin_r(), w2.inv_r()), (&frac(1, 2), &int(2)));
    let w4 = catalog_superpotential(4, &params((1, 1), (3, 1))).unwrap();
    assert_eq!(w4, w1.negated());
    assert!(catalog_superpotential(5, &p).is_err());
    assert!(catalog_superpotential(0, &p).is_err());
}

#[test]
fn catalog_partner_potentials_match_print() {
    for p in grid() {
        for i in 1..=4 {
            let (vm, vp) = catalog_superpotential(i, &p).unwrap().partner_potentials(p.omega());
            let (tm, tp) = printed_partners(i, &p).unwrap();
            assert_eq!(vm, tm, "V- row {i} at {p:?}");
            assert_eq!(vp, tp, "V+ row {i} at {p:?}");
            let w = catalog_superpotential(i, &p).unwrap();
            let diff = &vp.value - &vm.value;
            assert_eq!(diff, w.derivative(p.omega()).scale(&int(2)));
        }
    }
}

#[test]
fn explicit_partner_examples() {
    let p = params((2, 1), (2, 1));
    let (vm, _) = catalog_superpotential(1, &p).unwrap().partner_potentials(p.omega());
    let expected = &YRatFun::from_poly(YPoly::from_ints(&[-7, 1])) + &YRatFun::inv_y(int(6));
    assert_eq!(vm.value, expected);
    let p = params((2, 1), (1, 1));
    let (_, vp) = catalog_superpotential(2, &p).unwrap().partner_potentials(p.omega());
    assert_eq!(vp.value, YRatFun::from_poly(YPoly::from_ints(&[3, 1])));
}

#[test]
fn shape_invariance_shifts() {
    for p in grid() {
        let w = p.omega().clone();
        assert_eq!(shape_invariance_shift(1, &p).unwrap(), &w * int(2));
        assert_eq!(shape_invariance_shift(2, &p).unwrap(), &w * int(2));
        assert_eq!(shape_invariance_shift(3, &p).unwrap(), &w * int(-2));
        assert_eq!(shape_invariance_shift(4, &p).unwrap(), &w * int(-2));
    }
}

#[test]
fn exact_susy_ground_state_and_ladder() {
    let p = params((2, 1), (1, 1));
    let w1 = catalog_superpotential(1, &p).unwrap();
    let (vm, vp) = w1.partner_potentials(p.omega());
    let g = w1.ground_state(false).unwrap();
    assert_eq!(g, classical_eigenfunction(0, &p));
    assert!(apply_intertwiner(&w1, false, &g, p.omega()).is_zero());
    assert!(schrodinger_residual(&vm, &g, &int(0), p.omega()).unwrap().is_zero());

    for n in 1..=5 {
        let psi = classical_eigenfunction(n, &p);
        let e = classical_energy(n, &p);
        let a_psi = apply_intertwiner(&w1, false, &psi, p.omega());
        assert!(schrodinger_residual(&vp, &a_psi, &e, p.omega()).unwrap().is_zero());
        let back = apply_intertwiner(&w1, true, &a_psi, p.omega());
        assert_eq!(back.proportionality(&psi), Some(e.clone()));
    }

    let up = p.with_ell(p.ell() + int(1));
    let plus_ground = classical_eigenfunction(0, &up);
    let raised = apply_intertwiner(&w1, true, &plus_ground, p.omega());
    assert!(raised.proportionality(&classical_eigenfunction(1, &p)).is_some());
}

#[test]
fn normalizability_classification() {
    let p = params((1, 1), (2, 1));
    let verdict = |i: u8, partner: bool| {
        let w = catalog_superpotential(i, &p).unwrap();
        let g = w.ground_state(partner).unwrap();
        is_normalizable(g.a(), g.s())
    };
    assert!(verdict(1, false) && !verdict(1, true));
    assert!(!verdict(2, false) && !verdict(2, true));
    assert!(!verdict(3, false) && !verdict(3, true));
    assert!(!verdict(4, false) && verdict(4, true));
}

#[test]
fn residual_is_linear_in_energy() {
    let p = params((1, 1), (0, 1));
    let psi = classical_eigenfunction(2, &p);
    let v = Potential::new(YRatFun::y());
    let r0 = schrodinger_residual(&v, &psi, &int(0), p.omega()).unwrap();
    let r3 = schrodinger_residual(&v, &psi, &int(3), p.omega()).unwrap();
    assert_eq!(&r0 - &r3, YRatFun::constant(int(3)));
}

#[test]
fn wave_function_json_round_trip() {
    let psi = WaveFunction::new(
        frac(2, 3),
        frac(5, 2),
        -1,
        YPoly::from_ints(&[1, -2, 1]),
        YPoly::from_ints(&[3, 2]),
    )
    .unwrap();
    let text = serde_json::to_string(&psi).unwrap();
    let back: WaveFunction = serde_json::from_str(&text).unwrap();
    assert_eq!(back, psi);
}

proptest! {
    #[test]
    fn intertwiner_sum_is_twice_w(
        num in nonzero_poly_strategy(4),
        den in nonzero_poly_strategy(2),
        log in nonzero_poly_strategy(3),
        inv in -4i64..=4,
        a in -3i64..=5,
        s in prop::bool::ANY,
    ) {
        let omega = frac(3, 2);
        let w = Superpotential::new(int(inv), frac(1, 2)).with_log(int(1), &log);
        let s = if s { 1 } else { -1 };
        let psi = WaveFunction::new(int(1), int(a), s, num, den).unwrap();
        let base = int(a - 1);
        let plus = apply_intertwiner(&w, false, &psi, &omega);
        let minus = apply_intertwiner(&w, true, &psi, &omega);
        let sum = &ratio_at(&plus, &base, &omega) + &ratio_at(&minus, &base, &omega);
        let two_y = YPoly::monomial(int(2), 1);
        let expected = &psi.ratio().scale(w.inv_r()) + &(&w.k_part() * &psi.ratio()).mul_poly(&two_y);
        prop_assert_eq!(sum, expected.scale(&int(2)));
    }

    #[test]
    fn partner_difference_is_twice_derivative(inv in -5i64..=5, lin in -2i64..=2, log in nonzero_poly_strategy(3)) {
        let omega = int(2);
        let w = Superpotential::new(int(inv), frac(lin, 2)).with_log(int(-1), &log);
        let (vm, vp) = w.partner_potentials(&omega);
        prop_assert_eq!(&vp.value - &vm.value, w.derivative(&omega).scale(&int(2)));
    }
}
