mod common;

use common::{laguerre_series, params};
use proptest::prelude::*;
use xlaguerre::deform1::{
    l1_ode_residual, solve_p_equation, xm_eop, xm_eop_with_alpha, EopKind, Gen1Family,
};
use xlaguerre::laguerre::{classical_eigenfunction, classical_weight, laguerre, ArgSign, OscParams};
use xlaguerre::published::{l1_ode_printed_residual, printed_type_two, printed_conventional_row};
use xlaguerre::ratcore::{frac, int, positive_root_count, Scalar, YPoly, YRatFun};
use xlaguerre::susy::{catalog_superpotential, schrodinger_residual, Superpotential};
use xlaguerre::Error;

/// ∂²_r ln P(y) in y-form: ω P′/P + 2ωy (P′/P)′.
fn second_log_derivative(p: &YPoly, omega: &Scalar) -> YRatFun {
    let ld = YRatFun::log_derivative(p).unwrap();
    &ld.scale(omega) + &ld.derivative().mul_poly(&YPoly::monomial(int(2) * omega, 1))
}

#[test]
fn p_equation_examples() {
    let p = params((2, 1), (1, 1));
    let w1 = catalog_superpotential(1, &p).unwrap();
    assert_eq!(solve_p_equation(&w1, false, 0, &p).unwrap(), (YPoly::one(), int(0)));

    let w2 = catalog_superpotential(2, &p).unwrap();
    let (q, r) = solve_p_equation(&w2, false, 1, &p).unwrap();
    assert_eq!(q, YPoly::new(vec![frac(3, 2), int(1)]));
    assert_eq!(r, int(4));

    let w3 = catalog_superpotential(3, &p).unwrap();
    let (q, r) = solve_p_equation(&w3, false, 1, &p).unwrap();
    assert_eq!(q.scale(&int(-1)), laguerre_series(1, &frac(-5, 2), ArgSign::Plus));
    assert_eq!(r, int(-4));
}

#[test]
fn p_equation_reproduces_seeds_and_shifts() {
    for l in 0..=5 {
        for w in [(1, 1), (2, 1), (1, 2)] {
            let p = params(w, (l, 1));
            for i in 1..=3u8 {
                for m in 0..=4 {
                    let f = Gen1Family::new_unchecked(i, m, &p).unwrap();
                    let (q, r) = solve_p_equation(&f.base_superpotential(), false, m, &p).unwrap();
                    assert_eq!(q, f.seed_poly().monic(), "i={i} m={m} l={l}");
                    assert_eq!(&r, f.r1());
                }
            }
            // The sign-flipped equation recovers the classical tower with R = −E.
            let w1 = catalog_superpotential(1, &p).unwrap();
            for m in 0..=4 {
                let (q, r) = solve_p_equation(&w1, true, m, &p).unwrap();
                assert_eq!(q, laguerre(m, &(p.ell() + frac(1, 2)), ArgSign::Plus).monic());
                assert_eq!(r, -(int(2 * m as i64) * p.omega()));
            }
        }
    }
}

#[test]
fn deformed_superpotentials() {
    let p = params((2, 1), (1, 1));
    let f = Gen1Family::new_unchecked(2, 0, &p).unwrap();
    assert_eq!(f.deformed_superpotential(), catalog_superpotential(2, &p).unwrap());

    let f = Gen1Family::new(1, 2, &p).unwrap();
    let w = f.deformed_superpotential();
    assert_eq!(w.logs().len(), 1);
    assert_eq!(w.logs()[0].weight, int(1));
    assert_eq!(w.logs()[0].poly, YPoly::new(vec![frac(3, 8), frac(-1, 2), frac(1, 2)]));
    assert_eq!(w.logs()[0].poly, laguerre_series(2, &frac(-5, 2), ArgSign::Minus));

    let f = Gen1Family::new_unchecked(3, 1, &p).unwrap();
    assert_eq!(f.deformed_superpotential().logs()[0].poly, laguerre(1, &frac(-5, 2), ArgSign::Plus));
}

#[test]
fn gen1_potentials() {
    for l in 0..=4 {
        let p = params((2, 1), (l, 1));
        for i in 1..=3u8 {
            let base = catalog_superpotential(i, &p).unwrap();
            let (vm, vp) = base.partner_potentials(p.omega());
            let f0 = Gen1Family::new_unchecked(i, 0, &p).unwrap();
            assert_eq!(f0.potential(), vm);
            for m in 1..=3 {
                let f = Gen1Family::new_unchecked(i, m, &p).unwrap();
                assert_eq!(f.partner_potential().constant_offset(&vp), Some(f.r1().clone()));
                let expected = &(&vm.value - &second_log_derivative(&f.seed_poly(), p.omega()).scale(&int(2)))
                    + &YRatFun::constant(f.r1().clone());
                assert_eq!(f.potential().value, expected);
            }
        }
    }
    let p = params((2, 1), (1, 1));
    let f = Gen1Family::new(1, 2, &p).unwrap();
    let (_, vp) = catalog_superpotential(1, &p).unwrap().partner_potentials(p.omega());
    assert_eq!(f.partner_potential().constant_offset(&vp), Some(int(8)));
    let f = Gen1Family::new_unchecked(3, 1, &p).unwrap();
    let (_, vp) = catalog_superpotential(3, &p).unwrap().partner_potentials(p.omega());
    assert_eq!(f.partner_potential().constant_offset(&vp), Some(int(-4)));
}

#[test]
fn eop_examples_and_reductions() {
    let p = params((2, 1), (1, 1));
    let a1 = frac(-5, 2);
    let iii = xm_eop(EopKind::III, 1, 1, &p).poly;
    let oracle = &(&(&YPoly::y() * &laguerre_series(1, &(int(1) - &a1), ArgSign::Plus))
        * &laguerre_series(1, &a1, ArgSign::Minus))
        + &(&laguerre_series(1, &(&a1 - int(1)), ArgSign::Minus) * &laguerre_series(1, &-&a1, ArgSign::Plus))
            .scale(&(int(1) + &a1));
    assert_eq!(iii, oracle);

    for l in 0..=4 {
        let p = params((1, 1), (l, 1));
        for m in 0..=3 {
            let a2 = p.ell() - frac(1, 2);
            let a = -(p.ell() + frac(3, 2));
            let i0 = xm_eop(EopKind::I, m, 0, &p).poly;
            assert_eq!(i0, laguerre(m, &(&a2 + int(1)), ArgSign::Minus));
            let ii0 = xm_eop(EopKind::II, m, 0, &p).poly;
            let classical = laguerre(m, &(&a - int(1)), ArgSign::Plus);
            assert_eq!(ii0, classical.scale(&(int(m as i64) + &a)));
            let iii0 = xm_eop(EopKind::III, m, 0, &p).poly;
            let classical3 = laguerre(m + 1, &(&a - int(1)), ArgSign::Minus);
            let k = iii0.leading() / classical3.leading();
            assert_eq!(iii0, classical3.scale(&k));
            assert_eq!(positive_root_count(&iii0).unwrap(), positive_root_count(&classical3).unwrap());
            for n in 0..=4 {
                assert_eq!(xm_eop(EopKind::I, m, n, &p).poly.degree(), Some(m + n));
                assert_eq!(xm_eop(EopKind::II, m, n, &p).poly.degree(), Some(m + n));
                assert_eq!(xm_eop(EopKind::III, m, n, &p).poly.degree(), Some(m + n + 1));
            }
        }
    }
}

#[test]
fn gen1_residual_suite_small() {
    for (w, l) in [((2, 1), (1, 1)), ((1, 1), (3, 1)), ((1, 2), (2, 1))] {
        let p = params(w, l);
        for i in 1..=3u8 {
            for m in 1..=2 {
                let Ok(f) = Gen1Family::new(i, m, &p) else { continue };
                let v = f.reference_potential();
                for n in f.first_index()..=3 {
                    let psi = f.eigenfunction(n).unwrap();
                    let res = schrodinger_residual(&v, &psi, &f.energy(n), p.omega()).unwrap();
                    assert!(res.is_zero(), "{} n={n}", f.key());
                }
            }
        }
    }
}

#[test]
fn energies_and_indices() {
    let p = params((2, 1), (0, 1));
    assert_eq!(Gen1Family::new_unchecked(1, 1, &p).unwrap().energy(0), int(4));
    assert_eq!(Gen1Family::new_unchecked(3, 1, &p).unwrap().energy(1), int(0));
    let p = params((1, 1), (0, 1));
    assert_eq!(Gen1Family::new_unchecked(2, 3, &p).unwrap().energy(2), int(10));
    let f = Gen1Family::new_unchecked(1, 1, &p).unwrap();
    assert_eq!(f.eigenfunction(0), Err(Error::IndexBelowFirst { n: 0, first: 1 }));
}

#[test]
fn weights_and_validity() {
    let p = params((2, 1), (1, 1));
    assert_eq!(Gen1Family::new(2, 0, &p).unwrap().weight(), classical_weight(&p));
    let f = Gen1Family::new(2, 1, &p).unwrap();
    assert_eq!(f.weight().den(), &YPoly::new(vec![frac(3, 2), int(1)]));
    assert_eq!(f.seed_roots_in_domain(), 0);
    let w1 = catalog_superpotential(1, &p).unwrap();
    assert_eq!(w1.ground_state(false).unwrap().num(), f.weight().num());
    let bad = Gen1Family::new_unchecked(1, 1, &p).unwrap();
    assert_eq!(bad.seed_poly(), YPoly::new(vec![frac(-3, 2), int(1)]));
    assert_eq!(bad.seed_roots_in_domain(), 1);
    assert!(matches!(Gen1Family::new(1, 1, &p), Err(Error::InvalidFamily(_, 1))));
}

#[test]
fn zero_mode_of_family_one() {
    let p = params((2, 1), (1, 1));
    let f = Gen1Family::new(1, 2, &p).unwrap();
    let z = f.zero_mode().unwrap();
    assert!(schrodinger_residual(&f.potential(), &z, &int(0), p.omega()).unwrap().is_zero());
    assert_eq!(Superpotential::from_ground_state(&z), f.deformed_superpotential());
    assert!(Gen1Family::new(2, 1, &p).unwrap().zero_mode().is_none());
}

#[test]
fn partner_eigenfunctions() {
    for l in 0..=3 {
        let p = params((2, 1), (l, 1));
        for i in 1..=3u8 {
            for m in 1..=2 {
                let f = Gen1Family::new_unchecked(i, m, &p).unwrap();
                let v = f.partner_potential();
                for n in 0..=3 {
                    let psi = f.partner_eigenfunction(n);
                    let e = f.partner_energy(n).unwrap();
                    assert!(schrodinger_residual(&v, &psi, &e, p.omega()).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn conventional_superpotentials() {
    for l in 0..=5 {
        let p = params((1, 1), (l, 1));
        for i in 1..=3u8 {
            for m in 0..=3 {
                let Ok(f) = Gen1Family::new(i, m, &p) else { continue };
                let wbar = f.conventional_superpotential().unwrap();
                let (vm, _) = wbar.partner_potentials(p.omega());
                let target = f.reference_potential().shifted(&-f.conventional_ground_energy());
                assert_eq!(vm, target, "{}", f.key());
                let printed = printed_conventional_row(i, m, &p).unwrap();
                if i < 3 {
                    assert_eq!(wbar.parts(), printed, "{}", f.key());
                }
            }
        }
    }
    let p = params((1, 1), (2, 1));
    let f = Gen1Family::new(3, 1, &p).unwrap();
    assert_ne!(f.conventional_superpotential().unwrap().parts(), printed_conventional_row(3, 1, &p).unwrap());
    let f0 = Gen1Family::new(2, 0, &p).unwrap();
    assert_eq!(f0.conventional_superpotential().unwrap(), catalog_superpotential(1, &p).unwrap());
}

#[test]
fn type_two_printed_form_does_not_solve() {
    let p = params((1, 1), (1, 1));
    let f = Gen1Family::new(3, 1, &p).unwrap();
    let printed = printed_type_two(1, 2, &p);
    let psi = xlaguerre::susy::WaveFunction::new(int(1), int(2), -1, printed, f.seed_poly()).unwrap();
    let res = schrodinger_residual(&f.reference_potential(), &psi, &f.energy(2), p.omega()).unwrap();
    assert!(res.as_constant().is_none());
}

#[test]
fn type_one_ode() {
    for (num, den) in [(1, 3), (2, 1), (-7, 2), (1, 2), (5, 2)] {
        let delta = frac(num, den);
        for n in 0..=5 {
            let l = xm_eop_with_alpha(EopKind::I, 1, n, &delta, ArgSign::Plus).poly;
            assert!(l1_ode_residual(&delta, n, &l).is_zero());
            if n >= 1 {
                let g = &delta + frac(1, 2);
                assert!(!l1_ode_printed_residual(&g, n, &l).is_zero());
            }
        }
    }
}

#[test]
fn classical_family_matches_m_zero() {
    let p = params((2, 1), (1, 1));
    let f = Gen1Family::new(2, 0, &p).unwrap();
    for n in 0..=3 {
        let psi = f.eigenfunction(n).unwrap();
        assert!(psi.proportionality(&classical_eigenfunction(n, &p)).is_some());
    }
}

proptest! {
    #[test]
    fn family_two_seeds_are_zero_free(l in 0i64..=12, m in 0usize..=7) {
        let p = OscParams::new(int(1), int(l)).unwrap();
        prop_assert!(Gen1Family::new(2, m, &p).is_ok());
    }
}
