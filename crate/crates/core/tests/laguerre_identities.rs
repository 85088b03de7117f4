mod common;

use common::{laguerre_series, params, scalar_strategy};
use proptest::prelude::*;
use xlaguerre::laguerre::{
    classical_eigenfunction, classical_energy, laguerre, radial_oscillator, ArgSign,
};
use xlaguerre::ratcore::{frac, int, YPoly};
use xlaguerre::susy::{oscillator_offset, schrodinger_residual};

#[test]
fn recurrence_matches_series_oracle() {
    for n in 0..=10 {
        for (p, q) in [(1, 2), (-5, 2), (3, 1), (-7, 3), (0, 1), (-1, 1)] {
            let alpha = frac(p, q);
            for arg in [ArgSign::Plus, ArgSign::Minus] {
                assert_eq!(laguerre(n, &alpha, arg), laguerre_series(n, &alpha, arg));
            }
        }
    }
}

#[test]
fn eigenfunction_numerators() {
    let p = params((2, 1), (1, 1));
    assert_eq!(
        classical_eigenfunction(2, &p).num(),
        &laguerre_series(2, &frac(3, 2), ArgSign::Plus)
    );
}

#[test]
fn classical_spectrum_residuals() {
    for (w, l) in [((2, 1), (0, 1)), ((1, 1), (2, 1)), ((1, 2), (3, 1)), ((2, 1), (1, 2))] {
        let p = params(w, l);
        let v = radial_oscillator(&p).shifted(&oscillator_offset(1, &p).unwrap());
        for n in 0..=8 {
            let psi = classical_eigenfunction(n, &p);
            let e = classical_energy(n, &p);
            assert!(schrodinger_residual(&v, &psi, &e, p.omega()).unwrap().is_zero());
        }
        let psi = classical_eigenfunction(1, &p);
        let wrong = schrodinger_residual(&v, &psi, p.omega(), p.omega()).unwrap();
        assert!(!wrong.is_zero());
    }
}

proptest! {
    #[test]
    fn laguerre_ode_and_derivative(n in 0usize..=10, alpha in scalar_strategy()) {
        let l = laguerre(n, &alpha, ArgSign::Plus);
        let y = YPoly::y();
        let lin = YPoly::new(vec![&alpha + int(1), int(-1)]);
        let ode = &(&(&y * &l.derivative().derivative()) + &(&lin * &l.derivative()))
            + &l.scale(&int(n as i64));
        prop_assert!(ode.is_zero());
        if n >= 1 {
            prop_assert_eq!(l.derivative(), -&laguerre(n - 1, &(&alpha + int(1)), ArgSign::Plus));
        }
    }
}
