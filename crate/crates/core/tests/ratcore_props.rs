mod common;

use common::{nonzero_poly_strategy, poly_strategy, scalar_strategy};
use proptest::prelude::*;
use xlaguerre::ratcore::{positive_root_count, YPoly, YRatFun};

proptest! {
    #[test]
    fn derivative_product_rule(p in poly_strategy(6), q in poly_strategy(6)) {
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_of_product(p in nonzero_poly_strategy(6), q in nonzero_poly_strategy(6)) {
        prop_assert_eq!((&p * &q).degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
    }

    #[test]
    fn reduce_is_idempotent_and_scale_free(
        a in poly_strategy(5),
        b in nonzero_poly_strategy(5),
        k in nonzero_poly_strategy(3),
        c in scalar_strategy().prop_filter("nonzero", |c| *c != xlaguerre::ratcore::int(0)),
    ) {
        let r = YRatFun::reduce(a.clone(), b.clone()).unwrap();
        let again = YRatFun::reduce(r.num().clone(), r.den().clone()).unwrap();
        prop_assert_eq!(&again, &r);
        let by_poly = YRatFun::reduce(&a * &k, &b * &k).unwrap();
        prop_assert_eq!(&by_poly, &r);
        let by_const = YRatFun::reduce(a.scale(&c), b.scale(&c)).unwrap();
        prop_assert_eq!(&by_const, &r);
    }

    #[test]
    fn root_counts_add_over_coprime_factors(p in nonzero_poly_strategy(5), q in nonzero_poly_strategy(5)) {
        prop_assume!(YPoly::gcd(&p, &q).degree() == Some(0));
        let joint = positive_root_count(&(&p * &q)).unwrap();
        prop_assert_eq!(joint, positive_root_count(&p).unwrap() + positive_root_count(&q).unwrap());
    }

    #[test]
    fn ratfun_derivative_is_a_derivation(
        a in poly_strategy(4), b in nonzero_poly_strategy(3),
        c in poly_strategy(4), d in nonzero_poly_strategy(3),
    ) {
        let f = YRatFun::reduce(a, b).unwrap();
        let g = YRatFun::reduce(c, d).unwrap();
        let lhs = (&f * &g).derivative();
        let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn laguerre_derivative_example() {
    let l2 = YPoly::new(vec![
        xlaguerre::ratcore::int(1),
        xlaguerre::ratcore::int(-2),
        xlaguerre::ratcore::frac(1, 2),
    ]);
    assert_eq!(l2.derivative(), YPoly::from_ints(&[-2, 1]));
    assert!(YPoly::one().derivative().is_zero());
}
