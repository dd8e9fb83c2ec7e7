mod common;

use common::*;
use liftscope::algebra::{implicitize, poly_gcd, poly_xgcd, Rational};
use liftscope::{BiPoly, UniPoly};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in any_uni(4), b in any_uni(4), c in any_uni(3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &UniPoly::one(), a.clone());
    }

    #[test]
    fn division_with_remainder(a in any_uni(6), b in uni(1, 3)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn compose_and_shift_agree_with_evaluation(a in uni(1, 4), b in uni(1, 3), x in small_rat(), t in small_rat()) {
        prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        prop_assert_eq!(a.taylor_shift(&t).eval(&x), a.eval(&(&x + &t)));
        let d = a.derivative();
        // linear Taylor coefficient at x is the derivative
        prop_assert_eq!(a.taylor_shift(&x).coeff(1), d.eval(&x));
    }

    #[test]
    fn squarefree_part_has_the_same_roots(a in uni(1, 3), b in uni(1, 2)) {
        let p = &a.pow(2) * &b;
        let s = p.squarefree_part();
        prop_assert!(p.exact_div(&s).is_some());
        prop_assert!(s.pow(p.deg()).exact_div(&p).is_some());
        prop_assert!(poly_gcd(&s, &s.derivative()).is_constant());
    }

    #[test]
    fn gcd_and_bezout(a in uni(1, 4), b in uni(1, 4), c in uni(1, 2)) {
        let (pa, pb) = (&a * &c, &b * &c);
        let g = poly_gcd(&pa, &pb);
        prop_assert!(pa.exact_div(&g).is_some() && pb.exact_div(&g).is_some());
        prop_assert!(g.exact_div(&c).is_some());
        let (g2, s, t) = poly_xgcd(&pa, &pb);
        prop_assert_eq!(&(&s * &pa) + &(&t * &pb), g2.clone());
        prop_assert_eq!(g2.monic(), g.monic());
    }

    #[test]
    fn univariate_resultant_matches_sylvester(p in uni(1, 4), q in uni(1, 4)) {
        let bp = BiPoly::from_y(&p);
        let bq = BiPoly::from_y(&q);
        let res = bp.resultant_y(&bq);
        prop_assert!(res.is_constant());
        prop_assert_eq!(res.coeff(0), sylvester_resultant(&p, &q));
    }

    #[test]
    fn resultant_commutes_with_specialization(p in monic_bi(3, 2), q in monic_bi(3, 2), x in small_rat()) {
        let res = p.resultant_y(&q);
        prop_assert_eq!(res.eval(&x), sylvester_resultant(&p.eval_x(&x), &q.eval_x(&x)));
    }

    #[test]
    fn implicitization_vanishes_on_the_parametrization(a in uni(1, 3), b in uni(1, 3)) {
        let f = implicitize(&a, &b);
        prop_assert!(!f.is_zero());
        prop_assert!(f.eval_param(&a, &b).is_zero());
    }

    #[test]
    fn bivariate_ring_and_evaluation(p in monic_bi(2, 2), q in monic_bi(2, 2), x in small_rat(), y in small_rat()) {
        let prod = &p * &q;
        prop_assert_eq!(prod.eval(&x, &y), p.eval(&x, &y) * q.eval(&x, &y));
        prop_assert_eq!(prod.exact_div(&q), Some(p.clone()));
        prop_assert_eq!(p.swap_xy().swap_xy(), p.clone());
        let shifted = p.shift_x(&x);
        prop_assert_eq!(shifted.eval(&Rational::zero(), &y), p.eval(&x, &y));
    }
}
