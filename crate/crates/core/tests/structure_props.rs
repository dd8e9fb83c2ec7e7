mod common;

use common::*;
use liftscope::algebra::{int, Rational};
use liftscope::decompose::{decompositions, is_poly_in};
use liftscope::factor::factor_bi;
use liftscope::fibers::{collision_set, fiber_count, fiber_formula_check_with};
use liftscope::sources::{construct_quadratic_source, detect_quadratic_sources, source_even_center};
use liftscope::{BiPoly, UniPoly};
use proptest::prelude::*;

fn pair() -> impl Strategy<Value = (UniPoly, UniPoly)> {
    prop_oneof![
        (uni(1, 4), uni(1, 4)),
        (uni(1, 3), uni(1, 2)).prop_map(|(g, h)| (g.compose(&h), g)),
        (uni(1, 2), uni(1, 2), uni(1, 2)).prop_map(|(g, a, b)| (g.compose(&a), g.compose(&b))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decompositions_contain_the_planted_inner(g in uni(1, 4), h in uni(1, 3)) {
        let f = g.compose(&h);
        let set = decompositions(&f, &g);
        prop_assert!(set.iter().any(|k| *k == h));
        for k in set.iter() {
            prop_assert_eq!(g.compose(k), f.clone());
        }
    }

    #[test]
    fn is_poly_in_round_trip(a in uni(1, 3), c in uni(0, 3)) {
        let b = c.compose(&a);
        let found = is_poly_in(&b, &a);
        prop_assert!(found.is_some());
        prop_assert_eq!(found.unwrap().compose(&a), b);
    }

    #[test]
    fn fiber_identity_off_the_collision_set(
        (f, g) in pair(),
        xs in prop::collection::vec(small_rat(), 6),
    ) {
        let fact = factor_bi(&BiPoly::separated(&f, &g).squarefree_part()).unwrap();
        let cs = collision_set(&fact, false);
        for x in xs.iter().filter(|x| !cs.contains(x)) {
            let check = fiber_formula_check_with(&f, &g, &fact, &cs, x).unwrap();
            prop_assert_eq!(check.lhs, fiber_count(&f, &g, x));
            prop_assert!(check.holds());
        }
    }

    #[test]
    fn quadratic_source_round_trip(
        gq in uni(1, 2),
        c in small_rat(),
        alpha in nonzero_rat(),
        beta in small_rat(),
        e in uni(0, 1),
    ) {
        let (f, g, src) = construct_quadratic_source(&gq, &c, &alpha, &beta, &e).unwrap();
        let target = src.component();
        let found = detect_quadratic_sources(&f, &g);
        prop_assert!(found.iter().any(|s| s.component() == target));
        for s in &found {
            prop_assert_eq!(f.compose(&s.a()), g.compose(&s.b()));
            prop_assert!(is_poly_in(&s.b(), &s.a()).is_none());
        }
    }

    #[test]
    fn odd_degree_g_has_no_sources(f in uni(1, 4), g in uni(1, 2)) {
        let g = if g.deg() % 2 == 0 { &(&g * &UniPoly::x()) + &UniPoly::constant(int(1)) } else { g };
        prop_assume!(g.deg() % 2 == 1);
        prop_assert!(source_even_center(&g).is_none());
        prop_assert!(detect_quadratic_sources(&f, &g).is_empty());
    }

    #[test]
    fn source_even_center_recovers_translation(gq in uni(1, 3), c in small_rat()) {
        let shift = UniPoly::from_coeffs(vec![-c.clone(), Rational::from_integer(1.into())]);
        let g = gq.compose(&shift.pow(2));
        let form = source_even_center(&g).unwrap();
        prop_assert_eq!(form.c, c);
        prop_assert_eq!(form.g_quotient, gq);
    }
}
