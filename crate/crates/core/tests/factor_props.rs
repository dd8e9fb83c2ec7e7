mod common;

use common::*;
use liftscope::algebra::{int, poly_gcd, rat, Rational};
use liftscope::factor::{absolute_factor_count, factor_bi, factor_uni, rational_roots};
use liftscope::{BiPoly, UniPoly};
use proptest::prelude::*;

/// Irreducible over ℚ with a known number of absolutely irreducible
/// factors, and constant leading coefficient in `Y`.
#[derive(Clone, Debug)]
struct Known {
    poly: BiPoly,
    absolute: usize,
}

/// `a(Y)·X + b(Y)` with `gcd(a, b) = 1` and `deg b > deg a`: degree one in
/// `X` and primitive, hence absolutely irreducible.
fn x_linear() -> impl Strategy<Value = Option<Known>> {
    (uni(0, 1), uni(1, 3)).prop_map(|(a, b)| {
        if b.deg() <= a.deg() || !poly_gcd(&a, &b).is_constant() {
            return None;
        }
        let poly = &BiPoly::from_y(&a).mul_x(&UniPoly::x()) + &BiPoly::from_y(&b);
        Some(Known { poly, absolute: 1 })
    })
}

/// `Y - h(X)`.
fn y_linear() -> impl Strategy<Value = Option<Known>> {
    uni(0, 3).prop_map(|h| {
        Some(Known {
            poly: BiPoly::graph(&h),
            absolute: 1,
        })
    })
}

/// `(Y - aX - b)² - d(cX + e)²` with `d` not a square and `c ≠ 0`: the
/// product of two conjugate lines over `ℚ(√d)`.
fn conjugate_lines() -> impl Strategy<Value = Option<Known>> {
    (
        small_int(),
        small_int(),
        nonzero_rat(),
        small_int(),
        prop::sample::select(vec![2i64, 3, 5, 6, 7, -1, -2, -3]),
    )
        .prop_map(|(a, b, c, e, d)| {
            let line = BiPoly::from_terms(&[(0, 1, int(1)), (1, 0, -a), (0, 0, -b)]);
            let other = BiPoly::from_x(UniPoly::from_coeffs(vec![e, c]));
            let poly = &(&line * &line) - &(&other * &other).scale(&int(d));
            Some(Known { poly, absolute: 2 })
        })
}

fn known() -> impl Strategy<Value = Option<Known>> {
    prop_oneof![x_linear(), y_linear(), conjugate_lines()]
}

fn distinct(factors: &[Known]) -> bool {
    let normals: Vec<BiPoly> = factors.iter().map(|k| k.poly.normalized()).collect();
    (0..normals.len()).all(|i| (i + 1..normals.len()).all(|j| normals[i] != normals[j]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn univariate_factorization_round_trip(a in uni(1, 3), b in uni(1, 3), c in uni(0, 2)) {
        let p = &(&a * &b) * &c.pow(2);
        let fact = factor_uni(&p);
        prop_assert_eq!(fact.expand(), p.clone());
        for (f, _) in &fact.factors {
            prop_assert!(f.deg() == 1 || rational_roots(f).is_empty());
        }
        for q in [&a, &b] {
            let covered = fact.factors.iter().any(|(f, _)| q.exact_div(f).is_some());
            prop_assert!(covered);
        }
    }

    #[test]
    fn rational_roots_find_planted_roots(
        roots in prop::collection::vec((-12i64..=12, 1i64..=6), 1..4),
        rest in uni(0, 3),
    ) {
        let mut p = rest.clone();
        for &(a, b) in &roots {
            p = &p * &UniPoly::from_ints(&[-a, b]);
        }
        let found = rational_roots(&p);
        for &(a, b) in &roots {
            let r = rat(a, b);
            let planted = roots.iter().filter(|&&(x, y)| rat(x, y) == r).count();
            let hit = found.iter().find(|(x, _)| *x == r);
            prop_assert!(hit.is_some_and(|(_, m)| *m >= planted));
        }
        for (r, _) in &found {
            prop_assert_eq!(p.eval(r), Rational::from_integer(0.into()));
        }
    }

    #[test]
    fn bivariate_products_are_recovered(
        parts in prop::collection::vec(known(), 1..4),
        unit in nonzero_rat(),
    ) {
        let parts: Vec<Known> = parts.into_iter().flatten().collect();
        prop_assume!(!parts.is_empty() && distinct(&parts));
        let mut p = BiPoly::from_x(UniPoly::constant(unit));
        for k in &parts {
            p = &p * &k.poly;
        }
        let fact = factor_bi(&p).unwrap();
        prop_assert_eq!(fact.expand(), p.clone());
        let found: Vec<BiPoly> = fact.all_factors().iter().map(BiPoly::normalized).collect();
        prop_assert_eq!(found.len(), parts.len());
        for k in &parts {
            prop_assert!(found.contains(&k.poly.normalized()), "{} missing", k.poly);
        }
        for k in parts.iter().filter(|k| k.poly.deg_y().unwrap() >= 2) {
            prop_assert_eq!(absolute_factor_count(&k.poly), k.absolute);
        }
    }

    #[test]
    fn absolute_count_divides_y_degree(k in known()) {
        let Some(k) = k else { return Ok(()) };
        let n = absolute_factor_count(&k.poly);
        prop_assert_eq!(n, k.absolute);
        prop_assert_eq!(k.poly.deg_y().unwrap() % n, 0);
    }
}
