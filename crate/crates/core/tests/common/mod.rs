#![allow(dead_code)]

use liftscope::algebra::rat;
use liftscope::{BiPoly, Rational, UniPoly};
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn small_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, prop::sample::select(vec![1i64, 1, 1, 2, 3, 4])).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rational> {
    (1i64..=6, any::<bool>(), prop::sample::select(vec![1i64, 1, 2, 3])).prop_map(|(n, neg, d)| {
        rat(if neg { -n } else { n }, d)
    })
}

pub fn small_int() -> impl Strategy<Value = Rational> {
    (-5i64..=5).prop_map(|n| rat(n, 1))
}

/// Polynomial of exact degree in `lo..=hi` with small rational coefficients.
pub fn uni(lo: usize, hi: usize) -> impl Strategy<Value = UniPoly> {
    (lo..=hi)
        .prop_flat_map(|d| (prop::collection::vec(small_rat(), d), nonzero_rat()))
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            UniPoly::from_coeffs(c)
        })
}

/// Integer coefficients, exact degree in `lo..=hi`, leading coefficient ±1.
pub fn monic_int_uni(lo: usize, hi: usize) -> impl Strategy<Value = UniPoly> {
    (lo..=hi)
        .prop_flat_map(|d| (prop::collection::vec(-3i64..=3, d), any::<bool>()))
        .prop_map(|(mut c, neg)| {
            c.push(if neg { -1 } else { 1 });
            UniPoly::from_ints(&c)
        })
}

/// Any polynomial of degree at most `hi`, possibly zero.
pub fn any_uni(hi: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rat(), 0..=hi + 1).prop_map(UniPoly::from_coeffs)
}

/// Bivariate polynomial monic in `Y` of degree `1..=dy`, `X`-degrees up to `dx`.
pub fn monic_bi(dy: usize, dx: usize) -> impl Strategy<Value = BiPoly> {
    (1..=dy)
        .prop_flat_map(move |d| prop::collection::vec(any_uni(dx), d))
        .prop_map(|mut rows| {
            rows.push(UniPoly::one());
            BiPoly::from_y_coeffs(rows)
        })
}

/// Resultant of two univariate polynomials as the determinant of their
/// Sylvester matrix, by plain Gaussian elimination over ℚ.
pub fn sylvester_resultant(p: &UniPoly, q: &UniPoly) -> Rational {
    let (m, n) = (p.deg(), q.deg());
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut mat = vec![vec![Rational::zero(); size]; size];
    for r in 0..n {
        for (i, c) in p.coeffs().iter().rev().enumerate() {
            mat[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in q.coeffs().iter().rev().enumerate() {
            mat[n + r][r + i] = c.clone();
        }
    }
    determinant(mat)
}

pub fn determinant(mut mat: Vec<Vec<Rational>>) -> Rational {
    let size = mat.len();
    let mut det = Rational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let pv = mat[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pv;
            for c in col..size {
                let sub = &factor * &mat[col][c];
                mat[r][c] -= sub;
            }
        }
    }
    det
}
