use crate::algebra::{bi_gcd, BiPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Number of irreducible factors over the algebraic closure of ℚ of a
/// squarefree polynomial.
///
/// Counts the solutions `(g, h)` of `∂_Y(g/f) = ∂_X(h/f)` with
/// `deg g ≤ (m-1, n)` and `deg h ≤ (m, n-1)`, which span a space whose
/// dimension equals the number of absolute factors provided
/// `gcd(f, f_X) = 1`. When only `gcd(f, f_Y) = 1` holds the roles of the
/// variables are exchanged.
pub fn absolute_factor_count(f: &BiPoly) -> usize {
    assert!(!f.is_zero(), "absolute factor count of zero");
    let f = f.normalized();
    let (m, n) = (f.deg_x().unwrap_or(0), f.deg_y().unwrap_or(0));
    if m == 0 {
        return n;
    }
    if n == 0 {
        return m;
    }
    if bi_gcd(&f, &f.derivative_x()).total_degree() != Some(0) {
        let swapped = f.swap_xy();
        assert!(
            bi_gcd(&swapped, &swapped.derivative_x()).total_degree() == Some(0),
            "absolute factor count needs a squarefree input"
        );
        return kernel_dimension(&swapped);
    }
    kernel_dimension(&f)
}

fn kernel_dimension(f: &BiPoly) -> usize {
    let (m, n) = (f.deg_x().unwrap(), f.deg_y().unwrap());
    let fx = f.derivative_x();
    let fy = f.derivative_y();
    let mut columns: Vec<BiPoly> = Vec::new();
    for i in 0..m {
        for j in 0..=n {
            let g = monomial(i, j);
            columns.push(&(f * &g.derivative_y()) - &(&g * &fy));
        }
    }
    for i in 0..=m {
        for j in 0..n {
            let h = monomial(i, j);
            columns.push(&(&h * &fx) - &(f * &h.derivative_x()));
        }
    }
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for col in &columns {
        for (i, j, _) in col.terms() {
            let next = index.len();
            index.entry((i, j)).or_insert(next);
        }
    }
    // f has integer coefficients, so every entry is an integer
    let mut rows = vec![vec![BigInt::zero(); columns.len()]; index.len()];
    for (c, col) in columns.iter().enumerate() {
        for (i, j, v) in col.terms() {
            debug_assert!(v.denom() == &BigInt::from(1));
            rows[index[&(i, j)]][c] = v.numer().clone();
        }
    }
    columns.len() - rank(rows)
}

fn monomial(i: usize, j: usize) -> BiPoly {
    BiPoly::from_terms(&[(i, j, crate::algebra::int(1))])
}

/// Rank of an integer matrix by fraction-free elimination.
fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let (top, rest) = rows.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = prow[c].clone();
            let b = row[c].clone();
            let mut g = BigInt::zero();
            for (x, p) in row.iter_mut().zip(prow.iter()) {
                *x = &*x * &a - p * &b;
                g = g.gcd(x);
            }
            if !g.is_zero() && g.abs() != BigInt::from(1) {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        r += 1;
    }
    r
}
