//! Subresultant pseudo-remainder sequences over an exact integral domain.
//!
//! Polynomials here are dense coefficient slices, lowest degree first, with
//! no trailing zeros. The same code computes resultants over ℚ, over ℚ[X]
//! (for `Res_Y` of bivariate polynomials) and over ℚ[X, Y] (implicitization).

use super::Rational;
use num_traits::{One, Zero};

/// An integral domain with exact division.
pub trait Domain: Clone + PartialEq {
    fn zero_el() -> Self;
    fn one_el() -> Self;
    fn is_zero_el(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `self / other`, where the division is known to be exact.
    fn div_exact(&self, other: &Self) -> Self;

    fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one_el();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Domain for Rational {
    fn zero_el() -> Self {
        Zero::zero()
    }
    fn one_el() -> Self {
        One::one()
    }
    fn is_zero_el(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

fn trim<D: Domain>(p: &mut Vec<D>) {
    while p.last().is_some_and(|c| c.is_zero_el()) {
        p.pop();
    }
}

fn deg<D: Domain>(p: &[D]) -> usize {
    p.len() - 1
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a mod b`.
pub fn pseudo_remainder<D: Domain>(a: &[D], b: &[D]) -> Vec<D> {
    assert!(!b.is_empty(), "pseudo-division by zero polynomial");
    let mut r: Vec<D> = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return r;
    }
    let db = deg(b);
    let lcb = b[db].clone();
    let mut steps = r.len() - b.len() + 1;
    while !r.is_empty() && r.len() >= b.len() {
        let dr = deg(&r);
        let lcr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul_ref(&lcb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub_ref(&lcr.mul_ref(bc));
        }
        r.pop();
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = lcb.pow(steps);
        for c in r.iter_mut() {
            *c = c.mul_ref(&f);
        }
    }
    r
}

/// Resultant of two polynomials over `D` by the subresultant PRS.
///
/// Returns zero when either input is the zero polynomial.
pub fn resultant<D: Domain>(a: &[D], b: &[D]) -> D {
    let mut a: Vec<D> = a.to_vec();
    let mut b: Vec<D> = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return D::zero_el();
    }
    let mut negate = false;
    if a.len() < b.len() {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if deg(&b) == 0 {
        let r = b[0].pow(deg(&a));
        return if negate { r.neg_ref() } else { r };
    }
    let mut g = D::one_el();
    let mut h = D::one_el();
    loop {
        let da = deg(&a);
        let db = deg(&b);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_remainder(&a, &b);
        a = b;
        if r.is_empty() {
            return D::zero_el();
        }
        let divisor = g.mul_ref(&h.pow(delta));
        b = r.iter().map(|c| c.div_exact(&divisor)).collect();
        g = a[deg(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1))
        };
        if deg(&b) == 0 {
            let da = deg(&a);
            let lb = &b[0];
            let res = if da == 0 {
                h
            } else {
                lb.pow(da).div_exact(&h.pow(da - 1))
            };
            return if negate { res.neg_ref() } else { res };
        }
    }
}

/// Discriminant `(-1)^(n(n-1)/2) · Res(p, p') / lc(p)` for `deg p = n ≥ 1`.
pub fn discriminant<D: Domain>(p: &[D], derivative: &[D]) -> D {
    let mut p = p.to_vec();
    trim(&mut p);
    assert!(p.len() >= 2, "discriminant of a constant");
    let n = deg(&p);
    let r = resultant(&p, derivative).div_exact(&p[n]);
    if (n * (n - 1) / 2) % 2 == 1 {
        r.neg_ref()
    } else {
        r
    }
}
