//! Exact arithmetic substrate: rationals, dense univariate and bivariate
//! polynomials over the rationals, and the subresultant machinery shared by
//! gcd, resultant and discriminant computations.

mod bi;
pub mod int;
mod prs;
mod uni;

pub use bi::{bi_gcd, implicitize, BiPoly};
pub use prs::{discriminant, pseudo_remainder, resultant, Domain};
pub use uni::{poly_gcd, poly_xgcd, UniPoly, UniPolyDisplay};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number in canonical form
/// (coprime numerator and denominator, positive denominator).
pub type Rational = BigRational;

/// Rational from a pair of machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact `k`-th root of a rational, if it exists. For even `k` the
/// non-negative root is returned.
pub fn rational_root(q: &Rational, k: u32) -> Option<Rational> {
    assert!(k >= 1);
    if q.is_zero() {
        return Some(Rational::zero());
    }
    if q.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let num = int::exact_root(&q.numer().abs(), k)?;
    let den = int::exact_root(q.denom(), k)?;
    let root = Rational::new(num, den);
    Some(if q.is_negative() { -root } else { root })
}

/// Total order on rationals used for canonical sorting (numeric order).
pub fn cmp_rational(a: &Rational, b: &Rational) -> std::cmp::Ordering {
    a.cmp(b)
}
