//! Collision polynomial of the factorization, rational fiber counts and the
//! additive fiber identity, and the primes where rational lifts of integer
//! inputs may have denominators.

use crate::algebra::{fmt_rational, int::prime_divisors, BiPoly, Rational, UniPoly};
use crate::factor::{rational_roots, BiFactorization};
use crate::{Error, Result};

/// `R(X) = Π_{a<b} Res_Y(P_a, P_b)` over all component factors (constant
/// factors dropped), optionally times the `Y`-discriminants of the
/// non-graph factors, together with its rational roots.
#[derive(Clone, Debug, PartialEq)]
pub struct CollisionSet {
    /// Primitive over ℤ with positive leading coefficient; `1` if no
    /// nonconstant factor remains.
    pub r: UniPoly,
    /// Rational roots of `R`, ascending.
    pub zr: Vec<Rational>,
    pub include_discriminants: bool,
}

impl CollisionSet {
    pub fn contains(&self, x: &Rational) -> bool {
        self.zr.binary_search(x).is_ok()
    }
}

fn strip_constant(p: &UniPoly) -> UniPoly {
    if p.is_constant() {
        UniPoly::one()
    } else {
        p.primitive()
    }
}

pub fn collision_set(fact: &BiFactorization, include_discriminants: bool) -> CollisionSet {
    let factors = fact.all_factors();
    let mut r = UniPoly::one();
    for (a, pa) in factors.iter().enumerate() {
        for pb in &factors[a + 1..] {
            let res = pa.resultant_y(pb);
            assert!(!res.is_zero(), "distinct irreducible factors share a component");
            r = &r * &strip_constant(&res);
        }
    }
    if include_discriminants {
        for f in &fact.nongraph_factors {
            let disc = f.discriminant_y();
            assert!(!disc.is_zero(), "non-squarefree factor");
            r = &r * &strip_constant(&disc);
        }
    }
    let r = strip_constant(&r);
    let zr = rational_roots(&r).into_iter().map(|(x, _)| x).collect();
    CollisionSet {
        r,
        zr,
        include_discriminants,
    }
}

/// Number of distinct rational `y` with `g(y) = f(x)`.
pub fn fiber_count(f: &UniPoly, g: &UniPoly, x: &Rational) -> usize {
    assert!(!g.is_constant(), "fiber count needs a nonconstant g");
    let shifted = g - &UniPoly::constant(f.eval(x));
    rational_roots(&shifted).len()
}

/// Both sides of `#{y : g(y) = f(x)} = s + Σ_j #{y : F_j(x, y) = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCheck {
    pub lhs: usize,
    /// Number of graph components.
    pub s: usize,
    /// Rational root counts of the `F_j(x, Y)`, in factor order.
    pub per_component: Vec<usize>,
}

impl FiberCheck {
    pub fn rhs(&self) -> usize {
        self.s + self.per_component.iter().sum::<usize>()
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs()
    }
}

pub fn fiber_formula_check(
    f: &UniPoly,
    g: &UniPoly,
    fact: &BiFactorization,
    x: &Rational,
) -> Result<FiberCheck> {
    fiber_formula_check_with(f, g, fact, &collision_set(fact, false), x)
}

/// As [`fiber_formula_check`] with a precomputed collision set.
pub fn fiber_formula_check_with(
    f: &UniPoly,
    g: &UniPoly,
    fact: &BiFactorization,
    collision: &CollisionSet,
    x: &Rational,
) -> Result<FiberCheck> {
    if collision.contains(x) {
        return Err(Error::InCollisionSet(fmt_rational(x)));
    }
    let per_component = fact
        .nongraph_factors
        .iter()
        .map(|fj: &BiPoly| rational_roots(&fj.eval_x(x)).len())
        .collect();
    let check = FiberCheck {
        lhs: fiber_count(f, g, x),
        s: fact.graph_factors.len(),
        per_component,
    };
    if !check.holds() {
        return Err(Error::Invariant(format!(
            "fiber identity fails at x = {}: {} != {}",
            fmt_rational(x),
            check.lhs,
            check.rhs()
        )));
    }
    Ok(check)
}

/// Primes dividing a coefficient denominator of `f` or `g`, or the
/// numerator of `lc(g)`; ascending.
pub fn bad_primes(f: &UniPoly, g: &UniPoly) -> Vec<u64> {
    assert!(!f.is_constant() && !g.is_constant(), "bad primes of constants");
    let mut out: Vec<u64> = Vec::new();
    for c in f.coeffs().iter().chain(g.coeffs()) {
        out.extend(prime_divisors(c.denom()));
    }
    out.extend(prime_divisors(g.lc().numer()));
    out.sort_unstable();
    out.dedup();
    out
}
