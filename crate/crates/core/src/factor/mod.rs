//! Exact factorization over ℚ: univariate (Zassenhaus), bivariate for the
//! separated shape `f(X) - g(Y)` (Hensel lifting in `X`), and the count of
//! absolutely irreducible factors (Gao's partial-differential criterion).

mod absolute;
mod bivariate;
pub(crate) mod modp;
mod zassenhaus;

pub use absolute::absolute_factor_count;
pub use bivariate::{factor_bi, factor_monic_y, BiFactorization};

use crate::algebra::{Rational, UniPoly};
use num_traits::{One, Zero};

/// `unit · Π factor^multiplicity`, factors primitive over ℤ with positive
/// leading coefficient, sorted canonically.
#[derive(Clone, Debug, PartialEq)]
pub struct UniFactorization {
    pub unit: Rational,
    pub factors: Vec<(UniPoly, usize)>,
}

impl UniFactorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Complete factorization of a nonzero polynomial into irreducibles over ℚ.
pub fn factor_uni(p: &UniPoly) -> UniFactorization {
    assert!(!p.is_zero(), "factor_uni of zero");
    let mut factors: Vec<(UniPoly, usize)> = Vec::new();
    for (s, mult) in p.squarefree_decomposition() {
        let (_, nums) = s.primitive().to_integer_parts();
        for f in zassenhaus::factor_squarefree_primitive(&nums) {
            factors.push((UniPoly::from_bigints(&f), mult));
        }
    }
    factors.sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
    let prod = factors
        .iter()
        .fold(UniPoly::one(), |acc, (f, m)| &acc * &f.pow(*m));
    let unit = p.lc() / prod.lc();
    UniFactorization { unit, factors }
}

/// Distinct rational roots with multiplicities, ascending.
pub fn rational_roots(p: &UniPoly) -> Vec<(Rational, usize)> {
    assert!(!p.is_zero(), "rational_roots of zero");
    if p.is_constant() {
        return Vec::new();
    }
    // x = 0 is cheap to split off and keeps the factorization smaller
    let low = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut out = Vec::new();
    if low > 0 {
        out.push((Rational::zero(), low));
    }
    let rest = UniPoly::from_coeffs(p.coeffs()[low..].to_vec());
    if !rest.is_constant() {
        for (f, m) in factor_uni(&rest).factors {
            if f.degree() == Some(1) {
                out.push((-f.coeff(0) / f.coeff(1), m));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Whether `p` is a nonzero rational constant times the square of a
/// polynomial over ℚ; returns `(s, T)` with `p = s · T²`, `T` monic.
pub fn square_decomposition(p: &UniPoly) -> Option<(Rational, UniPoly)> {
    if p.is_zero() {
        return None;
    }
    let mut root = UniPoly::one();
    for (s, m) in p.squarefree_decomposition() {
        if m % 2 == 1 {
            return None;
        }
        root = &root * &s.pow(m / 2);
    }
    let s = p.lc() / root.lc().pow(2);
    debug_assert!(root.lc().is_one());
    Some((s, root))
}
