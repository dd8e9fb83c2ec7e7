//! Right factors `h` with `f = g ∘ h` for a fixed outer `g`, and the test
//! whether one polynomial is a polynomial in another.

use crate::algebra::{rational_root, BiPoly, Rational, UniPoly};
use crate::factor::BiFactorization;
use crate::{Error, Result};
use num_traits::{Signed, Zero};

/// The finite set `{h ∈ ℚ[x] : f = g ∘ h}`, canonically sorted.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DecompositionSet {
    pub entries: Vec<UniPoly>,
}

impl DecompositionSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, UniPoly> {
        self.entries.iter()
    }
}

/// All `h` over ℚ with `g ∘ h = f`. Empty when `deg g ∤ deg f`.
pub fn decompositions(f: &UniPoly, g: &UniPoly) -> DecompositionSet {
    assert!(!f.is_constant() && !g.is_constant(), "decompositions of constants");
    let (big_n, n) = (f.deg(), g.deg());
    if big_n % n != 0 {
        return DecompositionSet::default();
    }
    let d = big_n / n;
    let ratio = f.lc() / g.lc();
    let mut leads = Vec::new();
    if let Some(r) = rational_root(&ratio, n as u32) {
        leads.push(r.clone());
        if n % 2 == 0 {
            leads.push(-r);
        }
    }
    let mut entries = Vec::new();
    for lead in leads {
        let mut h = UniPoly::monomial(lead.clone(), d);
        let mult = g.lc() * Rational::from_integer(n.into()) * lead.pow(n as i32 - 1);
        for k in 1..=d {
            let have = g.compose(&h).coeff(big_n - k);
            let c = (f.coeff(big_n - k) - have) / &mult;
            if !c.is_zero() {
                h = &h + &UniPoly::monomial(c, d - k);
            }
        }
        if &g.compose(&h) == f {
            entries.push(h);
        }
    }
    entries.sort_by(|a, b| a.cmp_canonical(b));
    debug_assert!(entries.len() <= 2);
    DecompositionSet { entries }
}

/// The unique `P` with `B = P ∘ A`, if one exists.
pub fn is_poly_in(b: &UniPoly, a: &UniPoly) -> Option<UniPoly> {
    assert!(!a.is_constant(), "is_poly_in needs a nonconstant A");
    let da = a.deg();
    let mut rest = b.clone();
    let mut coeffs: Vec<Rational> = Vec::new();
    while !rest.is_constant() {
        let dr = rest.deg();
        if !dr.is_multiple_of(da) {
            return None;
        }
        let k = dr / da;
        let c = rest.lc() / a.lc().pow(k as i32);
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        rest = &rest - &a.pow(k).scale(&c);
        coeffs[k] = c;
    }
    if coeffs.is_empty() {
        coeffs.push(Rational::zero());
    }
    coeffs[0] = rest.coeff(0);
    let p = UniPoly::from_coeffs(coeffs);
    (&p.compose(a) == b).then_some(p)
}

/// The non-graph factors `F_j`, after checking that the degree-one factors
/// of the factorization are exactly the graphs `Y - h(X)`, `h ∈ H`.
pub fn strip_graphs(fact: &BiFactorization, h: &DecompositionSet) -> Result<Vec<BiPoly>> {
    if fact.graph_factors != h.entries {
        let show = |v: &[UniPoly]| {
            v.iter()
                .map(|p| p.display("x").to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        return Err(Error::GraphMismatch(format!(
            "degree-one factors {{{}}} but decompositions {{{}}}",
            show(&fact.graph_factors),
            show(&h.entries)
        )));
    }
    for f in &fact.nongraph_factors {
        if f.deg_y().unwrap_or(0) < 2 || !f.lc_y().is_constant() || f.lc_y().lc().is_negative() {
            return Err(Error::Invariant(format!("malformed non-graph factor {f}")));
        }
    }
    Ok(fact.nongraph_factors.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factor_bi;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn decomposition_examples() {
        let h = decompositions(&p(&[0, 0, 0, 0, 1]), &p(&[0, 0, 0, 0, 1]));
        assert_eq!(h.entries, vec![p(&[0, -1]), p(&[0, 1])]);
        assert!(decompositions(&p(&[0, 1]), &p(&[0, 0, 1])).is_empty());
        let h = decompositions(&p(&[1, 0, 2, 0, 1]), &p(&[0, 0, 1]));
        assert_eq!(h.entries, vec![p(&[-1, 0, -1]), p(&[1, 0, 1])]);
        // no rational leading coefficient: 2x^2 = h^2
        assert!(decompositions(&p(&[0, 0, 2]), &p(&[0, 0, 1])).is_empty());
        // T2∘T3 = T3∘T2
        let (t2, t3) = (p(&[-1, 0, 2]), p(&[0, -3, 0, 4]));
        let h = decompositions(&t3.compose(&t2), &t3);
        assert_eq!(h.entries, vec![t2]);
    }

    #[test]
    fn poly_in_examples() {
        let a = p(&[0, 0, 1]);
        assert_eq!(is_poly_in(&p(&[1, 0, 0, 0, 1]), &a), Some(p(&[1, 0, 1])));
        assert_eq!(is_poly_in(&p(&[0, 0, 0, 1]), &a), None);
        let (t2, t3) = (p(&[-1, 0, 2]), p(&[0, -3, 0, 4]));
        assert_eq!(is_poly_in(&t2, &t3), None);
        assert_eq!(is_poly_in(&p(&[5]), &a), Some(p(&[5])));
        // degree divides but the polynomial is not in Q[A]
        assert_eq!(is_poly_in(&p(&[0, 1, 0, 0, 1]), &a), None);
    }

    #[test]
    fn strip_graph_examples() {
        let cases: [(&[i64], &[i64], usize); 3] = [
            (&[0, 0, 0, 0, 1], &[0, 0, 0, 0, 1], 1),
            (&[0, 1], &[0, 0, 1], 1),
            (&[1, 0, 2, 0, 1], &[0, 0, 1], 0),
        ];
        for (f, g, stubs) in cases {
            let (f, g) = (p(f), p(g));
            let fact = factor_bi(&BiPoly::separated(&f, &g).squarefree_part()).unwrap();
            let h = decompositions(&f, &g);
            assert_eq!(strip_graphs(&fact, &h).unwrap().len(), stubs);
        }
        let fact = factor_bi(&BiPoly::separated(&p(&[0, 0, 0, 0, 1]), &p(&[0, 0, 0, 0, 1]))).unwrap();
        assert!(matches!(
            strip_graphs(&fact, &DecompositionSet::default()),
            Err(Error::GraphMismatch(_))
        ));
    }
}
