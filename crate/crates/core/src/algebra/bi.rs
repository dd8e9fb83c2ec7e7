use super::prs::{self, Domain};
use super::uni::{power_str, write_term};
use super::{poly_gcd, Rational, UniPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense bivariate polynomial over ℚ, stored as a polynomial in `Y` whose
/// coefficients are polynomials in `X` (lowest `Y`-degree first, leading
/// `Y`-coefficient nonzero).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_x(UniPoly::one())
    }

    pub fn from_y_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// A polynomial in `X` alone.
    pub fn from_x(p: UniPoly) -> Self {
        Self::from_y_coeffs(vec![p])
    }

    /// A polynomial in `Y` alone.
    pub fn from_y(p: &UniPoly) -> Self {
        Self::from_y_coeffs(
            p.coeffs()
                .iter()
                .map(|c| UniPoly::constant(c.clone()))
                .collect(),
        )
    }

    /// `f(X) - g(Y)`.
    pub fn separated(f: &UniPoly, g: &UniPoly) -> Self {
        &Self::from_x(f.clone()) - &Self::from_y(g)
    }

    /// The graph factor `Y - h(X)`.
    pub fn graph(h: &UniPoly) -> Self {
        Self::from_y_coeffs(vec![-h, UniPoly::one()])
    }

    /// Builds from `(x_exp, y_exp, coeff)` terms; repeated terms add up.
    pub fn from_terms(terms: &[(usize, usize, Rational)]) -> Self {
        let ny = terms.iter().map(|t| t.1 + 1).max().unwrap_or(0);
        let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); ny];
        for (i, j, c) in terms {
            let row = &mut rows[*j];
            if row.len() <= *i {
                row.resize(i + 1, Rational::zero());
            }
            row[*i] += c;
        }
        Self::from_y_coeffs(rows.into_iter().map(UniPoly::from_coeffs).collect())
    }

    pub fn y_coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Coefficient of `Y^j` as a polynomial in `X`.
    pub fn coeff_y(&self, j: usize) -> UniPoly {
        self.coeffs.get(j).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(j)
            .map(|c| c.coeff(i))
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.degree().map(|d| d + j))
            .max()
    }

    /// Leading coefficient in `Y`, a polynomial in `X`.
    pub fn lc_y(&self) -> UniPoly {
        self.coeffs.last().cloned().unwrap_or_else(UniPoly::zero)
    }

    /// Nonzero terms as `(x_exp, y_exp, coeff)`.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for (j, row) in self.coeffs.iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// Specialization `P(x, Y)`, a polynomial in `Y`.
    pub fn eval_x(&self, x: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(x)).collect())
    }

    /// Specialization `P(X, y)`, a polynomial in `X`.
    pub fn eval_y(&self, y: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        let c = UniPoly::constant(y.clone());
        for row in self.coeffs.iter().rev() {
            acc = &(&acc * &c) + row;
        }
        acc
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_x(x).eval(y)
    }

    /// `P(A(t), B(t))`.
    pub fn eval_param(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for row in self.coeffs.iter().rev() {
            acc = &(&acc * b) + &row.compose(a);
        }
        acc
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_y_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&super::int(j as i64)))
                .collect(),
        )
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_y_coeffs(self.coeffs.iter().map(UniPoly::derivative).collect())
    }

    /// `P(X + x0, Y)`.
    pub fn shift_x(&self, x0: &Rational) -> Self {
        Self::from_y_coeffs(self.coeffs.iter().map(|c| c.taylor_shift(x0)).collect())
    }

    /// Exchanges the roles of `X` and `Y`.
    pub fn swap_xy(&self) -> Self {
        let terms: Vec<_> = self.terms().into_iter().map(|(i, j, c)| (j, i, c)).collect();
        Self::from_terms(&terms)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_y_coeffs(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_x(&self, p: &UniPoly) -> Self {
        Self::from_y_coeffs(self.coeffs.iter().map(|c| c * p).collect())
    }

    /// Division in ℚ[X][Y]; `None` unless the division is exact.
    pub fn exact_div(&self, d: &BiPoly) -> Option<BiPoly> {
        let dd = d.deg_y().expect("division by zero polynomial");
        let lcd = d.lc_y();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return self.is_zero().then(BiPoly::zero);
        }
        let mut q = vec![UniPoly::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = r[k + dd].exact_div(&lcd)?;
            if !f.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = &r[k + i] - &(&f * dc);
                }
            }
            q[k] = f;
        }
        if r[..dd].iter().all(UniPoly::is_zero) {
            Some(BiPoly::from_y_coeffs(q))
        } else {
            None
        }
    }

    /// Monic gcd over ℚ of the `Y`-coefficients.
    pub fn content_x(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for c in &self.coeffs {
            g = poly_gcd(&g, c);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// `self / content_x(self)`.
    pub fn primitive_part_x(&self) -> Self {
        let c = self.content_x();
        Self::from_y_coeffs(
            self.coeffs
                .iter()
                .map(|p| p.exact_div(&c).expect("content divides"))
                .collect(),
        )
    }

    /// Canonical unit normalization: coprime integer coefficients and a
    /// positive leading coefficient (leading in `Y`, then in `X`). Returns
    /// `(unit, normalized)` with `self = unit · normalized`.
    pub fn normalize(&self) -> (Rational, BiPoly) {
        if self.is_zero() {
            return (Rational::zero(), BiPoly::zero());
        }
        let mut den = BigInt::one();
        for row in &self.coeffs {
            for c in row.coeffs() {
                den = den.lcm(c.denom());
            }
        }
        let mut g = BigInt::zero();
        for row in &self.coeffs {
            for c in row.coeffs() {
                g = g.gcd(&(c.numer() * (&den / c.denom())));
            }
        }
        if self.lc_y().lc().is_negative() {
            g = -g;
        }
        let unit = Rational::new(g, den);
        (unit.clone(), self.scale(&unit.recip()))
    }

    pub fn normalized(&self) -> BiPoly {
        self.normalize().1
    }

    /// Canonical order: total degree, `Y`-degree, then coefficients.
    pub fn cmp_canonical(&self, other: &BiPoly) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.deg_y().cmp(&other.deg_y()))
            .then_with(|| {
                for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
                    match a.cmp_canonical(b) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }

    /// Squarefree part, normalized canonically: the product of the distinct
    /// irreducible factors.
    pub fn squarefree_part(&self) -> BiPoly {
        assert!(!self.is_zero(), "squarefree part of zero");
        let content = self.content_x();
        let prim = self.primitive_part_x();
        let mut out = BiPoly::from_x(content.squarefree_part());
        if prim.deg_y().unwrap_or(0) > 0 {
            let g = bi_gcd(&prim, &prim.derivative_y());
            out = &out * &prim.exact_div(&g).expect("gcd divides");
        }
        out.normalized()
    }

    /// `Res_Y(self, other)`, a polynomial in `X`.
    pub fn resultant_y(&self, other: &BiPoly) -> UniPoly {
        prs::resultant(&self.coeffs, &other.coeffs)
    }

    /// `disc_Y(self)`.
    pub fn discriminant_y(&self) -> UniPoly {
        prs::discriminant(&self.coeffs, &self.derivative_y().coeffs)
    }

    pub fn display<'a>(&'a self, x: &'a str, y: &'a str) -> BiPolyDisplay<'a> {
        BiPolyDisplay { poly: self, x, y }
    }
}

/// Gcd in ℚ[X][Y] by primitive pseudo-remainder sequence, normalized
/// canonically.
pub fn bi_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let c = poly_gcd(&a.content_x(), &b.content_x());
    let (mut p, mut q) = (a.primitive_part_x(), b.primitive_part_x());
    if p.deg_y() < q.deg_y() {
        std::mem::swap(&mut p, &mut q);
    }
    // coprime specializations (leading coefficients nonzero) rule out a
    // common factor of positive Y-degree; this settles the usual case cheaply
    let (lp, lq) = (p.lc_y(), q.lc_y());
    let coprime_at = (0i64..3)
        .map(|k| Rational::from_integer(k.into()))
        .filter(|x0| !lp.eval(x0).is_zero() && !lq.eval(x0).is_zero())
        .any(|x0| poly_gcd(&p.eval_x(&x0), &q.eval_x(&x0)).is_constant());
    if coprime_at {
        return BiPoly::from_x(c).normalized();
    }
    while q.deg_y().unwrap_or(0) > 0 {
        let r = BiPoly::from_y_coeffs(prs::pseudo_remainder(&p.coeffs, &q.coeffs));
        p = q;
        if r.is_zero() {
            q = BiPoly::zero();
            break;
        }
        q = r.primitive_part_x();
    }
    let g = if q.is_zero() { p } else { BiPoly::one() };
    g.mul_x(&c).normalized()
}

/// Implicit equation of the parametrized curve `(A(t), B(t))`:
/// `Res_t(X - A(t), Y - B(t))`, normalized canonically. Zero if both
/// coordinates are constant.
pub fn implicitize(a: &UniPoly, b: &UniPoly) -> BiPoly {
    let lift = |p: &UniPoly, var: BiPoly| -> Vec<BiPoly> {
        let mut out: Vec<BiPoly> = p
            .coeffs()
            .iter()
            .map(|c| BiPoly::from_x(UniPoly::constant(-c)))
            .collect();
        if out.is_empty() {
            out.push(BiPoly::zero());
        }
        out[0] = &out[0] + &var;
        while out.len() > 1 && out.last().is_some_and(BiPoly::is_zero) {
            out.pop();
        }
        out
    };
    let x = lift(a, BiPoly::from_x(UniPoly::x()));
    let y = lift(b, BiPoly::from_y(&UniPoly::x()));
    if x.len() == 1 && y.len() == 1 {
        return BiPoly::zero();
    }
    prs::resultant(&x, &y).normalized()
}

pub struct BiPolyDisplay<'a> {
    poly: &'a BiPoly,
    x: &'a str,
    y: &'a str,
}

impl fmt::Display for BiPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.poly.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        // total degree descending, then x-degree descending
        terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let mut out = String::new();
        for (k, (i, j, c)) in terms.iter().enumerate() {
            let mono = match (power_str(self.x, *i), power_str(self.y, *j)) {
                (a, b) if a.is_empty() => b,
                (a, b) if b.is_empty() => a,
                (a, b) => format!("{a}*{b}"),
            };
            write_term(&mut out, c, &mono, k == 0);
        }
        f.write_str(&out)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("x", "y").fmt(f)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_y_coeffs(
            (0..n)
                .map(|j| &self.coeff_y(j) + &rhs.coeff_y(j))
                .collect(),
        )
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::from_y_coeffs(out)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Domain for BiPoly {
    fn zero_el() -> Self {
        BiPoly::zero()
    }
    fn one_el() -> Self {
        BiPoly::one()
    }
    fn is_zero_el(&self) -> bool {
        BiPoly::is_zero(self)
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
        self.exact_div(other)
            .expect("inexact bivariate division in subresultant sequence")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn t(terms: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_terms(
            &terms
                .iter()
                .map(|&(i, j, c)| (i, j, int(c)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn squarefree_part_examples() {
        let x_minus_y = t(&[(1, 0, 1), (0, 1, -1)]);
        let sq = &x_minus_y * &x_minus_y;
        assert_eq!(sq.squarefree_part(), x_minus_y.normalized());

        let quartic = t(&[(4, 0, 1), (0, 4, -1)]);
        assert_eq!(quartic.squarefree_part(), quartic.normalized());

        let x_minus_y2 = t(&[(1, 0, 1), (0, 2, -1)]);
        let cube = &(&x_minus_y2 * &x_minus_y2) * &x_minus_y2;
        assert_eq!(cube.squarefree_part(), x_minus_y2.normalized());

        // content in X is handled too: X^2 (Y - X)^2
        let mixed = &BiPoly::from_x(UniPoly::from_ints(&[0, 0, 1])) * &sq;
        let expect = &BiPoly::from_x(UniPoly::x()) * &x_minus_y;
        assert_eq!(mixed.squarefree_part(), expect.normalized());
    }

    #[test]
    fn resultant_examples() {
        let x_minus_y = t(&[(1, 0, 1), (0, 1, -1)]);
        let x_plus_y = t(&[(1, 0, 1), (0, 1, 1)]);
        let x2_plus_y2 = t(&[(2, 0, 1), (0, 2, 1)]);
        // Sylvester determinant |-1 x; 1 x| = -2x; the opposite order gives 2x
        assert_eq!(x_minus_y.resultant_y(&x_plus_y), UniPoly::from_ints(&[0, -2]));
        assert_eq!(x_plus_y.resultant_y(&x_minus_y), UniPoly::from_ints(&[0, 2]));
        assert_eq!(
            x_minus_y.resultant_y(&x2_plus_y2),
            UniPoly::from_ints(&[0, 0, 2])
        );
        let g = BiPoly::graph(&UniPoly::from_ints(&[1, 0, 3]));
        assert!(g.resultant_y(&g).is_zero());
    }

    #[test]
    fn display_orders_terms() {
        let p = t(&[(2, 0, 1), (0, 2, 1)]);
        assert_eq!(p.to_string(), "x^2 + y^2");
        let q = t(&[(1, 0, -1), (0, 2, 1), (1, 1, 3)]);
        assert_eq!(q.to_string(), "3*x*y + y^2 - x");
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = t(&[(1, 0, 1), (0, 1, -1)]);
        let b = t(&[(1, 0, 1), (0, 1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(a.exact_div(&b), None);
    }

    #[test]
    fn implicitization() {
        // (t^2, t^3) lies on y^2 = x^3
        let c = implicitize(&UniPoly::from_ints(&[0, 0, 1]), &UniPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(c, BiPoly::from_terms(&[(3, 0, int(-1)), (0, 2, int(1))]));
        // (t, t^2): y = x^2
        let c = implicitize(&UniPoly::x(), &UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(c, BiPoly::graph(&UniPoly::from_ints(&[0, 0, 1])));
    }
}
