use super::prs::Domain;
use super::{fmt_rational, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over ℚ, coefficients lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for places where a
    /// nonconstant input is already guaranteed.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Functional composition `self(inner(x))`, by Horner's rule.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Coefficients of `self(t0 + z)` as a polynomial in `z`.
    pub fn taylor_shift(&self, t0: &Rational) -> UniPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        // repeated synthetic division
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let v = &c[j + 1] * t0;
                c[j] += v;
            }
        }
        UniPoly::from_coeffs(c)
    }

    /// `self(a*x)`.
    pub fn scale_var(&self, a: &Rational) -> UniPoly {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= a;
        }
        UniPoly::from_coeffs(out)
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let lc_inv = d.lc().recip();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &lc_inv;
            if !f.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let v = &f * dc;
                    r[k + i] -= v;
                }
            }
            q[k] = f;
        }
        r.truncate(dd);
        (UniPoly::from_coeffs(q), UniPoly::from_coeffs(r))
    }

    /// Quotient when `d` divides `self`, otherwise `None`.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.lc().recip())
    }

    /// Splits `self = content · primitive`, where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> (Rational, UniPoly) {
        if self.is_zero() {
            return (Rational::zero(), UniPoly::zero());
        }
        let (den, nums) = self.to_integer_parts();
        let mut g = BigInt::zero();
        for n in &nums {
            g = g.gcd(n);
        }
        if self.lc().is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = nums.iter().map(|n| n / &g).collect();
        (
            Rational::new(g, den),
            UniPoly::from_bigints(&prim),
        )
    }

    pub fn primitive(&self) -> UniPoly {
        self.content_primitive().1
    }

    /// `(d, [n_i])` with `self = (Σ n_i x^i) / d`, `d` the least common
    /// denominator.
    pub fn to_integer_parts(&self) -> (BigInt, Vec<BigInt>) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (den, nums)
    }

    /// Canonical order: degree, then coefficients from the top down.
    pub fn cmp_canonical(&self, other: &UniPoly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Squarefree decomposition (Yun): pairs `(s_i, i)` with `self` equal to
    /// `lc · Π s_i^i`, each `s_i` monic, squarefree and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = poly_gcd(&f, &df);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = df.exact_div(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = poly_gcd(&b, &d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).unwrap();
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_constant() {
            return UniPoly::one();
        }
        let f = self.monic();
        let g = poly_gcd(&f, &f.derivative());
        f.exact_div(&g).unwrap()
    }

    pub fn display<'a>(&'a self, var: &'a str) -> UniPolyDisplay<'a> {
        UniPolyDisplay { poly: self, var }
    }
}

/// Monic greatest common divisor over ℚ (zero only when both inputs are zero).
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// Extended Euclid over ℚ: `(g, s, t)` with `s·p + t·q = g`, `g` monic.
pub fn poly_xgcd(p: &UniPoly, q: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
    let (mut r0, mut r1) = (p.clone(), q.clone());
    let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
    let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
    while !r1.is_zero() {
        let (quo, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &(&quo * &s1);
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &(&quo * &t1);
        t0 = std::mem::replace(&mut t1, t);
    }
    let l = r0.lc().recip();
    (r0.scale(&l), s0.scale(&l), t0.scale(&l))
}

/// Writes `c*var^k` terms highest degree first; output re-parses to the
/// same polynomial.
pub struct UniPolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

pub(crate) fn write_term(
    out: &mut String,
    c: &Rational,
    monomial: &str,
    first: bool,
) {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if monomial.is_empty() {
        out.push_str(&fmt_rational(&abs));
    } else if abs.is_one() {
        out.push_str(monomial);
    } else {
        out.push_str(&fmt_rational(&abs));
        out.push('*');
        out.push_str(monomial);
    }
}

pub(crate) fn power_str(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

impl fmt::Display for UniPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(&mut out, c, &power_str(self.var, k), first);
            first = false;
        }
        f.write_str(&out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("x").fmt(f)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::from_coeffs(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl Domain for UniPoly {
    fn zero_el() -> Self {
        UniPoly::zero()
    }
    fn one_el() -> Self {
        UniPoly::one()
    }
    fn is_zero_el(&self) -> bool {
        UniPoly::is_zero(self)
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
            .expect("inexact polynomial division in subresultant sequence")
    }
}
