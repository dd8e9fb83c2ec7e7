//! Square-root sources: components parametrized as `X = αt² + β`,
//! `Y = c + t·E(t²)`, which exist only when `g` is symmetric about some
//! center `c`; plus verification of user-supplied polynomial
//! parametrizations `(A(t), B(t))` of higher degree.

use crate::algebra::{fmt_rational, implicitize, int, BiPoly, Rational, UniPoly};
use crate::decompose::{decompositions, is_poly_in};
use crate::factor::{rational_roots, square_decomposition};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::fmt;

/// `g(Y) = G((Y - c)²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SourceEvenForm {
    pub c: Rational,
    pub g_quotient: UniPoly,
}

/// The unique center `c` with `g(c + Z)` even in `Z`, if it exists.
pub fn source_even_center(g: &UniPoly) -> Option<SourceEvenForm> {
    assert!(!g.is_constant(), "source-even test of a constant");
    let n = g.deg();
    if n % 2 == 1 {
        return None;
    }
    let c = -g.coeff(n - 1) / (g.lc() * Rational::from_integer(n.into()));
    let shifted = g.taylor_shift(&c);
    let coeffs = shifted.coeffs();
    if coeffs.iter().skip(1).step_by(2).any(|x| !x.is_zero()) {
        return None;
    }
    let g_quotient = UniPoly::from_coeffs(coeffs.iter().step_by(2).cloned().collect());
    Some(SourceEvenForm { c, g_quotient })
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticSource {
    pub alpha: Rational,
    pub beta: Rational,
    pub c: Rational,
    pub e: UniPoly,
}

impl QuadraticSource {
    /// `A(t) = αt² + β`.
    pub fn a(&self) -> UniPoly {
        UniPoly::from_coeffs(vec![self.beta.clone(), Rational::zero(), self.alpha.clone()])
    }

    /// `B(t) = c + t·E(t²)`.
    pub fn b(&self) -> UniPoly {
        let t2 = UniPoly::monomial(int(1), 2);
        let odd = &UniPoly::x() * &self.e.compose(&t2);
        &odd + &UniPoly::constant(self.c.clone())
    }

    /// The irreducible curve traced by `(A(t), B(t))`, normalized.
    pub fn component(&self) -> BiPoly {
        implicitize(&self.a(), &self.b()).squarefree_part()
    }

    pub fn certificate(&self) -> ParamCertificate {
        ParamCertificate {
            a: self.a(),
            b: self.b(),
        }
    }

    /// Representative under `t ↦ -t`: positive leading coefficient of `E`.
    fn normalized(mut self) -> Self {
        if self.e.lc().is_negative() {
            self.e = -self.e;
        }
        self
    }
}

impl fmt::Display for QuadraticSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} beta={} c={} E={} (A={}, B={})",
            fmt_rational(&self.alpha),
            fmt_rational(&self.beta),
            fmt_rational(&self.c),
            self.e.display("u"),
            self.a().display("t"),
            self.b().display("t")
        )
    }
}

/// Builds `f(X) = G(((X-β)/α) · E((X-β)/α)²)` and `g(Y) = G((Y-c)²)`,
/// so that `(αt² + β, c + tE(t²))` lies on `f(X) = g(Y)`.
pub fn construct_quadratic_source(
    g_quotient: &UniPoly,
    c: &Rational,
    alpha: &Rational,
    beta: &Rational,
    e: &UniPoly,
) -> Result<(UniPoly, UniPoly, QuadraticSource)> {
    if alpha.is_zero() {
        return Err(Error::InvalidArgument("alpha must be nonzero".into()));
    }
    if e.is_zero() {
        return Err(Error::InvalidArgument("E must be nonzero".into()));
    }
    if g_quotient.is_constant() {
        return Err(Error::InvalidArgument("G must be nonconstant".into()));
    }
    let u = UniPoly::from_coeffs(vec![-beta / alpha, alpha.recip()]);
    let inner = &u * &e.compose(&u).pow(2);
    let f = g_quotient.compose(&inner);
    let shift = UniPoly::from_coeffs(vec![-c, int(1)]);
    let g = g_quotient.compose(&shift.pow(2));
    let src = QuadraticSource {
        alpha: alpha.clone(),
        beta: beta.clone(),
        c: c.clone(),
        e: e.clone(),
    };
    if f.compose(&src.a()) != g.compose(&src.b()) {
        return Err(Error::Invariant("constructed source is not on the curve".into()));
    }
    Ok((f, g, src))
}

/// All square-root sources of `f(X) = g(Y)` up to `t ↦ λt`, one per
/// component.
pub fn detect_quadratic_sources(f: &UniPoly, g: &UniPoly) -> Vec<QuadraticSource> {
    assert!(!f.is_constant() && !g.is_constant(), "source detection of constants");
    let Some(form) = source_even_center(g) else {
        return Vec::new();
    };
    let mut found: Vec<(BiPoly, QuadraticSource)> = Vec::new();
    for v in decompositions(f, &form.g_quotient).iter() {
        for (beta, mult) in rational_roots(v) {
            if mult % 2 == 0 {
                continue;
            }
            // V(Z + β) = Z·S(Z) and S = s·T², so V(sU + β) = U·(s·T(sU))²
            let w = v.taylor_shift(&beta);
            let s_poly = UniPoly::from_coeffs(w.coeffs()[1..].to_vec());
            let Some((s, t)) = square_decomposition(&s_poly) else {
                continue;
            };
            let e = t.scale_var(&s).scale(&s);
            let src = QuadraticSource {
                alpha: s,
                beta,
                c: form.c.clone(),
                e,
            }
            .normalized();
            let (a, b) = (src.a(), src.b());
            if f.compose(&a) != g.compose(&b) || is_poly_in(&b, &a).is_some() {
                continue;
            }
            let comp = src.component();
            if found.iter().all(|(k, _)| k != &comp) {
                found.push((comp, src));
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp_canonical(&y.0));
    found.into_iter().map(|(_, s)| s).collect()
}

/// A claimed polynomial parametrization `X = A(t)`, `Y = B(t)` of a
/// component.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamCertificate {
    pub a: UniPoly,
    pub b: UniPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateFailure {
    ConstantA,
    NotOnCurve,
    NotBirational,
    /// `B = P ∘ A`, so the curve is a graph.
    Graph(UniPoly),
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFailure::ConstantA => write!(f, "A is constant"),
            CertificateFailure::NotOnCurve => write!(f, "f(A(t)) != g(B(t))"),
            CertificateFailure::NotBirational => {
                write!(f, "t -> (A(t), B(t)) is not birational onto its image")
            }
            CertificateFailure::Graph(p) => {
                write!(f, "B = P(A) with P = {}, a graph component", p.display("z"))
            }
        }
    }
}

/// An accepted certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifiedParam {
    pub cert: ParamCertificate,
    pub d_x: usize,
    /// The irreducible curve traced by the parametrization, normalized.
    pub component: BiPoly,
}

/// `(P(t) - P(s)) / (t - s)` with `s` as `X` and `t` as `Y`.
fn divided_difference(p: &UniPoly) -> BiPoly {
    let mut terms = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        for i in 0..k {
            terms.push((k - 1 - i, i, c.clone()));
        }
    }
    BiPoly::from_terms(&terms)
}

/// Whether `t ↦ (A(t), B(t))` is birational onto its image: the gcd of
/// `A(t) - A(s)` and `B(t) - B(s)` over `ℚ(s)` is `t - s`.
pub fn is_birational(a: &UniPoly, b: &UniPoly) -> bool {
    if a.deg() <= 1 || b.degree() == Some(1) {
        return true;
    }
    let (da, db) = (divided_difference(a), divided_difference(b));
    if db.is_zero() {
        return false;
    }
    // (t - s) divides neither quotient, so the gcd is (t - s) times their gcd
    !da.resultant_y(&db).is_zero()
}

/// Checks a certificate: on the curve, birational, not a graph. Every
/// failed clause is reported.
pub fn verify_certificate(
    f: &UniPoly,
    g: &UniPoly,
    cert: &ParamCertificate,
) -> std::result::Result<VerifiedParam, Vec<CertificateFailure>> {
    if cert.a.is_constant() {
        return Err(vec![CertificateFailure::ConstantA]);
    }
    let mut failures = Vec::new();
    if f.compose(&cert.a) != g.compose(&cert.b) {
        failures.push(CertificateFailure::NotOnCurve);
    }
    if !is_birational(&cert.a, &cert.b) {
        failures.push(CertificateFailure::NotBirational);
    }
    if let Some(p) = is_poly_in(&cert.b, &cert.a) {
        failures.push(CertificateFailure::Graph(p));
    }
    if !failures.is_empty() {
        return Err(failures);
    }
    Ok(VerifiedParam {
        cert: cert.clone(),
        d_x: cert.a.deg(),
        component: implicitize(&cert.a, &cert.b).squarefree_part(),
    })
}
