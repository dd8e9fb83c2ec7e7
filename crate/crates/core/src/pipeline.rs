//! End-to-end analysis of `f(X) = g(Y)`: factor, remove graphs, classify
//! each remaining component, test activity, and predict the growth of the
//! number of integer inputs with new rational lifts.

use crate::activity::{activity_witness, ActivityResult};
use crate::algebra::{fmt_rational, rational_root, BiPoly, Rational, UniPoly};
use crate::decompose::{decompositions, strip_graphs, DecompositionSet};
use crate::factor::{absolute_factor_count, factor_bi, BiFactorization};
use crate::fibers::{collision_set, CollisionSet};
use crate::sources::{
    detect_quadratic_sources, verify_certificate, ParamCertificate, QuadraticSource,
};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Parametrization {
    Source(QuadraticSource),
    Certificate(ParamCertificate),
}

impl Parametrization {
    pub fn a(&self) -> UniPoly {
        match self {
            Parametrization::Source(s) => s.a(),
            Parametrization::Certificate(c) => c.a.clone(),
        }
    }

    pub fn b(&self) -> UniPoly {
        match self {
            Parametrization::Source(s) => s.b(),
            Parametrization::Certificate(c) => c.b.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Classification {
    SiegelFinite {
        reason: String,
    },
    OneInfinity {
        d_x: usize,
        param: Parametrization,
        activity: ActivityResult,
    },
    TwoInfinity {
        detail: String,
    },
    Unclassified,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::SiegelFinite { .. } => "siegel-finite",
            Classification::OneInfinity { .. } => "one-infinity",
            Classification::TwoInfinity { .. } => "two-infinity",
            Classification::Unclassified => "unclassified",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    Certificate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComponentRecord {
    pub factor: BiPoly,
    pub abs_factors: usize,
    pub classification: Classification,
    pub provenance: Provenance,
}

impl ComponentRecord {
    pub fn d_x(&self) -> Option<usize> {
        match &self.classification {
            Classification::OneInfinity { d_x, .. } => Some(*d_x),
            _ => None,
        }
    }

    pub fn activity(&self) -> Option<&ActivityResult> {
        match &self.classification {
            Classification::OneInfinity { activity, .. } => Some(activity),
            _ => None,
        }
    }

    pub fn is_active(&self) -> bool {
        self.activity().is_some_and(ActivityResult::is_active)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GrowthClass {
    Power(Rational),
    Polylog,
    Bounded,
    Unknown,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftReport {
    pub f: UniPoly,
    pub g: UniPoly,
    pub decompositions: DecompositionSet,
    pub factorization: BiFactorization,
    pub components: Vec<ComponentRecord>,
    pub collision: CollisionSet,
    pub theta: Option<Rational>,
    pub growth: GrowthClass,
    pub notes: Vec<String>,
}

/// Parametrization `(-ψ(t)/c, t)` of a factor `c·X + ψ(Y)`.
fn x_linear_param(f: &BiPoly) -> Option<ParamCertificate> {
    if f.deg_x() != Some(1) {
        return None;
    }
    let rows = f.y_coeffs();
    let c = rows[0].coeff(1);
    if c.is_zero() || rows.iter().skip(1).any(|r| !r.coeff(1).is_zero()) {
        return None;
    }
    let psi = UniPoly::from_coeffs(rows.iter().map(|r| r.coeff(0)).collect());
    Some(ParamCertificate {
        a: psi.scale(&(-c.recip())),
        b: UniPoly::x(),
    })
}

/// Points at infinity of a conic factor, from its quadratic part
/// `aX² + bXY + cY²`.
fn conic_infinity(f: &BiPoly) -> (usize, String) {
    let a = f.coeff(2, 0);
    let b = f.coeff(1, 1);
    let c = f.coeff(0, 2);
    let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
    if disc.is_zero() {
        return (1, "degree form is a square; one point at infinity".into());
    }
    let kind = if rational_root(&disc, 2).is_some() {
        "two rational points at infinity"
    } else if disc.is_positive() {
        "two real conjugate points at infinity"
    } else {
        "two complex conjugate points at infinity"
    };
    (2, format!("degree form discriminant {}; {kind}", fmt_rational(&disc)))
}

fn one_infinity(d_x: usize, param: Parametrization) -> Result<Classification> {
    let activity = activity_witness(&param.a())?;
    Ok(Classification::OneInfinity {
        d_x,
        param,
        activity,
    })
}

/// Runs the whole analysis. Certificates that fail verification or match
/// no unclassified component are reported in `notes`.
pub fn analyze(f: &UniPoly, g: &UniPoly, certificates: &[ParamCertificate]) -> Result<LiftReport> {
    if f.is_constant() {
        return Err(Error::Constant("f"));
    }
    if g.is_constant() {
        return Err(Error::Constant("g"));
    }
    let mut notes = Vec::new();
    let sqf = BiPoly::separated(f, g).squarefree_part();
    let factorization = factor_bi(&sqf)?;
    let h = decompositions(f, g);
    let factors = strip_graphs(&factorization, &h)?;
    let collision = collision_set(&factorization, false);

    let mut components: Vec<ComponentRecord> = factors
        .into_iter()
        .map(|factor| {
            let abs_factors = absolute_factor_count(&factor);
            let classification = if abs_factors >= 2 {
                Classification::SiegelFinite {
                    reason: format!("geometrically reducible ({abs_factors} absolute factors)"),
                }
            } else {
                Classification::Unclassified
            };
            ComponentRecord {
                factor,
                abs_factors,
                classification,
                provenance: Provenance::Builtin,
            }
        })
        .collect();

    let check_degree = |rec: &ComponentRecord, d_x: usize| -> Result<()> {
        if rec.factor.deg_y() != Some(d_x) {
            return Err(Error::Invariant(format!(
                "d_X = {d_x} but deg_Y = {:?} for {}",
                rec.factor.deg_y(),
                rec.factor
            )));
        }
        Ok(())
    };

    for src in detect_quadratic_sources(f, g) {
        let comp = src.component();
        let Some(rec) = components.iter_mut().find(|r| r.factor == comp) else {
            return Err(Error::Invariant(format!(
                "square-root source {src} traces no factor"
            )));
        };
        if matches!(rec.classification, Classification::Unclassified) {
            check_degree(rec, 2)?;
            rec.classification = one_infinity(2, Parametrization::Source(src))?;
        }
    }

    for rec in components.iter_mut() {
        if !matches!(rec.classification, Classification::Unclassified) {
            continue;
        }
        if let Some(cert) = x_linear_param(&rec.factor) {
            let verified = verify_certificate(f, g, &cert).map_err(|e| {
                Error::Invariant(format!("built-in parametrization rejected: {e:?}"))
            })?;
            check_degree(rec, verified.d_x)?;
            rec.classification = one_infinity(verified.d_x, Parametrization::Certificate(cert))?;
        }
    }

    for (i, cert) in certificates.iter().enumerate() {
        let label = format!(
            "certificate {} (A = {}, B = {})",
            i + 1,
            cert.a.display("t"),
            cert.b.display("t")
        );
        let verified = match verify_certificate(f, g, cert) {
            Ok(v) => v,
            Err(failures) => {
                let reasons: Vec<String> = failures.iter().map(ToString::to_string).collect();
                notes.push(format!("{label} rejected: {}", reasons.join("; ")));
                continue;
            }
        };
        match components.iter_mut().find(|r| r.factor == verified.component) {
            None => notes.push(format!("{label} verified but matches no non-graph factor")),
            Some(rec) if !matches!(rec.classification, Classification::Unclassified) => {
                notes.push(format!(
                    "{label} matches {} which is already classified {}",
                    rec.factor,
                    rec.classification.label()
                ));
            }
            Some(rec) => {
                check_degree(rec, verified.d_x)?;
                rec.classification =
                    one_infinity(verified.d_x, Parametrization::Certificate(cert.clone()))?;
                rec.provenance = Provenance::Certificate;
            }
        }
    }

    for rec in components.iter_mut() {
        if !matches!(rec.classification, Classification::Unclassified) {
            continue;
        }
        if rec.factor.total_degree() == Some(2) {
            let (points, detail) = conic_infinity(&rec.factor);
            if points == 2 {
                rec.classification = Classification::TwoInfinity { detail };
            } else {
                notes.push(format!("conic {}: {detail}, no square-root source", rec.factor));
            }
        }
    }

    let theta = components
        .iter()
        .filter(|r| r.is_active())
        .filter_map(ComponentRecord::d_x)
        .map(|d| Rational::new(1.into(), d.into()))
        .max();
    let growth = growth_class(&components, theta.as_ref());
    for rec in &components {
        if matches!(rec.classification, Classification::Unclassified) {
            notes.push(format!(
                "component {} is unclassified; supply a certificate A=..,B=.. if it is rational with one place at infinity",
                rec.factor
            ));
        }
    }
    if growth == GrowthClass::Unknown {
        notes.push("growth unknown: only the upper bound O(B^{1/2}) is certain".into());
    }
    Ok(LiftReport {
        f: f.clone(),
        g: g.clone(),
        decompositions: h,
        factorization,
        components,
        collision,
        theta,
        growth,
        notes,
    })
}

/// Unclassified factors of `Y`-degree `d` could at most contribute
/// `B^{1/d}`, so they only spoil the prediction when `1/d` beats `θ`.
fn growth_class(components: &[ComponentRecord], theta: Option<&Rational>) -> GrowthClass {
    let unclassified_max = components
        .iter()
        .filter(|r| matches!(r.classification, Classification::Unclassified))
        .map(|r| Rational::new(1.into(), r.factor.deg_y().unwrap_or(1).into()))
        .max();
    if let Some(u) = unclassified_max {
        if theta.is_none_or(|t| &u > t) {
            return GrowthClass::Unknown;
        }
    }
    if let Some(t) = theta {
        return GrowthClass::Power(t.clone());
    }
    if components
        .iter()
        .any(|r| matches!(r.classification, Classification::TwoInfinity { .. }))
    {
        GrowthClass::Polylog
    } else {
        GrowthClass::Bounded
    }
}

/// Human-readable growth prediction.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthDescriptor {
    /// Short form: `≍ B^{1/2}`, `polylog`, `O(1)` or `unknown`.
    pub summary: String,
    pub statement: String,
}

impl fmt::Display for GrowthDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary)
    }
}

pub fn growth_summary(growth: &GrowthClass) -> String {
    match growth {
        GrowthClass::Power(t) => format!("≍ B^{{{}}}", fmt_rational(t)),
        GrowthClass::Polylog => "polylog".into(),
        GrowthClass::Bounded => "O(1)".into(),
        GrowthClass::Unknown => "unknown".into(),
    }
}

pub fn predicted_growth(report: &LiftReport) -> GrowthDescriptor {
    let half = Rational::new(1.into(), 2.into());
    let has_sqrt = report
        .components
        .iter()
        .any(|r| r.is_active() && r.d_x() == Some(2));
    let summary = growth_summary(&report.growth);
    let statement = match &report.growth {
        GrowthClass::Power(t) if *t == half => {
            debug_assert!(has_sqrt);
            "square-root growth: an active one-infinity component has d_X = 2".to_string()
        }
        GrowthClass::Power(t) => format!(
            "no active component with d_X = 2, so at most B^{{1/3}}; the best active component has d_X = {}",
            t.recip()
        ),
        GrowthClass::Polylog => {
            "no active one-infinity component; two-infinity components give polylogarithmic growth, exponent not computed".into()
        }
        GrowthClass::Bounded => "every component contributes finitely many inputs".into(),
        GrowthClass::Unknown => {
            "some component is unclassified; upper bound O(B^{1/2}) only, not an order".into()
        }
    };
    GrowthDescriptor { summary, statement }
}

impl LiftReport {
    pub fn growth_descriptor(&self) -> GrowthDescriptor {
        predicted_growth(self)
    }

    /// Every non-graph factor appears once and the factorization multiplies
    /// back to the squarefree part.
    pub fn check_consistency(&self) -> Result<()> {
        let sqf = BiPoly::separated(&self.f, &self.g).squarefree_part();
        if self.factorization.expand().normalized() != sqf {
            return Err(Error::Invariant("factorization does not expand".into()));
        }
        let listed: Vec<&BiPoly> = self.components.iter().map(|r| &r.factor).collect();
        let expected: Vec<&BiPoly> = self.factorization.nongraph_factors.iter().collect();
        if listed != expected {
            return Err(Error::Invariant("component list differs from factors".into()));
        }
        if let Some(t) = &self.theta {
            if *t > Rational::new(1.into(), 2.into()) || !t.is_positive() {
                return Err(Error::Invariant(format!("theta = {} out of range", t)));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::activity::ActivityStatus;
    use crate::algebra::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn monomial(d: usize) -> UniPoly {
        UniPoly::monomial(int(1), d)
    }

    #[test]
    fn power_family() {
        for d in 2..=5 {
            let r = analyze(&p(&[0, 1]), &monomial(d), &[]).unwrap();
            r.check_consistency().unwrap();
            assert_eq!(r.components.len(), 1);
            let c = &r.components[0];
            assert_eq!(c.d_x(), Some(d));
            assert_eq!(c.activity().unwrap().witness().unwrap().0, &int(0));
            assert_eq!(r.theta, Some(rat(1, d as i64)));
            assert_eq!(r.growth, GrowthClass::Power(rat(1, d as i64)));
        }
    }

    #[test]
    fn local_obstruction() {
        let g = UniPoly::from_coeffs(vec![rat(1, 2), int(0), int(1)]);
        let r = analyze(&p(&[0, 1]), &g, &[]).unwrap();
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].d_x(), Some(2));
        let act = r.components[0].activity().unwrap();
        assert!(matches!(act.status, ActivityStatus::Inactive { .. }));
        assert_eq!(r.theta, None);
        assert_eq!(r.growth, GrowthClass::Bounded);
    }

    #[test]
    fn reducible_quartic() {
        let x4 = monomial(4);
        let r = analyze(&x4, &x4, &[]).unwrap();
        assert_eq!(r.decompositions.entries, vec![p(&[0, -1]), p(&[0, 1])]);
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].abs_factors, 2);
        assert!(matches!(
            r.components[0].classification,
            Classification::SiegelFinite { .. }
        ));
        assert_eq!(predicted_growth(&r).summary, "O(1)");
    }

    #[test]
    fn pell_conic() {
        let r = analyze(&monomial(2), &p(&[1, 0, 5]), &[]).unwrap();
        assert_eq!(r.components.len(), 1);
        assert!(matches!(
            r.components[0].classification,
            Classification::TwoInfinity { .. }
        ));
        assert_eq!(r.growth, GrowthClass::Polylog);
    }

    #[test]
    fn cusp_and_chebyshev() {
        let r = analyze(&monomial(3), &monomial(2), &[]).unwrap();
        assert_eq!(predicted_growth(&r).summary, "≍ B^{1/2}");

        let (t2, t3) = (p(&[-1, 0, 2]), p(&[0, -3, 0, 4]));
        let r = analyze(&t2, &t3, &[]).unwrap();
        assert_eq!(r.growth, GrowthClass::Unknown);
        let cert = ParamCertificate {
            a: t3.clone(),
            b: t2.clone(),
        };
        let r = analyze(&t2, &t3, &[cert]).unwrap();
        assert_eq!(r.components[0].provenance, Provenance::Certificate);
        assert_eq!(r.components[0].d_x(), Some(3));
        assert_eq!(predicted_growth(&r).summary, "≍ B^{1/3}");
    }

    #[test]
    fn bad_certificates_are_notes() {
        let cert = ParamCertificate {
            a: p(&[0, 1]),
            b: p(&[0, 1]),
        };
        let r = analyze(&p(&[0, 1]), &monomial(2), &[cert]).unwrap();
        assert_eq!(r.notes.len(), 1);
        assert!(r.notes[0].contains("rejected"));
    }
}
