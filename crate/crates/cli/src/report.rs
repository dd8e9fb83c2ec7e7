//! Text and JSON renderings of an analysis.

use liftscope::activity::ActivityStatus;
use liftscope::algebra::fmt_rational;
use liftscope::census::CensusSeries;
use liftscope::pipeline::{Classification, ComponentRecord, LiftReport, Provenance};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Serialize)]
pub struct Input {
    pub f: String,
    pub g: String,
}

#[derive(Serialize)]
pub struct Param {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
}

#[derive(Serialize)]
pub struct Component {
    pub factor: String,
    #[serde(rename = "absFactors")]
    pub abs_factors: usize,
    pub class: String,
    #[serde(rename = "dX")]
    pub d_x: Option<usize>,
    pub active: Option<bool>,
    pub witness: Option<String>,
    pub coset: Option<String>,
    pub param: Option<Param>,
    pub provenance: String,
}

#[derive(Serialize)]
pub struct Collision {
    #[serde(rename = "R")]
    pub r: String,
    #[serde(rename = "ZR")]
    pub zr: Vec<String>,
}

#[derive(Serialize)]
pub struct Census {
    pub checkpoints: Vec<u64>,
    pub counts: Vec<u64>,
    pub slope: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
}

#[derive(Serialize)]
pub struct Report {
    pub input: Input,
    pub decompositions: Vec<String>,
    pub components: Vec<Component>,
    pub collision: Collision,
    pub theta: Option<String>,
    pub growth: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<Census>,
    pub notes: Vec<String>,
}

/// Slope verdict against the predicted exponent, when both exist.
pub fn agreement(report: &LiftReport, series: &CensusSeries, tolerance: f64) -> Option<bool> {
    let theta = report.theta.as_ref()?;
    let fit = series.fit.as_ref()?;
    Some(fit.agrees_with(theta.to_f64()?, tolerance))
}

fn component_json(c: &ComponentRecord) -> Component {
    let (witness, coset) = match c.activity().and_then(|a| a.witness()) {
        Some((t0, lambda)) => (Some(fmt_rational(t0)), Some(fmt_rational(lambda))),
        None => (None, None),
    };
    let param = match &c.classification {
        Classification::OneInfinity { param, .. } => Some(Param {
            a: param.a().display("t").to_string(),
            b: param.b().display("t").to_string(),
        }),
        _ => None,
    };
    Component {
        factor: c.factor.display("x", "y").to_string(),
        abs_factors: c.abs_factors,
        class: c.classification.label().to_string(),
        d_x: c.d_x(),
        active: c.activity().map(|a| a.is_active()),
        witness,
        coset,
        param,
        provenance: match c.provenance {
            Provenance::Builtin => "builtin".into(),
            Provenance::Certificate => "certificate".into(),
        },
    }
}

pub fn to_json(report: &LiftReport, census: Option<(&CensusSeries, f64)>) -> Report {
    Report {
        input: Input {
            f: report.f.display("x").to_string(),
            g: report.g.display("y").to_string(),
        },
        decompositions: report
            .decompositions
            .iter()
            .map(|h| h.display("x").to_string())
            .collect(),
        components: report.components.iter().map(component_json).collect(),
        collision: Collision {
            r: report.collision.r.display("x").to_string(),
            zr: report.collision.zr.iter().map(fmt_rational).collect(),
        },
        theta: report.theta.as_ref().map(fmt_rational),
        growth: report.growth_descriptor().summary,
        census: census.map(|(s, tol)| Census {
            checkpoints: s.checkpoints.clone(),
            counts: s.counts.clone(),
            slope: s.fit.as_ref().map(|f| f.slope),
            agrees: agreement(report, s, tol),
        }),
        notes: report.notes.clone(),
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap())
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::from("  ");
        for (c, cell) in row.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < cols {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

pub fn render_text(report: &LiftReport, census: Option<(&CensusSeries, f64)>) -> String {
    let mut out = String::new();
    writeln!(out, "f(x) = {}", report.f.display("x")).unwrap();
    writeln!(out, "g(y) = {}", report.g.display("y")).unwrap();
    if report.decompositions.is_empty() {
        writeln!(out, "graph components: none").unwrap();
    } else {
        let hs: Vec<String> = report
            .decompositions
            .iter()
            .map(|h| format!("y = {}", h.display("x")))
            .collect();
        writeln!(out, "graph components: {}", hs.join("; ")).unwrap();
    }
    if report.components.is_empty() {
        writeln!(out, "non-graph components: none").unwrap();
    } else {
        writeln!(out, "non-graph components:").unwrap();
        let mut rows = vec![["#", "factor", "abs", "class", "d_X", "active", "witness", "coset"]
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()];
        for (i, c) in report.components.iter().enumerate() {
            let j = component_json(c);
            rows.push(vec![
                (i + 1).to_string(),
                j.factor,
                j.abs_factors.to_string(),
                j.class,
                j.d_x.map_or("-".into(), |d| d.to_string()),
                j.active.map_or("-".into(), yes_no),
                j.witness.unwrap_or_else(|| "-".into()),
                j.coset.unwrap_or_else(|| "-".into()),
            ]);
        }
        out.push_str(&table(&rows));
        for (i, c) in report.components.iter().enumerate() {
            match &c.classification {
                Classification::OneInfinity { param, activity, .. } => {
                    writeln!(
                        out,
                        "  [{}] x = {}, y = {}  (M = {})",
                        i + 1,
                        param.a().display("t"),
                        param.b().display("t"),
                        activity.bound.m
                    )
                    .unwrap();
                    if let ActivityStatus::Inactive { checks } = &activity.status {
                        for ch in checks {
                            writeln!(
                                out,
                                "      denominator {}: no solution modulo {}^{} ({} residues checked)",
                                ch.b, ch.prime, ch.exponent, ch.residues_checked
                            )
                            .unwrap();
                        }
                    }
                }
                Classification::SiegelFinite { reason } => {
                    writeln!(out, "  [{}] {reason}", i + 1).unwrap();
                }
                Classification::TwoInfinity { detail } => {
                    writeln!(out, "  [{}] {detail}", i + 1).unwrap();
                }
                Classification::Unclassified => {}
            }
        }
    }
    let zr: Vec<String> = report.collision.zr.iter().map(fmt_rational).collect();
    writeln!(
        out,
        "collision polynomial: R(x) = {}; rational zeros: {}",
        report.collision.r.display("x"),
        if zr.is_empty() { "none".into() } else { zr.join(", ") }
    )
    .unwrap();
    writeln!(
        out,
        "theta: {}",
        report.theta.as_ref().map_or("none".into(), fmt_rational)
    )
    .unwrap();
    let growth = report.growth_descriptor();
    writeln!(out, "growth: {} ({})", growth.summary, growth.statement).unwrap();
    for note in &report.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    if let Some((series, tol)) = census {
        writeln!(out, "census:").unwrap();
        let mut rows = vec![vec!["B".to_string(), "count".to_string()]];
        for (b, c) in series.checkpoints.iter().zip(&series.counts) {
            rows.push(vec![b.to_string(), c.to_string()]);
        }
        out.push_str(&table(&rows));
        match &series.fit {
            Some(fit) => {
                write!(out, "  fitted slope {:.4} (residual {:.4}, {} points)", fit.slope, fit.residual, fit.points).unwrap();
                match agreement(report, series, tol) {
                    Some(true) => writeln!(out, "; agrees with theta within {tol}").unwrap(),
                    Some(false) => writeln!(out, "; differs from theta by more than {tol}").unwrap(),
                    None => writeln!(out).unwrap(),
                }
            }
            None => writeln!(out, "  too few checkpoints with count ≥ 5 to fit a slope").unwrap(),
        }
    }
    out
}
