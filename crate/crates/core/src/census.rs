//! Brute-force counts of integer inputs `n`, `|n| ≤ B`, having a rational
//! lift `y` with `g(y) = f(n)` that is not a graph value `h(n)`.
//!
//! Every rational root `a/b` of `g(Y) - f(n)` has `b` dividing
//! `L = den(f) · lc(num(g))`, whose primes are all bad primes of `(f, g)`.
//! For each `n` the real roots of `g(Y) = f(n)` are located in floating
//! point on the monotone pieces of `g`, and the few integers `a` near
//! `r·b` are tested exactly. Inputs whose value is close to a critical
//! value of `g`, or where floating point cannot resolve `a`, go through
//! exact rational root extraction instead.

use crate::algebra::int::{divisors_of, factorize};
use crate::algebra::{Rational, UniPoly};
use crate::decompose::DecompositionSet;
use crate::factor::rational_roots;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use std::fmt::Write as _;

/// Inputs per parallel work unit. Fixed so that results never depend on
/// the number of threads.
const CHUNK: u64 = 1 << 14;

/// Relative distance to a critical value below which exact root
/// extraction is used.
const CRITICAL_GUARD: f64 = 1e-7;

/// Largest `|r·b|` for which the nearest integer is trusted.
const FLOAT_LIMIT: f64 = (1u64 << 50) as f64;

fn to_i128_vec(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(ToPrimitive::to_i128).collect()
}

fn horner_i128(coeffs: &[i128], x: i128) -> Option<i128> {
    let mut acc: i128 = 0;
    for &c in coeffs.iter().rev() {
        acc = acc.checked_mul(x)?.checked_add(c)?;
    }
    Some(acc)
}

/// `Σ c_i a^i b^(d-i)`.
fn homog_i128(coeffs: &[i128], a: i128, b: i128) -> Option<i128> {
    let mut acc: i128 = 0;
    let mut bpow: i128 = 1;
    for &c in coeffs.iter().rev() {
        acc = acc.checked_mul(a)?.checked_add(c.checked_mul(bpow)?)?;
        bpow = bpow.checked_mul(b)?;
    }
    Some(acc)
}

fn horner_f64(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative_f64(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect()
}

/// Fujiwara's bound on the absolute values of the roots of `p - shift`.
fn root_bound(coeffs: &[f64], shift: f64) -> f64 {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].abs();
    let mut m: f64 = 0.0;
    for (i, &c) in coeffs[..n].iter().enumerate() {
        let c = if i == 0 { c - shift } else { c };
        let r = (c.abs() / lead).powf(1.0 / (n - i) as f64);
        m = m.max(if i == 0 { r * 0.5f64.powf(1.0 / n as f64) } else { r });
    }
    // slack for rounding in the roots themselves
    2.0 * m * (1.0 + 1e-9) + f64::MIN_POSITIVE
}

/// Root of `p - target` in `[lo, hi]` where the endpoint values differ in
/// sign and `p` is monotone: Newton from `guess`, safeguarded by bisection.
fn monotone_root(p: &[f64], dp: &[f64], mut lo: f64, mut hi: f64, target: f64, guess: f64) -> f64 {
    let increasing = horner_f64(p, lo) < target;
    let mut x = if guess > lo && guess < hi { guess } else { 0.5 * (lo + hi) };
    for _ in 0..200 {
        let fx = horner_f64(p, x) - target;
        if fx == 0.0 {
            return x;
        }
        if (fx < 0.0) == increasing {
            lo = x;
        } else {
            hi = x;
        }
        let d = horner_f64(dp, x);
        let newton = x - fx / d;
        let next = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= 1e-15 * x.abs() || next == lo || next == hi {
            return next;
        }
        x = next;
    }
    x
}

/// Real roots where `p` changes sign, ascending.
fn sign_change_roots(p: &[f64]) -> Vec<f64> {
    match p.len() {
        0 | 1 => Vec::new(),
        2 => vec![-p[0] / p[1]],
        _ => {
            let dp = derivative_f64(p);
            let bound = root_bound(p, 0.0);
            let mut cuts = vec![-bound];
            cuts.extend(sign_change_roots(&dp).into_iter().filter(|c| c.abs() < bound));
            cuts.push(bound);
            let mut out = Vec::new();
            for w in cuts.windows(2) {
                let (a, b) = (horner_f64(p, w[0]), horner_f64(p, w[1]));
                if a == 0.0 {
                    out.push(w[0]);
                } else if a.signum() != b.signum() && b != 0.0 {
                    out.push(monotone_root(p, &dp, w[0], w[1], 0.0, f64::NAN));
                }
            }
            if horner_f64(p, bound) == 0.0 {
                out.push(bound);
            }
            out.dedup();
            out
        }
    }
}

fn rational_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Integer data of a polynomial `P / q`.
struct IntPoly {
    den: BigInt,
    num: Vec<BigInt>,
    small: Option<(i128, Vec<i128>)>,
}

impl IntPoly {
    fn new(p: &UniPoly) -> Self {
        let (den, num) = p.to_integer_parts();
        let small = den.to_i128().zip(to_i128_vec(&num));
        IntPoly { den, num, small }
    }
}

/// Per-input lift test for a fixed pair `(f, g)`.
pub struct LiftSolver {
    f: UniPoly,
    g: UniPoly,
    fi: IntPoly,
    gi: IntPoly,
    graphs: Vec<IntPoly>,
    graph_polys: Vec<UniPoly>,
    /// Admissible lift denominators, ascending.
    denominators: Vec<BigInt>,
    small_denominators: Option<Vec<i128>>,
    g_f64: Vec<f64>,
    dg_f64: Vec<f64>,
    f_f64: Vec<f64>,
    /// Breakpoints splitting the real line into pieces where `g` is
    /// monotone (real critical points of `g`), ascending.
    critical: Vec<f64>,
    critical_values: Vec<f64>,
}

impl LiftSolver {
    pub fn new(f: &UniPoly, g: &UniPoly, h: &DecompositionSet) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::Constant("f"));
        }
        if g.is_constant() {
            return Err(Error::Constant("g"));
        }
        let fi = IntPoly::new(f);
        let gi = IntPoly::new(g);
        let l = &fi.den * gi.num.last().unwrap().abs();
        let denominators = divisors_of(&factorize(&l));
        let small_denominators = to_i128_vec(&denominators);
        let g_f64: Vec<f64> = g.coeffs().iter().map(rational_f64).collect();
        let dg_f64 = derivative_f64(&g_f64);
        let f_f64 = f.coeffs().iter().map(rational_f64).collect();
        let crit_poly = g.derivative().squarefree_part();
        let crit_f64: Vec<f64> = crit_poly.coeffs().iter().map(rational_f64).collect();
        let critical = if crit_poly.is_constant() {
            Vec::new()
        } else {
            sign_change_roots(&crit_f64)
        };
        let critical_values = critical.iter().map(|&c| horner_f64(&g_f64, c)).collect();
        Ok(LiftSolver {
            f: f.clone(),
            g: g.clone(),
            fi,
            gi,
            graphs: h.iter().map(IntPoly::new).collect(),
            graph_polys: h.entries.clone(),
            denominators,
            small_denominators,
            g_f64,
            dg_f64,
            f_f64,
            critical,
            critical_values,
        })
    }

    /// Admissible denominators of lifts.
    pub fn denominators(&self) -> &[BigInt] {
        &self.denominators
    }

    /// Whether `n` has a rational lift off every graph.
    pub fn has_new_lift(&self, n: i64) -> bool {
        match self.fast_has_new_lift(n) {
            Some(answer) => answer,
            None => self.exact_has_new_lift(n),
        }
    }

    /// Reference implementation by exact rational root extraction.
    pub fn exact_has_new_lift(&self, n: i64) -> bool {
        let x = Rational::from_integer(n.into());
        let v = self.f.eval(&x);
        let shifted = &self.g - &UniPoly::constant(v);
        rational_roots(&shifted)
            .into_iter()
            .any(|(y, _)| self.graph_polys.iter().all(|h| h.eval(&x) != y))
    }

    fn fast_has_new_lift(&self, n: i64) -> Option<bool> {
        let (fden, fnum) = self.fi.small.as_ref()?;
        let (gden, gnum) = self.gi.small.as_ref()?;
        let bs = self.small_denominators.as_ref()?;
        let v = horner_f64(&self.f_f64, n as f64);
        if !v.is_finite() {
            return None;
        }
        let scale = v.abs().max(1.0);
        if self
            .critical_values
            .iter()
            .any(|&cv| (cv - v).abs() <= CRITICAL_GUARD * scale)
        {
            return None;
        }
        // g(a/b) = f(n)  ⇔  fden · Σ gnum_i a^i b^(d-i) = gden · fnum(n) · b^d
        let rhs_n = gden.checked_mul(horner_i128(fnum, n as i128)?)?;
        let d = gnum.len() as u32 - 1;
        let graph_vals: Option<Vec<(i128, i128)>> = self
            .graphs
            .iter()
            .map(|h| {
                let (hd, hn) = h.small.as_ref()?;
                Some((horner_i128(hn, n as i128)?, *hd))
            })
            .collect();
        let graph_vals = graph_vals?;
        for r in self.real_roots(v) {
            let err = self.root_error(r, v);
            for &b in bs {
                let rb = r * b as f64;
                let tol = err * b as f64;
                if !rb.is_finite() || rb.abs() > FLOAT_LIMIT || !(tol < 0.25) {
                    return None;
                }
                let nearest = rb.round();
                if (rb - nearest).abs() > tol {
                    continue;
                }
                let rhs = rhs_n.checked_mul(b.checked_pow(d)?)?;
                let a = nearest as i128;
                if a.gcd(&b) != 1 {
                    continue;
                }
                let lhs = fden.checked_mul(homog_i128(gnum, a, b)?)?;
                if lhs != rhs {
                    continue;
                }
                // y = a/b equals a graph value hn/hd iff a·hd = b·hn
                let mut on_graph = false;
                for &(hn, hd) in &graph_vals {
                    on_graph |= a.checked_mul(hd)? == b.checked_mul(hn)?;
                }
                if !on_graph {
                    return Some(true);
                }
            }
        }
        Some(false)
    }

    /// Generous bound on `|r - y|` for the true root `y` near a computed
    /// root `r` of `g(y) = v`.
    fn root_error(&self, r: f64, v: f64) -> f64 {
        let mut scale = v.abs();
        let mut pow = 1.0;
        for c in &self.g_f64 {
            scale += c.abs() * pow;
            pow *= r.abs();
        }
        let residual = (horner_f64(&self.g_f64, r) - v).abs();
        let slope = horner_f64(&self.dg_f64, r).abs();
        16.0 * (residual + 8.0 * f64::EPSILON * scale) / slope + 16.0 * f64::EPSILON * r.abs()
    }

    /// Real solutions of `g(y) = v`, one per monotone piece at most.
    fn real_roots(&self, v: f64) -> Vec<f64> {
        // at most one root per monotone piece
        let bound = root_bound(&self.g_f64, v);
        let d = self.g_f64.len() - 1;
        let far = (v.abs() / self.g_f64[d].abs()).powf(1.0 / d as f64);
        let mut out = Vec::new();
        let inner = self.critical.iter().copied().filter(|c| c.abs() < bound);
        let mut lo = -bound;
        for hi in inner.chain(std::iter::once(bound)) {
            let w = [lo, hi];
            lo = hi;
            let (a, b) = (horner_f64(&self.g_f64, w[0]) - v, horner_f64(&self.g_f64, w[1]) - v);
            if a == 0.0 {
                out.push(w[0]);
            } else if b != 0.0 && a.signum() != b.signum() {
                let guess = if w[0] == -bound {
                    -far
                } else if w[1] == bound {
                    far
                } else {
                    f64::NAN
                };
                out.push(monotone_root(&self.g_f64, &self.dg_f64, w[0], w[1], v, guess));
            }
        }
        out
    }
}

/// `#{n : |n| ≤ B, n has a new lift}`.
pub fn new_lift_count(f: &UniPoly, g: &UniPoly, h: &DecompositionSet, b: u64) -> Result<u64> {
    Ok(census_curve(f, g, h, &[b], None)?.counts[0])
}

/// The inputs counted by [`new_lift_count`], ascending.
pub fn new_lift_inputs(f: &UniPoly, g: &UniPoly, h: &DecompositionSet, b: u64) -> Result<Vec<i64>> {
    let solver = LiftSolver::new(f, g, h)?;
    let b = to_i64(b)?;
    let mut out: Vec<i64> = (-b..=b)
        .into_par_iter()
        .filter(|&n| solver.has_new_lift(n))
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn to_i64(b: u64) -> Result<i64> {
    i64::try_from(b)
        .ok()
        .filter(|&b| b < i64::MAX / 2)
        .ok_or_else(|| Error::InvalidArgument(format!("B = {b} is too large")))
}

/// Least-squares fit of `log(count)` against `log(B)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual in log space.
    pub residual: f64,
    pub points: usize,
}

impl SlopeFit {
    pub fn agrees_with(&self, exponent: f64, tolerance: f64) -> bool {
        (self.slope - exponent).abs() <= tolerance
    }
}

pub const DEFAULT_TOLERANCE: f64 = 0.08;

/// Minimum count for a checkpoint to enter the fit.
pub const MIN_FIT_COUNT: u64 = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct CensusSeries {
    pub checkpoints: Vec<u64>,
    pub counts: Vec<u64>,
    pub fit: Option<SlopeFit>,
    pub prediction: Option<String>,
}

impl CensusSeries {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("B,count\n");
        for (b, c) in self.checkpoints.iter().zip(&self.counts) {
            writeln!(out, "{b},{c}").unwrap();
        }
        out
    }
}

/// Counts at every checkpoint, each input tested once. `threads` caps the
/// worker pool; results do not depend on it.
pub fn census_curve(
    f: &UniPoly,
    g: &UniPoly,
    h: &DecompositionSet,
    checkpoints: &[u64],
    threads: Option<usize>,
) -> Result<CensusSeries> {
    if checkpoints.is_empty() {
        return Err(Error::InvalidArgument("no checkpoints".into()));
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "checkpoints must be strictly increasing".into(),
        ));
    }
    let max_b = *checkpoints.last().unwrap();
    to_i64(max_b)?;
    let solver = LiftSolver::new(f, g, h)?;
    let bands = checkpoints.len();
    let run = || -> Vec<u64> {
        let chunks = max_b / CHUNK + 1;
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut local = vec![0u64; bands];
                let lo = c * CHUNK;
                let hi = (lo + CHUNK - 1).min(max_b);
                let mut band = checkpoints.partition_point(|&b| b < lo);
                for m in lo..=hi {
                    while checkpoints[band] < m {
                        band += 1;
                    }
                    let m = m as i64;
                    let mut hits = u64::from(solver.has_new_lift(m));
                    if m > 0 {
                        hits += u64::from(solver.has_new_lift(-m));
                    }
                    local[band] += hits;
                }
                local
            })
            .reduce(
                || vec![0u64; bands],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    };
    let per_band = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let counts: Vec<u64> = per_band
        .iter()
        .scan(0u64, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect();
    let mut series = CensusSeries {
        checkpoints: checkpoints.to_vec(),
        counts,
        fit: None,
        prediction: None,
    };
    series.fit = fit_exponent(&series).ok();
    Ok(series)
}

/// Slope of `log(count)` against `log(B)` over checkpoints with count at
/// least [`MIN_FIT_COUNT`]; needs three of them.
pub fn fit_exponent(series: &CensusSeries) -> Result<SlopeFit> {
    let pts: Vec<(f64, f64)> = series
        .checkpoints
        .iter()
        .zip(&series.counts)
        .filter(|(_, &c)| c >= MIN_FIT_COUNT)
        .map(|(&b, &c)| ((b as f64).ln(), (c as f64).ln()))
        .collect();
    if pts.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "{} checkpoint(s) with count >= {MIN_FIT_COUNT}, need 3",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = (pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum::<f64>()
        / n)
        .sqrt();
    Ok(SlopeFit {
        slope,
        intercept,
        residual,
        points: pts.len(),
    })
}

/// Checkpoints `10^lo, …, 10^hi`.
pub fn decade_checkpoints(lo: u32, hi: u32) -> Vec<u64> {
    (lo..=hi).map(|k| 10u64.pow(k)).collect()
}
