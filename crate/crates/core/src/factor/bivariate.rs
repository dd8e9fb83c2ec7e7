use super::factor_uni;
use crate::algebra::{bi_gcd, int, poly_gcd, poly_xgcd, BiPoly, Rational, UniPoly};
use crate::{Error, Result};

/// Factorization of the squarefree part of `f(X) - g(Y)`:
/// `unit · Π (Y - h_i(X)) · Π F_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiFactorization {
    pub unit: Rational,
    /// The `h_i` of the graph factors `Y - h_i(X)`, canonically sorted.
    pub graph_factors: Vec<UniPoly>,
    /// Irreducible factors of `Y`-degree at least 2, canonically normalized
    /// and sorted.
    pub nongraph_factors: Vec<BiPoly>,
}

impl BiFactorization {
    pub fn expand(&self) -> BiPoly {
        let mut acc = BiPoly::from_x(UniPoly::constant(self.unit.clone()));
        for h in &self.graph_factors {
            acc = &acc * &BiPoly::graph(h);
        }
        for f in &self.nongraph_factors {
            acc = &acc * f;
        }
        acc
    }

    /// All component factors `P_a`: graphs first, then the `F_j`.
    pub fn all_factors(&self) -> Vec<BiPoly> {
        self.graph_factors
            .iter()
            .map(BiPoly::graph)
            .chain(self.nongraph_factors.iter().cloned())
            .collect()
    }
}

/// Irreducible factorization over ℚ of a squarefree polynomial with
/// constant nonzero leading coefficient in `Y`, graph factors split off.
pub fn factor_bi(p: &BiPoly) -> Result<BiFactorization> {
    let lc = p.lc_y();
    if p.deg_y().unwrap_or(0) == 0 || !lc.is_constant() {
        return Err(Error::NonConstantLeadingCoefficient);
    }
    if bi_gcd(p, &p.derivative_y()).deg_y() != Some(0) {
        return Err(Error::NotSquarefree);
    }
    let mut graphs = Vec::new();
    let mut others = Vec::new();
    let mut lc_product = Rational::from_integer(1.into());
    for f in factor_monic_y(p) {
        if f.deg_y() == Some(1) {
            graphs.push(-&f.coeff_y(0));
        } else {
            let (_, normal) = f.normalize();
            lc_product *= normal.lc_y().lc();
            others.push(normal);
        }
    }
    graphs.sort_by(|a, b| a.cmp_canonical(b));
    others.sort_by(|a, b| a.cmp_canonical(b));
    Ok(BiFactorization {
        unit: lc.lc() / lc_product,
        graph_factors: graphs,
        nongraph_factors: others,
    })
}

/// Candidate specialization points `0, 1, -1, 2, -2, …`.
fn specialization_points() -> impl Iterator<Item = Rational> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![int(0)]
        } else {
            vec![int(k), int(-k)]
        }
    })
}

fn series_mul(a: &[UniPoly], b: &[UniPoly], len: usize) -> Vec<UniPoly> {
    let mut out = vec![UniPoly::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Lifts `Q(0, Y) = Π u_i` to `Q ≡ Π U_i (mod Z^len)` with `U_i` monic in
/// `Y` and `U_i(0, Y) = u_i`.
fn hensel_series(q: &[UniPoly], us: &[UniPoly], len: usize) -> Vec<Vec<UniPoly>> {
    let r = us.len();
    let mut s = Vec::with_capacity(r);
    for i in 0..r {
        let others = us
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != i)
            .fold(UniPoly::one(), |acc, (_, u)| &acc * u);
        let (g, a, _) = poly_xgcd(&others, &us[i]);
        debug_assert!(g == UniPoly::one());
        s.push(a.div_rem(&us[i]).1);
    }
    let mut lifted: Vec<Vec<UniPoly>> = us.iter().map(|u| vec![u.clone()]).collect();
    for j in 1..len {
        let prod = lifted
            .iter()
            .fold(vec![UniPoly::one()], |acc, u| series_mul(&acc, u, j + 1));
        let qj = q.get(j).cloned().unwrap_or_else(UniPoly::zero);
        let e = &qj - prod.get(j).unwrap_or(&UniPoly::zero());
        for i in 0..r {
            let delta = (&e * &s[i]).div_rem(&us[i]).1;
            lifted[i].push(delta);
        }
    }
    lifted
}

fn from_series(series: &[UniPoly]) -> BiPoly {
    BiPoly::from_y_coeffs(series.to_vec()).swap_xy()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors, each monic in `Y`, of a squarefree polynomial with
/// constant leading coefficient in `Y`.
pub fn factor_monic_y(p: &BiPoly) -> Vec<BiPoly> {
    let lc = p.lc_y().lc();
    let monic = p.scale(&lc.recip());
    let n = monic.deg_y().expect("nonzero input");
    if n <= 1 {
        return vec![monic];
    }
    let dx = monic.deg_x().unwrap_or(0);
    if dx == 0 {
        let y_only: UniPoly = UniPoly::from_coeffs(monic.y_coeffs().iter().map(|c| c.coeff(0)).collect());
        return factor_uni(&y_only)
            .factors
            .into_iter()
            .map(|(f, _)| BiPoly::from_y(&f.monic()))
            .collect();
    }
    let (x0, spec) = specialization_points()
        .map(|x0| {
            let u = monic.eval_x(&x0);
            (x0, u)
        })
        .find(|(_, u)| poly_gcd(u, &u.derivative()).is_constant())
        .unwrap();
    let us: Vec<UniPoly> = factor_uni(&spec)
        .factors
        .into_iter()
        .map(|(f, _)| f.monic())
        .collect();
    if us.len() == 1 {
        return vec![monic];
    }
    let shifted = monic.shift_x(&x0);
    let series_q: Vec<UniPoly> = shifted.swap_xy().y_coeffs().to_vec();
    let len = dx + 1;
    let mut lifted = hensel_series(&series_q, &us, len);
    let mut rest = shifted;
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in subsets(lifted.len(), size) {
            let series = subset
                .iter()
                .fold(vec![UniPoly::one()], |acc, &i| series_mul(&acc, &lifted[i], len));
            let cand = from_series(&series);
            if let Some(q) = rest.exact_div(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(rest);
    let back = -x0;
    found.iter().map(|f| f.shift_x(&back)).collect()
}
