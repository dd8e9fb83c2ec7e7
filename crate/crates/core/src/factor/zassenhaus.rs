//! Factorization of squarefree primitive integer polynomials: modular
//! factorization, linear Hensel lifting, exhaustive recombination.

use super::modp::{self, Fp};
use crate::algebra::int::{small_primes, symmetric_mod};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

type ZPoly = Vec<BigInt>;

fn trim(a: &mut ZPoly) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn reduce(a: &ZPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    let mut out: Fp = a
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    modp::trim(&mut out);
    out
}

fn lift(a: &Fp) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Exact division over ℤ; `None` if not exact.
fn zdiv(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    if r.len() < b.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let (f, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !f.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                r[k + i] -= &f * bc;
            }
        }
        q[k] = f;
    }
    if r[..db].iter().all(Zero::is_zero) {
        Some(q)
    } else {
        None
    }
}

fn primitive(a: &ZPoly) -> ZPoly {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

/// Coefficient bound on `lc(f)·h` for any factor `h` of `f`
/// (Landau–Mignotte with the 2-norm over-estimated by the ∞-norm).
fn factor_bound(f: &ZPoly) -> BigInt {
    let n = f.len() - 1;
    let max = f.iter().map(|c| c.abs()).max().unwrap();
    let lc = f[n].abs();
    (BigInt::one() << n) * BigInt::from(n + 1) * max * lc
}

struct Modular {
    p: u64,
    factors: Vec<Fp>,
}

/// Tries the first few admissible primes and keeps the one giving the
/// fewest modular factors.
fn choose_prime(f: &ZPoly) -> Modular {
    let lc = f.last().unwrap();
    let mut best: Option<Modular> = None;
    let mut tried = 0;
    for p in small_primes(2000).into_iter().skip(1) {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce(f, p);
        if fp.len() != f.len() || !modp::is_squarefree(&fp, p) {
            continue;
        }
        let factors = modp::factor_squarefree(&modp::monic(&fp, p), p);
        let better = best.as_ref().is_none_or(|b| factors.len() < b.factors.len());
        if better {
            best = Some(Modular { p, factors });
        }
        tried += 1;
        if tried == 4 || best.as_ref().unwrap().factors.len() == 1 {
            break;
        }
    }
    best.expect("no admissible prime below 2000")
}

/// Lifts `f ≡ lc · Π g_i (mod p)` to a factorization modulo `p^k`.
fn hensel_lift(f: &ZPoly, gs: &[Fp], p: u64, k: u32) -> Vec<ZPoly> {
    let r = gs.len();
    let lc = f.last().unwrap().clone();
    let lc_inv = modp::inv_mod(lc.mod_floor(&BigInt::from(p)).to_u64().unwrap(), p);
    // partial fractions: Σ s_i Π_{l≠i} g_l ≡ 1 (mod p)
    let mut s: Vec<Fp> = Vec::with_capacity(r);
    for i in 0..r {
        let others = gs
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != i)
            .fold(vec![1u64], |acc, (_, g)| modp::mul(&acc, g, p));
        let (_, a, _) = modp::xgcd(&others, &gs[i], p);
        s.push(modp::rem(&a, &gs[i], p));
    }
    let mut lifted: Vec<ZPoly> = gs.iter().map(lift).collect();
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let prod = lifted
            .iter()
            .fold(vec![lc.clone()], |acc, g| zmul(&acc, g));
        let n = f.len().max(prod.len());
        let mut e: ZPoly = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b) / &pj
            })
            .collect();
        trim(&mut e);
        let ep: Fp = reduce(&e, p)
            .iter()
            .map(|&c| c * lc_inv % p)
            .collect();
        for i in 0..r {
            let delta = modp::rem(&modp::mul(&ep, &s[i], p), &gs[i], p);
            let g = &mut lifted[i];
            for (d, c) in delta.iter().enumerate() {
                g[d] += &pj * BigInt::from(*c);
            }
        }
        pj *= &pb;
    }
    lifted
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

/// Irreducible factors over ℤ of a squarefree primitive polynomial with
/// positive leading coefficient and degree at least 2.
pub(crate) fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut f: ZPoly = f.to_vec();
    trim(&mut f);
    if f.len() <= 2 {
        return vec![f];
    }
    let Modular { p, factors } = choose_prime(&f);
    if factors.len() == 1 {
        return vec![f];
    }
    let bound = factor_bound(&f) * 2;
    let pb = BigInt::from(p);
    let mut k = 1;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let mut lifted = hensel_lift(&f, &factors, p, k);
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in subsets(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let cand = subset
                .iter()
                .fold(vec![lc], |acc, &i| zmul(&acc, &lifted[i]));
            let cand: ZPoly = cand.iter().map(|c| symmetric_mod(c, &modulus)).collect();
            let cand = primitive(&cand);
            if let Some(q) = zdiv(&f, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(primitive(&f));
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn splits_swinnerton_dyer_free_examples() {
        // (x^2 - 2)(x^2 - 3)(2x + 1)
        let f = zmul(&zmul(&z(&[-2, 0, 1]), &z(&[-3, 0, 1])), &z(&[1, 2]));
        let mut fs = factor_squarefree_primitive(&f);
        fs.sort();
        let mut expect = vec![z(&[-2, 0, 1]), z(&[-3, 0, 1]), z(&[1, 2])];
        expect.sort();
        assert_eq!(fs, expect);
    }

    #[test]
    fn x4_plus_1_is_irreducible() {
        // splits modulo every prime, so recombination must glue it back
        let f = z(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_squarefree_primitive(&f), vec![f]);
    }
}
