//! Dense polynomials over a small prime field `F_p` and their factorization
//! (distinct-degree then Cantor–Zassenhaus equal-degree splitting).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) type Fp = Vec<u64>;

pub(crate) fn trim(a: &mut Fp) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    inv(a, p)
}

#[cfg(test)]
pub(crate) fn add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let mut out: Fp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let mut out: Fp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn div_rem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!b.is_empty(), "division by zero in F_p[x]");
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let li = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let f = r[k + db] * li % p;
        q[k] = f;
        if f != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[k + i] = (r[k + i] + p - f * bc % p) % p;
            }
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub(crate) fn rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    div_rem(a, b, p).1
}

pub(crate) fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|&c| c * li % p).collect()
        }
    }
}

pub(crate) fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Extended Euclid: `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub(crate) fn xgcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let l = inv(*r0.last().expect("xgcd of zeros"), p);
    let scale = |v: &Fp| -> Fp { v.iter().map(|&c| c * l % p).collect() };
    (scale(&r0), scale(&s0), scale(&t0))
}

pub(crate) fn derivative(a: &Fp, p: u64) -> Fp {
    let mut out: Fp = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (i as u64 % p) * c % p)
        .collect();
    trim(&mut out);
    out
}

fn powmod(base: &Fp, mut e: u128, m: &Fp, p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

pub(crate) fn is_squarefree(a: &Fp, p: u64) -> bool {
    gcd(a, &derivative(a, p), p).len() == 1
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(product of all irreducible factors of degree d, d)`.
fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            let deg = f.len() - 1;
            out.push((f.clone(), deg));
            break;
        }
        h = powmod(&h, p as u128, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    out
}

fn equal_degree(f: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
    let n = f.len() - 1;
    if n == d {
        out.push(f.clone());
        return;
    }
    loop {
        let a: Fp = {
            let mut v: Fp = (0..n).map(|_| rng.gen_range(0..p)).collect();
            trim(&mut v);
            v
        };
        if a.len() < 2 {
            continue;
        }
        // a^((p^d - 1)/2) = (a · a^p · … · a^(p^(d-1)))^((p-1)/2)
        let mut frob = rem(&a, f, p);
        let mut norm = frob.clone();
        for _ in 1..d {
            frob = powmod(&frob, p as u128, f, p);
            norm = rem(&mul(&norm, &frob, p), f, p);
        }
        let b = sub(&powmod(&norm, ((p - 1) / 2) as u128, f, p), &vec![1], p);
        let g = gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let q = div_rem(f, &g, p).0;
            equal_degree(&g, d, p, rng, out);
            equal_degree(&monic(&q, p), d, p, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial over `F_p`,
/// `p` odd. Deterministic: the splitting randomness is seeded.
pub(crate) fn factor_squarefree(f: &Fp, p: u64) -> Vec<Fp> {
    assert!(p > 2);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        equal_degree(&g, d, p, &mut rng, &mut out);
    }
    out.sort();
    out
}
