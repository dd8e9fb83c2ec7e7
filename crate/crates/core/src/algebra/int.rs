//! Integer helpers: exact roots, valuations, factorization of moderate
//! integers, divisor enumeration.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact non-negative `k`-th root of a non-negative integer.
pub fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Primes below `limit`, by a plain sieve.
pub fn small_primes(limit: usize) -> Vec<u64> {
    let mut sieve = vec![true; limit.max(2)];
    let mut out = Vec::new();
    for i in 2..limit {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < limit {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

/// Prime factorization of `|n|` as sorted `(prime, exponent)` pairs.
///
/// Trial division handles small primes; the cofactor must then fit in 64
/// bits, which is always the case for the denominators and leading
/// coefficients this crate factors. Panics otherwise.
pub fn factorize(n: &BigInt) -> Vec<(u64, u32)> {
    assert!(!n.is_zero(), "factorize(0)");
    let mut n = n.abs();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in small_primes(10_000) {
        let bp = BigInt::from(p);
        if (&bp * &bp) > n {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    if !n.is_one() {
        let rest = n
            .to_u64()
            .expect("integer cofactor too large to factor (exceeds 64 bits)");
        let mut ps = Vec::new();
        factor_u64(rest, &mut ps);
        ps.sort_unstable();
        for p in ps {
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some(entry) => entry.1 += 1,
                None => out.push((p, 1)),
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn prime_divisors(n: &BigInt) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of a factored integer, ascending.
pub fn divisors_of(factored: &[(u64, u32)]) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for &(p, e) in factored {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            for _ in 0..=e {
                next.push(pk.clone());
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Symmetric residue of `a` modulo `m`, in `(-m/2, m/2]`.
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn sign_of(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
