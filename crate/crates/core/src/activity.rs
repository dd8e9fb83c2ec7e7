//! Whether a parametrization's `X`-coordinate `A(t)` takes an integer value
//! at some rational `t`, decided by finitely many congruences, and the
//! arithmetic progressions of parameters on which `A` stays integral.

use crate::algebra::{fmt_rational, int as alg_int, int::divisors_of, int::factorize, int::valuation};
use crate::algebra::{is_integer, Rational, UniPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Limit on the number of partial residues kept while solving one prime
/// power congruence, and on CRT combinations.
const RESIDUE_LIMIT: usize = 1 << 20;

/// `A = P / q` and the denominator bound `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenominatorBound {
    /// Every `t = a/b` in lowest terms with `A(t) ∈ ℤ` has `b | M`.
    pub m: BigInt,
    pub q: BigInt,
    /// Integer coefficients of `P`, lowest degree first.
    pub p: Vec<BigInt>,
}

impl DenominatorBound {
    pub fn p_poly(&self) -> UniPoly {
        UniPoly::from_bigints(&self.p)
    }
}

fn degree_of(p: &[BigInt]) -> usize {
    p.len() - 1
}

pub fn denominator_bound(a: &UniPoly) -> DenominatorBound {
    assert!(!a.is_constant(), "denominator bound of a constant");
    let (mut q, mut p) = a.to_integer_parts();
    let mut content = BigInt::zero();
    for c in &p {
        content = content.gcd(c);
    }
    let shared = content.gcd(&q);
    if !shared.is_one() {
        q /= &shared;
        for c in p.iter_mut() {
            *c /= &shared;
        }
    }
    let m = degree_of(&p);
    let lead = p[m].clone();
    let mut primes: Vec<u64> = factorize(&q).into_iter().map(|(p, _)| p).collect();
    primes.extend(factorize(&lead.abs()).into_iter().map(|(p, _)| p));
    primes.sort_unstable();
    primes.dedup();
    let mut bound = BigInt::one();
    for prime in primes {
        let vm = i64::from(valuation(&lead, prime));
        // t with v_p(t) = -e makes the leading term dominate once e exceeds
        // every threshold below, and then A(t) has negative valuation
        let mut r = Rational::new((vm - i64::from(valuation(&q, prime))).into(), (m as i64).into());
        for (i, c) in p.iter().enumerate().take(m) {
            if c.is_zero() {
                continue;
            }
            let vi = i64::from(valuation(c, prime));
            let ri = Rational::new((vm - vi).into(), ((m - i) as i64).into());
            if ri > r {
                r = ri;
            }
        }
        let e = r.floor().to_integer();
        if e.is_positive() {
            bound *= num_traits::pow(BigInt::from(prime), e.to_usize().unwrap());
        }
    }
    DenominatorBound { m: bound, q, p }
}

/// Evidence that no `a` coprime to `b` satisfies `q·b^m | P_b(a)`:
/// the congruence already fails modulo `prime^exponent`.
#[derive(Clone, Debug, PartialEq)]
pub struct InactiveCheck {
    pub b: BigInt,
    pub modulus: BigInt,
    pub prime: u64,
    pub exponent: u32,
    /// Residues modulo `prime` examined at the first failing lifting step.
    pub residues_checked: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ActivityStatus {
    Active { witness: Rational, lambda: Rational },
    Inactive { checks: Vec<InactiveCheck> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ActivityResult {
    pub bound: DenominatorBound,
    pub status: ActivityStatus,
}

impl ActivityResult {
    pub fn is_active(&self) -> bool {
        matches!(self.status, ActivityStatus::Active { .. })
    }

    pub fn witness(&self) -> Option<(&Rational, &Rational)> {
        match &self.status {
            ActivityStatus::Active { witness, lambda } => Some((witness, lambda)),
            ActivityStatus::Inactive { .. } => None,
        }
    }
}

/// `P_b(a) = b^m P(a/b) = Σ p_i a^i b^(m-i)`.
fn homogenized(p: &[BigInt], a: &BigInt, b: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * a + c * &bpow;
        bpow *= b;
    }
    acc
}

enum Local {
    Solutions(Vec<BigInt>),
    Empty { residues_checked: u64 },
}

/// Residues `a mod p^k` with `p^k | P_b(a)` (and `p ∤ a` when `p | b`).
fn local_solutions(p: &[BigInt], b: &BigInt, prime: u64, k: u32) -> Result<Local> {
    let pb = BigInt::from(prime);
    let unit_needed = (b % &pb).is_zero();
    let mut sols: Vec<BigInt> = vec![BigInt::zero()];
    let mut modulus = BigInt::one();
    for j in 0..k {
        let next_mod = &modulus * &pb;
        let mut next = Vec::new();
        for s in &sols {
            for t in 0..prime {
                let cand = s + &modulus * t;
                if j == 0 && unit_needed && (&cand % &pb).is_zero() {
                    continue;
                }
                if (homogenized(p, &cand, b) % &next_mod).is_zero() {
                    next.push(cand);
                }
            }
            if next.len() > RESIDUE_LIMIT {
                return Err(Error::InvalidArgument(format!(
                    "activity congruence modulo {prime}^{k} has too many solutions"
                )));
            }
        }
        if next.is_empty() {
            return Ok(Local::Empty {
                residues_checked: sols.len() as u64 * prime,
            });
        }
        sols = next;
        modulus = next_mod;
    }
    Ok(Local::Solutions(sols))
}

/// Smallest residue in `[0, N)` assembled from per-prime-power solutions.
fn min_crt(parts: &[(BigInt, Vec<BigInt>)]) -> Result<BigInt> {
    let combos: usize = parts.iter().map(|(_, s)| s.len()).product();
    if combos > RESIDUE_LIMIT {
        return Err(Error::InvalidArgument(
            "activity congruence has too many residue combinations".into(),
        ));
    }
    let mut acc: Vec<(BigInt, BigInt)> = vec![(BigInt::zero(), BigInt::one())];
    for (m, sols) in parts {
        let mut next = Vec::with_capacity(acc.len() * sols.len());
        for (r, n) in &acc {
            // x ≡ r (mod n), x ≡ s (mod m) with gcd(n, m) = 1
            let inv = mod_inverse(&(n % m), m);
            for s in sols {
                let k = ((s - r) * &inv).mod_floor(m);
                next.push((r + n * k, n * m));
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(|(r, _)| r).min().unwrap())
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    if m.is_one() {
        return BigInt::zero();
    }
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Decides `A(ℚ) ∩ ℤ ≠ ∅`. The witness is the first `a/b` found by
/// increasing `b | M`, then least residue `a mod q·b^m`, lifted to the
/// integer of least absolute value in its class.
pub fn activity_witness(a: &UniPoly) -> Result<ActivityResult> {
    let bound = denominator_bound(a);
    let m = degree_of(&bound.p);
    let mut checks = Vec::new();
    for b in divisors_of(&factorize(&bound.m)) {
        let modulus = &bound.q * num_traits::pow(b.clone(), m);
        let mut parts = Vec::new();
        let mut failed = None;
        for (prime, k) in factorize(&modulus) {
            match local_solutions(&bound.p, &b, prime, k)? {
                Local::Solutions(s) => parts.push((num_traits::pow(BigInt::from(prime), k as usize), s)),
                Local::Empty { residues_checked } => {
                    failed = Some((prime, k, residues_checked));
                    break;
                }
            }
        }
        if let Some((prime, exponent, residues_checked)) = failed {
            checks.push(InactiveCheck {
                b,
                modulus,
                prime,
                exponent,
                residues_checked,
            });
            continue;
        }
        let r = min_crt(&parts)?;
        let lifted = if &r * 2 > modulus { r - &modulus } else { r };
        let witness = Rational::new(lifted, b);
        debug_assert!(is_integer(&a.eval(&witness)));
        let lambda = integer_coset(a, &witness)?;
        return Ok(ActivityResult {
            bound,
            status: ActivityStatus::Active { witness, lambda },
        });
    }
    Ok(ActivityResult {
        bound,
        status: ActivityStatus::Inactive { checks },
    })
}

/// Least positive integer `λ` with `c_i λ^i ∈ ℤ` for the Taylor
/// coefficients `c_i` of `A` at `t₀`; then `A(t₀ + λu) ∈ ℤ` for all `u ∈ ℤ`.
pub fn integer_coset(a: &UniPoly, t0: &Rational) -> Result<Rational> {
    let shifted = a.taylor_shift(t0);
    if !is_integer(&shifted.coeff(0)) {
        return Err(Error::InvalidArgument(format!(
            "A({}) is not an integer",
            fmt_rational(t0)
        )));
    }
    let mut need: BTreeMap<u64, u64> = BTreeMap::new();
    for (i, c) in shifted.coeffs().iter().enumerate().skip(1) {
        if c.denom().is_one() {
            continue;
        }
        for (p, e) in factorize(c.denom()) {
            let want = u64::from(e).div_ceil(i as u64);
            let slot = need.entry(p).or_insert(0);
            *slot = (*slot).max(want);
        }
    }
    let mut lambda = BigInt::one();
    for (p, e) in need {
        lambda *= num_traits::pow(BigInt::from(p), e as usize);
    }
    let lambda = Rational::from_integer(lambda);
    for u in -3..=3 {
        let t = t0 + &lambda * alg_int(u);
        if !is_integer(&a.eval(&t)) {
            return Err(Error::Invariant("integer coset spot check failed".into()));
        }
    }
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn poly(c: &[(i64, i64)]) -> UniPoly {
        UniPoly::from_coeffs(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn bounds() {
        let b = denominator_bound(&poly(&[(0, 1), (0, 1), (1, 1)]));
        assert_eq!(b.m, BigInt::one());
        let b = denominator_bound(&poly(&[(1, 2), (0, 1), (1, 1)]));
        assert_eq!((b.m.clone(), b.q.clone()), (BigInt::one(), BigInt::from(2)));
        assert_eq!(b.p, vec![BigInt::from(1), BigInt::from(0), BigInt::from(2)]);
        let b = denominator_bound(&poly(&[(0, 1), (0, 1), (1, 2)]));
        assert_eq!((b.m, b.q), (BigInt::one(), BigInt::from(2)));
        // A = 4t^2: t = 1/2 gives 1, so 2 | M
        let b = denominator_bound(&poly(&[(0, 1), (0, 1), (4, 1)]));
        assert_eq!(b.m, BigInt::from(2));
        // A = 8t^3 + t: v_2 thresholds 3/2 and 3/3 give M = 2
        let b = denominator_bound(&poly(&[(0, 1), (1, 1), (0, 1), (8, 1)]));
        assert_eq!(b.m, BigInt::from(2));
    }

    #[test]
    fn witnesses() {
        let r = activity_witness(&poly(&[(0, 1), (0, 1), (1, 1)])).unwrap();
        assert_eq!(r.witness(), Some((&alg_int(0), &alg_int(1))));

        let r = activity_witness(&poly(&[(1, 2), (0, 1), (1, 1)])).unwrap();
        assert!(!r.is_active());
        let ActivityStatus::Inactive { checks } = &r.status else { unreachable!() };
        assert_eq!(checks.len(), 1);
        assert_eq!((checks[0].prime, checks[0].exponent), (2, 1));
        assert_eq!(checks[0].modulus, BigInt::from(2));
        assert_eq!(checks[0].residues_checked, 2);

        let r = activity_witness(&poly(&[(0, 1), (0, 1), (1, 2)])).unwrap();
        assert_eq!(r.witness(), Some((&alg_int(0), &alg_int(2))));

        // A = 4t^2 + 1/3: needs t = a/2 and 3 | 3a^2 + 1, impossible
        let r = activity_witness(&poly(&[(1, 3), (0, 1), (4, 1)])).unwrap();
        assert!(!r.is_active());

        // A = 4t^2 is integral at 0; A = 2t^2 + 1/2 needs b = 2
        let r = activity_witness(&poly(&[(0, 1), (0, 1), (4, 1)])).unwrap();
        assert_eq!(r.witness().unwrap().0, &alg_int(0));
        let r = activity_witness(&poly(&[(1, 2), (0, 1), (2, 1)])).unwrap();
        assert_eq!(r.witness().unwrap().0, &rat(1, 2));
    }

    #[test]
    fn cosets() {
        let half_sq = poly(&[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(integer_coset(&half_sq, &alg_int(0)).unwrap(), alg_int(2));
        let tri = poly(&[(0, 1), (1, 2), (1, 2)]);
        assert_eq!(integer_coset(&tri, &alg_int(0)).unwrap(), alg_int(2));
        assert_eq!(
            integer_coset(&poly(&[(0, 1), (0, 1), (1, 1)]), &alg_int(0)).unwrap(),
            alg_int(1)
        );
        assert!(integer_coset(&half_sq, &alg_int(1)).is_err());
    }

    #[test]
    fn homogenization() {
        // 3 - a/b + 7(a/b)^3 times b^3
        let p: Vec<BigInt> = [3, -1, 0, 7].iter().map(|&x| BigInt::from(x)).collect();
        let (a, b) = (BigInt::from(2), BigInt::from(3));
        assert_eq!(homogenized(&p, &a, &b), BigInt::from(3 * 27 - 2 * 9 + 7 * 8));
    }
}
