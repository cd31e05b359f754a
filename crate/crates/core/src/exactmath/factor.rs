use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    /// Factorization of `n^k` given that of `n`.
    pub fn pow(&self, k: u32) -> Factorization {
        Factorization { factors: self.factors.iter().map(|&(p, e)| (p, e * k)).collect() }
    }

    /// `∏ (β + 1)` over primes `≡ 1 (mod 4)`.
    pub fn one_mod_four_divisor_product(&self) -> u64 {
        self.factors
            .iter()
            .filter(|(p, _)| p % 4 == 1)
            .map(|&(_, e)| u64::from(e) + 1)
            .product()
    }

    fn push(&mut self, p: u64, e: u32) {
        match self.factors.iter_mut().find(|(q, _)| *q == p) {
            Some(slot) => slot.1 += e,
            None => self.factors.push((p, e)),
        }
    }

    fn merge(mut self, other: Factorization) -> Factorization {
        for (p, e) in other.factors {
            self.push(p, e);
        }
        self.factors.sort_unstable();
        self
    }
}

/// Trial-division factorization. `factorize(1)` is the empty product.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut out = Factorization::default();
    let mut n = n;
    for p in [2u64, 3] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push(p, e);
        }
    }
    // candidates 6k ± 1
    let mut p = 5u64;
    let mut step = 2u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= n) {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push(p, e);
        }
        p += step;
        step = 6 - step;
    }
    if n > 1 {
        out.push(n, 1);
    }
    out
}

/// Number of trial divisors tried on an integer that does not fit in 64
/// bits before giving up.
const BIG_TRIAL_LIMIT: u64 = 10_000_000;

/// Factorization of an arbitrary-precision integer. Small prime factors are
/// divided out by trial division until the cofactor fits in a `u64`; fails
/// with [`Error::Overflow`] when a huge cofactor has no small factor.
pub fn factorize_big(n: &BigUint) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("factorize requires n >= 1".into()));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize(small));
    }
    let mut rest = n.clone();
    let mut out = Factorization::default();
    let mut p = 2u64;
    while rest.to_u64().is_none() {
        if p > BIG_TRIAL_LIMIT {
            return Err(Error::Overflow(n.to_string()));
        }
        let bp = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push(p, e);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let tail = rest.to_u64().unwrap_or(1);
    Ok(out.merge(factorize(tail)))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factorize(n);
    f.factors() == [(n, 1)]
}

/// Number of ordered pairs `(x, y) ∈ ℤ²` with `x² + y² = n`.
pub fn r2(n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let f = factorize(n);
    if f.factors().iter().any(|&(p, e)| p % 4 == 3 && e % 2 == 1) {
        return 0;
    }
    4 * f.one_mod_four_divisor_product()
}
