//! Exact integer helpers: gcd/lcm, divisors, Möbius, binomials and multiset
//! coefficients. Everything is overflow-checked; wraparound is never silent.

use crate::error::Error;
use crate::Result;

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// All divisors of `n`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(prev.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// Number-theoretic Möbius function. Errors on `n = 0`.
pub fn mobius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    })
}

/// Distinct primes dividing `n`.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// True when `n` is a power of the prime `p` (including `p^0 = 1`).
pub fn is_prime_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Multiplicative order of `k` modulo `d`; requires `gcd(k, d) = 1`.
pub fn multiplicative_order(k: u64, d: u64) -> u64 {
    assert!(d >= 1 && gcd(k, d) == 1);
    if d == 1 {
        return 1;
    }
    let mut acc = k % d;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * (k % d) % d;
        ord += 1;
    }
    ord
}

pub fn factorial(n: u64) -> Result<u64> {
    let mut acc: u64 = 1;
    for k in 2..=n {
        acc = acc.checked_mul(k).ok_or(Error::Overflow("factorial"))?;
    }
    Ok(acc)
}

/// Binomial coefficient, exact in i128.
pub fn binomial(n: u64, k: u64) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as i128)
            .ok_or(Error::Overflow("binomial"))?;
        acc /= (i + 1) as i128; // exact: product of j consecutive integers divisible by j!
    }
    Ok(acc)
}

/// Multiset coefficient ((c choose a)): the number of `a`-element multisets
/// drawn from `c` kinds, i.e. `binomial(c + a - 1, a)`.
pub fn multiset_coefficient(c: u64, a: u64) -> Result<i128> {
    if a == 0 {
        return Ok(1);
    }
    if c == 0 {
        return Ok(0);
    }
    binomial(c + a - 1, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_lcm_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(gcd(7, 0), 7);
    }

    #[test]
    fn divisors_of_24() {
        assert_eq!(divisors(24), vec![1, 2, 3, 4, 6, 8, 12, 24]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(4).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert!(mobius(0).is_err());
        // sum over divisors of 12 vanishes
        let s: i64 = divisors(12).into_iter().map(|d| mobius(d).unwrap()).sum();
        assert_eq!(s, 0);
    }

    #[test]
    fn multiset_coefficients() {
        assert_eq!(multiset_coefficient(5, 0).unwrap(), 1);
        assert_eq!(multiset_coefficient(2, 2).unwrap(), 3); // {aa, ab, bb}
        assert_eq!(multiset_coefficient(0, 3).unwrap(), 0);
        assert_eq!(multiset_coefficient(3, 2).unwrap(), 6);
    }

    #[test]
    fn factorials_and_primality() {
        assert_eq!(factorial(7).unwrap(), 5040);
        assert_eq!(factorial(13).unwrap(), 6_227_020_800);
        assert!(is_prime(2) && is_prime(7) && !is_prime(1) && !is_prime(9));
        assert!(is_prime_power_of(8, 2) && !is_prime_power_of(12, 2));
    }
}
