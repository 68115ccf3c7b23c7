//! Euler transform, inverse Euler transform, and the sequence type they act
//! on.
//!
//! Two integer sequences `{c_k}` and `{m_n}` are Euler-transform partners
//! when `1 + Σ m_n x^n = Π (1 - x^k)^{-c_k}`. Either direction goes through
//! the intermediate sequence `b_n = Σ_{d|n} d·c_d = n·m_n - Σ b_k m_{n-k}`:
//!
//! * forward:  `m_n = (b_n + Σ_{k<n} b_k m_{n-k}) / n`
//! * inverse:  `c_n = (1/n) Σ_{d|n} μ(n/d) b_d`
//!
//! All arithmetic is exact in 128-bit integers with checked operations;
//! overflow is an error, never a wraparound. Sequences are 1-indexed in the
//! API to match the usual conventions (internal storage is 0-based; value
//! `k` of the sequence is `values()[k-1]`).

use crate::arith::{divisors, mobius, multiset_coefficient};
use crate::connectivity::partitions_of;
use crate::error::Error;
use crate::Result;

/// A finite integer sequence with an optional provenance label. The
/// universal output currency of the crate: reports, transforms, golden
/// comparisons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeq {
    values: Vec<i128>,
    name: Option<String>,
}

impl IntSeq {
    pub fn new(values: Vec<i128>) -> Self {
        IntSeq { values, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-indexed access; indices beyond the stored length read as 0.
    pub fn value(&self, k: usize) -> i128 {
        assert!(k >= 1, "sequences are 1-indexed");
        self.values.get(k - 1).copied().unwrap_or(0)
    }
}

impl From<Vec<i64>> for IntSeq {
    fn from(v: Vec<i64>) -> Self {
        IntSeq::new(v.into_iter().map(i128::from).collect())
    }
}

fn checked_mul(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn checked_add(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// `b_n = Σ_{d|n} d·c_d` for n = 1..=upto.
fn intermediate_from_c(c: &IntSeq, upto: usize) -> Result<Vec<i128>> {
    let mut b = vec![0i128; upto + 1];
    for n in 1..=upto {
        let mut acc = 0i128;
        for d in divisors(n as u64) {
            acc = checked_add(
                acc,
                checked_mul(d as i128, c.value(d as usize), "euler b_n")?,
                "euler b_n",
            )?;
        }
        b[n] = acc;
    }
    Ok(b)
}

/// The Euler transform of `c`, to `upto` terms. Terms of `c` beyond its
/// stored length are treated as 0.
pub fn euler_transform(c: &IntSeq, upto: usize) -> Result<IntSeq> {
    let b = intermediate_from_c(c, upto)?;
    let mut m = vec![0i128; upto + 1];
    for n in 1..=upto {
        let mut acc = b[n];
        for k in 1..n {
            acc = checked_add(acc, checked_mul(b[k], m[n - k], "euler m_n")?, "euler m_n")?;
        }
        debug_assert_eq!(
            acc % n as i128,
            0,
            "Euler transform of an integer sequence is integral"
        );
        m[n] = acc / n as i128;
    }
    Ok(IntSeq::new(m[1..].to_vec()).with_name("euler transform"))
}

/// The inverse Euler transform of `m`, to `upto` terms. Errors with the
/// first failing index when `m` is not the Euler transform of any integer
/// sequence.
pub fn inverse_euler_transform(m: &IntSeq, upto: usize) -> Result<IntSeq> {
    let mut b = vec![0i128; upto + 1];
    for n in 1..=upto {
        let mut acc = checked_mul(n as i128, m.value(n), "inverse euler b_n")?;
        for k in 1..n {
            acc = checked_add(
                acc,
                -checked_mul(b[k], m.value(n - k), "inverse euler b_n")?,
                "inverse euler b_n",
            )?;
        }
        b[n] = acc;
    }
    let mut c = vec![0i128; upto];
    for n in 1..=upto {
        let mut acc = 0i128;
        for d in divisors(n as u64) {
            let mu = mobius(n as u64 / d)? as i128;
            acc = checked_add(
                acc,
                checked_mul(mu, b[d as usize], "inverse euler c_n")?,
                "inverse euler c_n",
            )?;
        }
        if acc % n as i128 != 0 {
            return Err(Error::NonIntegerCoefficient(n));
        }
        c[n - 1] = acc / n as i128;
    }
    Ok(IntSeq::new(c).with_name("inverse euler transform"))
}

/// Number-theoretic Möbius function (re-exported here because it is part of
/// this module's public face).
pub fn mobius_fn(n: u64) -> Result<i64> {
    mobius(n)
}

/// Direct expansion of the defining product: the coefficient of `x^n` is a
/// sum over partitions `1^{a_1} … n^{a_n}` of `n` of products of multiset
/// coefficients `((c_i choose a_i))`. Independent route to the same
/// transform; the recurrence and this expansion must agree.
pub fn euler_transform_by_partitions(c: &IntSeq, upto: usize) -> Result<IntSeq> {
    let mut m = vec![0i128; upto];
    for n in 1..=upto {
        let mut total = 0i128;
        for parts in partitions_of(n as u32) {
            // multiplicity vector of the partition
            let mut mult = vec![0u64; n + 1];
            for p in parts.parts() {
                mult[*p as usize] += 1;
            }
            let mut prod = 1i128;
            for (i, &a) in mult.iter().enumerate().skip(1) {
                if a == 0 {
                    continue;
                }
                let ci = c.value(i);
                if ci < 0 {
                    return Err(Error::Format(
                        "partition expansion requires non-negative c".to_string(),
                    ));
                }
                prod = checked_mul(
                    prod,
                    multiset_coefficient(ci as u64, a)?,
                    "partition expansion",
                )?;
                if prod == 0 {
                    break;
                }
            }
            total = checked_add(total, prod, "partition expansion")?;
        }
        m[n - 1] = total;
    }
    Ok(IntSeq::new(m).with_name("euler transform (partition expansion)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> IntSeq {
        IntSeq::from(v.to_vec())
    }

    #[test]
    fn geometric_series() {
        // c = (1,0,0,...) -> m = all ones
        let m = euler_transform(&seq(&[1]), 8).unwrap();
        assert_eq!(m.values(), &[1, 1, 1, 1, 1, 1, 1, 1]);
        // and back
        let c = inverse_euler_transform(&m, 8).unwrap();
        assert_eq!(c.values(), &[1, 0, 0, 0, 0, 0, 0, 0]);
    }

    // Independent oracle: count partitions of n by brute-force descent,
    // without using the library's partition enumerator.
    fn partition_count_brute(n: u64, max_part: u64) -> i128 {
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for first in (1..=n.min(max_part)).rev() {
            total += partition_count_brute(n - first, first);
        }
        total
    }

    #[test]
    fn all_ones_gives_partition_numbers() {
        let m = euler_transform(&seq(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]), 12).unwrap();
        let expected: Vec<i128> = (1..=12).map(|n| partition_count_brute(n, n)).collect();
        assert_eq!(m.values(), &expected[..]);
        // frozen prefix
        assert_eq!(&m.values()[..6], &[1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn blue_class_prefix() {
        // the connected blue counts transform to the blue class counts
        let c = seq(&[1, 0, 1, 3, 4, 12]);
        let m = euler_transform(&c, 6).unwrap();
        assert_eq!(m.values(), &[1, 1, 2, 5, 9, 22]);
    }

    #[test]
    fn class_count_prefix_inverts() {
        let m = seq(&[1, 2, 4, 11, 19, 56]);
        let c = inverse_euler_transform(&m, 6).unwrap();
        assert_eq!(c.values(), &[1, 1, 2, 6, 6, 27]);
    }

    #[test]
    fn partition_numbers_invert_to_all_ones() {
        let m = seq(&[1, 2, 3, 5, 7, 11, 15]);
        let c = inverse_euler_transform(&m, 7).unwrap();
        assert_eq!(c.values(), &[1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn inverse_of_integer_input_is_always_integral() {
        // Every series in 1 + x·Z[[x]] factors as Π (1 - x^k)^{-c_k} with
        // integer exponents, so the integrality guard can only fire on
        // corrupted intermediate data — spot-check that odd-looking inputs
        // still pass through it.
        for m in [seq(&[1, 0, 1]), seq(&[0, 1, 0, 0]), seq(&[-2, 3, -1, 5])] {
            let n = m.len();
            let c = inverse_euler_transform(&m, n).unwrap();
            assert_eq!(euler_transform(&c, n).unwrap().values(), m.values());
        }
    }

    #[test]
    fn roundtrip_random_sequences() {
        // deterministic xorshift; 1000 sequences of length <= 20
        let mut state = 0x243F_6A88_85A3_08D3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..1000 {
            let len = (next() % 20 + 1) as usize;
            let c: Vec<i128> = (0..len).map(|_| (next() % 8) as i128).collect();
            let c = IntSeq::new(c);
            let m = euler_transform(&c, len).unwrap();
            let back = inverse_euler_transform(&m, len).unwrap();
            assert_eq!(back.values(), c.values());
        }
    }

    #[test]
    fn partition_expansion_matches_recurrence() {
        let inputs = [
            seq(&[1, 0, 1, 3, 4, 12, 12, 65, 58, 167]),
            seq(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
            seq(&[2, 0, 3, 0, 1, 4, 0, 0, 2, 1]),
        ];
        for c in &inputs {
            let by_recurrence = euler_transform(c, 10).unwrap();
            let by_partitions = euler_transform_by_partitions(c, 10).unwrap();
            assert_eq!(by_recurrence.values(), by_partitions.values());
        }
        // spot value: the blue-class prefix reaches 22 at n = 6
        assert_eq!(
            euler_transform_by_partitions(&inputs[0], 6)
                .unwrap()
                .value(6),
            22
        );
    }

    #[test]
    fn intermediate_sequence_agrees_both_ways() {
        let c = seq(&[3, 1, 4, 1, 5, 9, 2, 6]);
        let m = euler_transform(&c, 8).unwrap();
        let b_forward = intermediate_from_c(&c, 8).unwrap();
        // backward from m: b_n = n m_n - Σ b_k m_{n-k}
        let mut b_back = [0i128; 9];
        for n in 1..=8 {
            let mut acc = n as i128 * m.value(n);
            for k in 1..n {
                acc -= b_back[k] * m.value(n - k);
            }
            b_back[n] = acc;
        }
        assert_eq!(b_forward[1..], b_back[1..]);
    }

    #[test]
    fn one_indexed_access() {
        let s = seq(&[5, 7]);
        assert_eq!(s.value(1), 5);
        assert_eq!(s.value(2), 7);
        assert_eq!(s.value(3), 0);
    }
}
