//! Internal element representations for the group engine.
//!
//! For degree <= 16, a permutation packs into a single `u64` of 4-bit
//! nibbles, point 0 in the most significant nibble. Points beyond the
//! actual degree carry identity padding, so composition and inversion can
//! always run over all 16 nibbles without knowing the degree, and the
//! numeric order of the packed word coincides with lexicographic order on
//! the (padded) image array. The array-backed [`Perm`] stays the reference
//! representation; packing is an engine optimization only.

use std::hash::{BuildHasherDefault, Hasher};

use crate::perm::Perm;

/// Engine element: enough structure to run closures, conjugation and
/// canonical sorting generically over packed and wide permutations.
pub(crate) trait El: Clone + Eq + Ord + std::hash::Hash + Send + Sync {
    /// `(self ∘ other)(x) = self(other(x))`.
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// `self^g = g⁻¹ ∘ self ∘ g`.
    fn conj(&self, g: &Self) -> Self {
        g.inverse().compose(self).compose(g)
    }
    fn is_identity(&self) -> bool;
    fn is_even(&self) -> bool;
    fn to_perm(&self, degree: usize) -> Perm;
    fn from_perm(p: &Perm) -> Self;
}

/// Identity word: nibble i holds i.
pub(crate) const PACKED_IDENTITY: u64 = 0x0123_4567_89AB_CDEF;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct Packed(pub u64);

#[inline(always)]
fn nib(word: u64, i: u32) -> u64 {
    (word >> (60 - 4 * i)) & 0xF
}

impl El for Packed {
    #[inline]
    fn compose(&self, other: &Self) -> Self {
        let mut out = 0u64;
        for x in 0..16 {
            let ox = nib(other.0, x);
            out |= nib(self.0, ox as u32) << (60 - 4 * x);
        }
        Packed(out)
    }

    #[inline]
    fn inverse(&self) -> Self {
        let mut out = 0u64;
        for x in 0..16u64 {
            let img = nib(self.0, x as u32);
            out |= x << (60 - 4 * img as u32);
        }
        Packed(out)
    }

    #[inline]
    fn is_identity(&self) -> bool {
        self.0 == PACKED_IDENTITY
    }

    /// Identity padding adds fixed points only, so counting cycles over all
    /// 16 nibbles gives the true parity.
    fn is_even(&self) -> bool {
        let mut seen = 0u16;
        let mut cycles = 0u32;
        for start in 0..16u32 {
            if seen >> start & 1 == 1 {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while seen >> p & 1 == 0 {
                seen |= 1 << p;
                p = nib(self.0, p) as u32;
            }
        }
        (16 - cycles) % 2 == 0
    }

    fn to_perm(&self, degree: usize) -> Perm {
        let images: Vec<u16> = (0..degree).map(|x| nib(self.0, x as u32) as u16).collect();
        Perm::from_images(images).expect("packed word is a bijection")
    }

    fn from_perm(p: &Perm) -> Self {
        debug_assert!(p.degree() <= 16);
        let mut word = 0u64;
        for x in 0..16usize {
            let img = if x < p.degree() {
                p.apply(x) as u64
            } else {
                x as u64
            };
            word |= img << (60 - 4 * x as u32);
        }
        Packed(word)
    }
}

impl El for Perm {
    fn compose(&self, other: &Self) -> Self {
        Perm::compose(self, other).expect("engine elements share a degree")
    }

    fn inverse(&self) -> Self {
        Perm::inverse(self)
    }

    fn is_identity(&self) -> bool {
        Perm::is_identity(self)
    }

    fn is_even(&self) -> bool {
        Perm::is_even(self)
    }

    fn to_perm(&self, degree: usize) -> Perm {
        debug_assert_eq!(self.degree(), degree);
        self.clone()
    }

    fn from_perm(p: &Perm) -> Self {
        p.clone()
    }
}

/// Multiplicative hasher for engine hash maps. The keys are either packed
/// permutation words or short slices of them; SipHash is overkill in the
/// closure inner loop.
#[derive(Default)]
pub(crate) struct FastHasher {
    state: u64,
}

impl Hasher for FastHasher {
    #[inline]
    fn finish(&self) -> u64 {
        self.state
    }

    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.state = (self.state ^ b as u64).wrapping_mul(0x100_0000_01b3);
        }
    }

    #[inline]
    fn write_u64(&mut self, x: u64) {
        let mut h = self.state ^ x;
        h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        self.state = h ^ (h >> 31);
    }
}

pub(crate) type FastBuild = BuildHasherDefault<FastHasher>;
pub(crate) type FastMap<K, V> = std::collections::HashMap<K, V, FastBuild>;
pub(crate) type FastSet<K> = std::collections::HashSet<K, FastBuild>;
