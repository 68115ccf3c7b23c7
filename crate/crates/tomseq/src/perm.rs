//! Permutations of `{0..n-1}`.
//!
//! A [`Perm`] stores its image array; for degrees up to 16 the group engine
//! packs it into a single `u64` of 4-bit nibbles (see `element`), but the
//! array form remains the reference: equality and ordering are defined
//! lexicographically on the image array.
//!
//! Composition convention, used everywhere in this crate:
//! `(p ∘ q)(x) = p(q(x))` — `q` acts first. The product `pq` of group
//! elements means exactly this composition.

use std::fmt;
use std::sync::Arc;

use crate::arith::lcm;
use crate::error::Error;
use crate::Result;

/// A permutation of the points `{0..n-1}`, n fixed at construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Arc<[u16]>,
}

impl Perm {
    /// Builds a permutation from its image array. The array must be a
    /// bijection on `{0..n-1}` with `n >= 1`.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(Error::InvalidImages(format!(
                    "array of length {n} is not a bijection on 0..{n}"
                )));
            }
            seen[img] = true;
        }
        Ok(Perm {
            images: images.into(),
        })
    }

    /// The identity on `n` points.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Perm {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles, e.g.
    /// `Perm::from_cycles(4, &[&[0, 1], &[2, 3]])` for `(0 1)(2 3)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<u16> = (0..n as u16).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= n {
                    return Err(Error::InvalidImages(format!(
                        "point {pt} out of range for degree {n}"
                    )));
                }
                if touched[pt] {
                    return Err(Error::InvalidImages(format!(
                        "point {pt} appears in two cycles"
                    )));
                }
                touched[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()] as u16;
            }
        }
        Ok(Perm {
            images: images.into(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a single point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    /// `(self ∘ other)(x) = self(other(x))`: `other` acts first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let images: Vec<u16> = other
            .images
            .iter()
            .map(|&x| self.images[x as usize])
            .collect();
        Ok(Perm {
            images: images.into(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Perm {
            images: images.into(),
        }
    }

    /// Conjugate `self^g = g⁻¹ ∘ self ∘ g`.
    pub fn conjugate(&self, g: &Perm) -> Result<Perm> {
        g.inverse().compose(self)?.compose(g)
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1, |acc, l| lcm(acc, l as u64))
    }

    /// Cycle lengths including fixed points, sorted descending. This is the
    /// cycle type, a partition of the degree.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// True when the permutation is even (a product of an even number of
    /// transpositions). Parity is `degree - #cycles (mod 2)`.
    pub fn is_even(&self) -> bool {
        let cycles = self.cycle_lengths().len();
        (self.degree() - cycles).is_multiple_of(2)
    }

    /// Power `self^k` for `k >= 0`.
    pub fn pow(&self, mut k: u64) -> Perm {
        let mut result = Perm::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&base).expect("equal degrees");
            }
            base = base.compose(&base).expect("equal degrees");
            k >>= 1;
        }
        result
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&p| self.apply(p) != p).collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.apply(p);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
