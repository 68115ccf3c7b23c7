//! Connected subgroups, direct-product decomposition, and connected
//! partitions.
//!
//! A permutation group `H` on `X` decomposes along a partition of `X` into
//! stable blocks on which it factors as a direct product; there is a unique
//! finest such partition, and `H` is *connected* when that partition is
//! `{X}` itself. Stable subsets are unions of orbits, so the split search
//! ranges over orbit unions only. A candidate split `(Y, X∖Y)` is a genuine
//! direct factorization iff the product of the two restriction closures has
//! the order of `H` (the restrictions are the projections, so `H` embeds in
//! their product; equal order forces equality).
//!
//! A partition of `n` is *connected* when the graph on its parts with edges
//! between non-coprime labels is connected; these count the classes of
//! connected cyclic subgroups.

use std::collections::BTreeMap;

use crate::enumerate::ClassTable;
use crate::group::Group;
use crate::par;
use crate::perm::Perm;
use crate::properties::PropertyFlags;

// ---- integer partitions ------------------------------------------------------

/// A partition of `n`: positive parts stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parity of a permutation with this cycle type: even iff
    /// `n - #parts` is even.
    pub fn is_even_cycle_type(&self) -> bool {
        (self.sum() as usize - self.len()).is_multiple_of(2)
    }

    /// Connectivity of the non-coprimality graph on the parts. A single
    /// part is connected; any part equal to 1 disconnects a multi-part
    /// partition (1 is coprime to everything).
    pub fn is_connected(&self) -> bool {
        let l = self.parts.len();
        if l <= 1 {
            return !self.parts.is_empty();
        }
        // union-find over non-coprime pairs
        let mut parent: Vec<usize> = (0..l).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..l {
            for j in (i + 1)..l {
                if crate::arith::gcd(self.parts[i] as u64, self.parts[j] as u64) > 1 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..l).all(|i| find(&mut parent, i) == root)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            descend(remaining - part, part, current, out);
            current.pop();
        }
    }
    if n >= 1 {
        descend(n, n, &mut current, &mut out);
    }
    out
}

/// Number of classes of connected cyclic subgroups of the symmetric group
/// on `n` points — one per connected partition of `n`. With `even_only` the
/// count is taken inside the alternating group instead: only even cycle
/// types qualify, and a class whose normalizer consists entirely of even
/// permutations falls apart into two alternating-group classes and counts
/// twice (see [`alternating_class_splits`]).
pub fn connected_partition_count(n: u32, even_only: bool) -> usize {
    if !even_only {
        return connected_partitions(n, false).len();
    }
    connected_partitions(n, true)
        .iter()
        .map(|p| {
            if n >= 2 && alternating_class_splits(p) {
                2
            } else {
                1
            }
        })
        .sum()
}

/// The connected partitions themselves (with `even_only`, those that are
/// cycle types of even permutations).
pub fn connected_partitions(n: u32, even_only: bool) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.is_connected() && (!even_only || p.is_even_cycle_type()))
        .collect()
}

/// Whether the cyclic subgroup generated by a permutation of cycle type
/// `lambda` has its normalizer inside the alternating group, making its
/// conjugacy class split in two there.
///
/// The normalizer is the centralizer extended by the power-map realizers
/// `σ_k : c ↦ c^k`. The centralizer avoids odd permutations only when all
/// parts are odd and pairwise distinct (an even part is an odd cycle; a
/// repeated odd part allows an odd swap of two cycles). Given that, the
/// realizer `σ_k` acts on each part `i` as multiplication by `k` on `Z_i`,
/// whose cycle count is `Σ_{d|i} φ(d) / ord_d(k)`; the class splits iff
/// every realizer is even.
pub fn alternating_class_splits(lambda: &Partition) -> bool {
    let parts = lambda.parts();
    // all parts odd and pairwise distinct, else the centralizer is odd
    if parts.iter().any(|&p| p % 2 == 0) || parts.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let m = parts
        .iter()
        .fold(1u64, |acc, &p| crate::arith::lcm(acc, p as u64));
    for k in 1..=m {
        if crate::arith::gcd(k, m) != 1 {
            continue;
        }
        let mut odd = false;
        for &part in parts {
            let i = part as u64;
            let cycles: u64 = crate::arith::divisors(i)
                .into_iter()
                .map(|d| crate::arith::euler_phi(d) / crate::arith::multiplicative_order(k % d, d))
                .sum();
            if (i - cycles) % 2 == 1 {
                odd = !odd;
            }
        }
        if odd {
            return false; // an odd permutation normalizes the subgroup
        }
    }
    true
}

// ---- direct-product decomposition ---------------------------------------------

/// The finest decomposition of a permutation group into direct factors over
/// stable blocks. Fixed points become singleton blocks with trivial factors.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Set partition of the point set; blocks sorted by smallest point.
    pub blocks: Vec<Vec<usize>>,
    /// One factor per block, acting only within its block (all factors
    /// share the original degree).
    pub factors: Vec<Group>,
}

impl Decomposition {
    /// Block sizes as a partition of the degree.
    pub fn shape(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
    }
}

/// Restriction of `p` to `points`, identity elsewhere. `points` must be
/// stable under `p`.
fn restrict(p: &Perm, points: &[usize], degree: usize) -> Perm {
    let mut images: Vec<u16> = (0..degree as u16).collect();
    for &pt in points {
        images[pt] = p.apply(pt) as u16;
    }
    Perm::from_images(images).expect("stable subset restriction is a bijection")
}

/// Tries to split `support` (a union of orbits) into two stable halves on
/// which the group factors. Returns the two restriction closures on
/// success.
fn try_split(h: &Group, orbits: &[Vec<usize>]) -> Option<(Vec<usize>, Group, Vec<usize>, Group)> {
    let k = orbits.len();
    if k < 2 {
        return None;
    }
    let degree = h.degree();
    // all proper nonempty orbit unions containing the first orbit
    for mask in 0..(1u64 << (k - 1)) {
        if mask + 1 == 1u64 << (k - 1) {
            continue; // full set: not a proper split
        }
        let mut left: Vec<usize> = orbits[0].clone();
        let mut right: Vec<usize> = Vec::new();
        for (i, orbit) in orbits.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                left.extend(orbit.iter().copied());
            } else {
                right.extend(orbit.iter().copied());
            }
        }
        let left_gens: Vec<Perm> = h
            .generators()
            .iter()
            .map(|g| restrict(g, &left, degree))
            .collect();
        let right_gens: Vec<Perm> = h
            .generators()
            .iter()
            .map(|g| restrict(g, &right, degree))
            .collect();
        let a = Group::closure(&left_gens, degree).expect("valid degree");
        let b = Group::closure(&right_gens, degree).expect("valid degree");
        if a.order() * b.order() == h.order() {
            left.sort_unstable();
            right.sort_unstable();
            return Some((left, a, right, b));
        }
    }
    None
}

/// The finest direct-product decomposition of `h` over its point set.
pub fn decompose(h: &Group) -> Decomposition {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut factors: Vec<Group> = Vec::new();
    let mut stack: Vec<(Group, Vec<Vec<usize>>)> = vec![(h.clone(), h.orbits())];
    while let Some((factor, orbits)) = stack.pop() {
        match try_split(&factor, &orbits) {
            Some((left, a, right, b)) => {
                let left_orbits: Vec<Vec<usize>> = orbits
                    .iter()
                    .filter(|o| left.contains(&o[0]))
                    .cloned()
                    .collect();
                let right_orbits: Vec<Vec<usize>> = orbits
                    .iter()
                    .filter(|o| right.contains(&o[0]))
                    .cloned()
                    .collect();
                stack.push((a, left_orbits));
                stack.push((b, right_orbits));
            }
            None => {
                let support: Vec<usize> = orbits.iter().flatten().copied().collect();
                let mut support = support;
                support.sort_unstable();
                blocks.push(support);
                factors.push(factor);
            }
        }
    }
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&i| blocks[i][0]);
    Decomposition {
        blocks: order.iter().map(|&i| blocks[i].clone()).collect(),
        factors: order.iter().map(|&i| factors[i].clone()).collect(),
    }
}

/// Connected means the finest decomposition has a single block.
pub fn is_connected(h: &Group) -> bool {
    if h.degree() == 1 {
        return true;
    }
    let orbits = h.orbits();
    if orbits.len() == 1 {
        return true; // transitive groups cannot split
    }
    decompose(h).blocks.len() == 1
}

// ---- class-level counting -------------------------------------------------------

/// Which classes of a table to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    /// Every class.
    All,
    /// Classes whose representative lies in the alternating group.
    InAlternating,
}

/// Number of classes whose representative is connected, optionally
/// restricted to representatives inside the alternating group. Connectivity
/// is a class invariant, so testing the representative suffices.
pub fn connected_class_count(ct: &ClassTable, filter: ClassFilter, parallel: bool) -> usize {
    let hits = par::map_indexed(&ct.classes, parallel, |c| {
        let keep = match filter {
            ClassFilter::All => true,
            ClassFilter::InAlternating => c.representative.all_even(),
        };
        keep && is_connected(&c.representative)
    });
    hits.into_iter().filter(|&b| b).count()
}

/// Connected-class counts per property, in table column order (abelian,
/// cyclic, nilpotent, solvable, supersolvable).
pub fn connected_property_counts(
    ct: &ClassTable,
    flags: &[PropertyFlags],
    parallel: bool,
) -> [usize; 5] {
    let connected = par::map_indexed(&ct.classes, parallel, |c| is_connected(&c.representative));
    let mut out = [0usize; 5];
    for (i, f) in flags.iter().enumerate() {
        if !connected[i] {
            continue;
        }
        for (slot, p) in crate::properties::Property::TABLE_ORDER.iter().enumerate() {
            if f.get(*p) {
                out[slot] += 1;
            }
        }
    }
    out
}

// ---- pair encoding -----------------------------------------------------------------

/// The invariant attached to a subgroup class of `S_n`: the partition of
/// `n` by block sizes together with, for each block size `i`, the multiset
/// of classes of connected subgroups of `S_i` realized by the factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairEncoding {
    pub shape: Partition,
    /// (block size, sorted class indices into the `S_i` table, one per
    /// factor of that size).
    pub components: Vec<(usize, Vec<usize>)>,
}

/// Relabels a factor supported on `block` to the points `{0..block.len()-1}`
/// (ascending point order within the block).
fn relabel_factor(factor: &Group, block: &[usize]) -> Group {
    let size = block.len();
    let position: BTreeMap<usize, usize> = block.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let gens: Vec<Perm> = factor
        .generators()
        .iter()
        .map(|g| {
            let mut images = vec![0u16; size];
            for &p in block {
                images[position[&p]] = position[&g.apply(p)] as u16;
            }
            Perm::from_images(images).expect("factor preserves its block")
        })
        .collect();
    Group::closure(&gens, size).expect("valid degree")
}

/// Computes the pair encoding of `h ≤ S_n` given class tables of `S_1..S_n`
/// (`sym_tables[i]` must be the table for degree `i + 1`).
pub fn pair_encoding(h: &Group, sym_tables: &[ClassTable]) -> PairEncoding {
    let dec = decompose(h);
    let shape = dec.shape();
    let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (block, factor) in dec.blocks.iter().zip(&dec.factors) {
        let size = block.len();
        let relabeled = relabel_factor(factor, block);
        let table = &sym_tables[size - 1];
        let class = table
            .class_of(&relabeled)
            .expect("every factor is a subgroup of the symmetric group on its block");
        by_size.entry(size).or_default().push(class);
    }
    let components = by_size
        .into_iter()
        .map(|(size, mut classes)| {
            classes.sort_unstable();
            (size, classes)
        })
        .collect();
    PairEncoding { shape, components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::class_table;

    fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn partition_enumeration_counts() {
        // p(n) for n = 1..10
        let expected = [1usize, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in (1..=10u32).zip(&expected) {
            assert_eq!(partitions_of(n).len(), e, "p({n})");
        }
        assert_eq!(partitions_of(0).len(), 0);
    }

    #[test]
    fn connected_partition_examples() {
        assert!(Partition::new(vec![13]).is_connected());
        assert!(Partition::new(vec![6, 4, 3]).is_connected());
        assert!(!Partition::new(vec![3, 2]).is_connected());
        assert!(!Partition::new(vec![3, 1]).is_connected());
        assert!(Partition::new(vec![2, 2]).is_connected());
        assert!(!Partition::new(vec![1, 1]).is_connected());
        assert!(Partition::new(vec![1]).is_connected());
    }

    #[test]
    fn connected_partitions_of_13() {
        let found = connected_partitions(13, false);
        assert_eq!(found.len(), 3);
        let strings: Vec<String> = found.iter().map(|p| p.to_string()).collect();
        assert!(strings.contains(&"[13]".to_string()));
        assert!(strings.contains(&"[6, 4, 3]".to_string()));
        assert!(strings.contains(&"[6, 3, 2, 2]".to_string()));
    }

    #[test]
    fn class_splitting_matches_real_normalizers() {
        // group-theoretic oracle: build the cyclic subgroup for each
        // connected even cycle type and check whether its normalizer in the
        // symmetric group avoids odd permutations
        for n in 2..=7u32 {
            let sym = Group::symmetric(n as usize).unwrap();
            for lambda in connected_partitions(n, true) {
                let mut cycles: Vec<Vec<usize>> = Vec::new();
                let mut next = 0usize;
                for &part in lambda.parts() {
                    cycles.push((next..next + part as usize).collect());
                    next += part as usize;
                }
                let cycle_refs: Vec<&[usize]> = cycles.iter().map(|c| &c[..]).collect();
                let c = Perm::from_cycles(n as usize, &cycle_refs).unwrap();
                let cyclic = Group::closure(std::slice::from_ref(&c), n as usize).unwrap();
                let normalizer = sym.normalizer_of(&cyclic).unwrap();
                assert_eq!(
                    normalizer.all_even(),
                    alternating_class_splits(&lambda),
                    "splitting of {lambda} at degree {n}"
                );
            }
        }
    }

    #[test]
    fn connected_partition_prefixes() {
        let all: Vec<usize> = (1..=13)
            .map(|n| connected_partition_count(n, false))
            .collect();
        assert_eq!(all, vec![1, 1, 1, 2, 1, 4, 1, 5, 3, 8, 2, 14, 3]);
        let even: Vec<usize> = (1..=13)
            .map(|n| connected_partition_count(n, true))
            .collect();
        assert_eq!(even, vec![1, 0, 1, 1, 1, 2, 1, 3, 3, 4, 2, 8, 2]);
    }

    #[test]
    fn decompose_paper_examples() {
        // <(0 1), (2 3)> splits; <(0 1)(2 3)> does not
        let split = Group::closure(&[perm(4, &[&[0, 1]]), perm(4, &[&[2, 3]])], 4).unwrap();
        let dec = decompose(&split);
        assert_eq!(dec.blocks, vec![vec![0, 1], vec![2, 3]]);
        assert!(!is_connected(&split));

        let joined = Group::closure(&[perm(4, &[&[0, 1], &[2, 3]])], 4).unwrap();
        assert!(is_connected(&joined));
        assert_eq!(decompose(&joined).blocks, vec![vec![0, 1, 2, 3]]);

        let trivial = Group::trivial(3).unwrap();
        assert_eq!(decompose(&trivial).blocks, vec![vec![0], vec![1], vec![2]]);
        assert!(!is_connected(&trivial));
    }

    #[test]
    fn decomposition_reconstructs_and_is_idempotent() {
        let h = Group::closure(
            &[
                perm(6, &[&[0, 1]]),
                perm(6, &[&[2, 3, 4]]),
                perm(6, &[&[2, 3]]),
            ],
            6,
        )
        .unwrap(); // S2 x S3 with a fixed point
        let dec = decompose(&h);
        assert_eq!(dec.blocks, vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
        // product of factors reproduces the group
        let mut gens: Vec<Perm> = Vec::new();
        for f in &dec.factors {
            gens.extend(f.generators().iter().cloned());
        }
        assert_eq!(Group::closure(&gens, 6).unwrap(), h);
        // factors are atomic
        for (block, factor) in dec.blocks.iter().zip(&dec.factors) {
            let sub = decompose(factor);
            let nontrivial: Vec<&Vec<usize>> = sub
                .blocks
                .iter()
                .filter(|b| b.len() > 1 || block.len() == 1)
                .collect();
            if block.len() > 1 {
                assert_eq!(nontrivial.len(), 1);
                assert_eq!(nontrivial[0], block);
            }
        }
    }

    #[test]
    fn connected_classes_of_s4() {
        let ct = class_table(&Group::symmetric(4).unwrap()).unwrap();
        assert_eq!(connected_class_count(&ct, ClassFilter::All, false), 6);
        assert_eq!(
            connected_class_count(&ct, ClassFilter::InAlternating, false),
            3
        );
    }

    #[test]
    fn pair_encodings_are_class_invariants_and_distinct() {
        let tables: Vec<ClassTable> = (1..=4)
            .map(|n| class_table(&Group::symmetric(n).unwrap()).unwrap())
            .collect();
        let s4 = &tables[3];
        let mut encodings = std::collections::BTreeSet::new();
        for class in &s4.classes {
            encodings.insert(pair_encoding(&class.representative, &tables));
        }
        assert_eq!(encodings.len(), 11);

        // forced example: <(0 1), (2 3)> has shape [2, 2] with both factors
        // in the nontrivial class of S_2
        let split = Group::closure(&[perm(4, &[&[0, 1]]), perm(4, &[&[2, 3]])], 4).unwrap();
        let enc = pair_encoding(&split, &tables);
        assert_eq!(enc.shape, Partition::new(vec![2, 2]));
        assert_eq!(enc.components, vec![(2, vec![1, 1])]);

        // trivial group: shape [1, 1, 1, 1]
        let triv = Group::trivial(4).unwrap();
        let enc = pair_encoding(&triv, &tables);
        assert_eq!(enc.shape, Partition::new(vec![1, 1, 1, 1]));
    }
}
