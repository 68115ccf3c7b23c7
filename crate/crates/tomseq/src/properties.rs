//! Group-theoretic property classification and subgroup-order statistics.
//!
//! Five properties are tracked: abelian, cyclic, nilpotent, solvable,
//! supersolvable. They sit in an implication chain
//! cyclic ⇒ abelian ⇒ nilpotent ⇒ supersolvable ⇒ solvable,
//! which the classifier guarantees by construction and rechecks on the way
//! out. All five are closed under subgroups and conjugation, which is what
//! the maximal-property extraction in `marks` relies on.

use std::collections::HashMap;

use crate::arith::{factorize, is_prime, is_prime_power_of};
use crate::enumerate::ClassTable;
use crate::group::Group;
use crate::par;
use crate::perm::Perm;
use crate::transforms::IntSeq;

/// Property bits of one group, implication chain guaranteed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyFlags {
    pub abelian: bool,
    pub cyclic: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub supersolvable: bool,
}

impl PropertyFlags {
    pub const ALL: PropertyFlags = PropertyFlags {
        abelian: true,
        cyclic: true,
        nilpotent: true,
        solvable: true,
        supersolvable: true,
    };

    /// cyclic ⇒ abelian ⇒ nilpotent ⇒ supersolvable ⇒ solvable.
    pub fn chain_holds(&self) -> bool {
        (!self.cyclic || self.abelian)
            && (!self.abelian || self.nilpotent)
            && (!self.nilpotent || self.supersolvable)
            && (!self.supersolvable || self.solvable)
    }

    pub fn get(&self, p: Property) -> bool {
        match p {
            Property::Abelian => self.abelian,
            Property::Cyclic => self.cyclic,
            Property::Nilpotent => self.nilpotent,
            Property::Solvable => self.solvable,
            Property::Supersolvable => self.supersolvable,
        }
    }
}

/// Selector for the five shipped properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Abelian,
    Cyclic,
    Nilpotent,
    Solvable,
    Supersolvable,
}

impl Property {
    /// Column order used by the class-count tables:
    /// abelian, cyclic, nilpotent, solvable, supersolvable.
    pub const TABLE_ORDER: [Property; 5] = [
        Property::Abelian,
        Property::Cyclic,
        Property::Nilpotent,
        Property::Solvable,
        Property::Supersolvable,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Property::Abelian => "abelian",
            Property::Cyclic => "cyclic",
            Property::Nilpotent => "nilpotent",
            Property::Solvable => "solvable",
            Property::Supersolvable => "supersolvable",
        }
    }
}

/// Classifies one group. Every flag follows the standard definition:
///
/// * cyclic — some element has order `|H|`;
/// * abelian — the generators pairwise commute;
/// * nilpotent — every Sylow subgroup is normal (Sylow subgroups are built
///   by greedy p-element closure);
/// * supersolvable — recursively: trivial, or some normal subgroup of prime
///   order has a supersolvable quotient;
/// * solvable — the derived series terminates at the trivial group.
pub fn classify(h: &Group) -> PropertyFlags {
    let mut memo = HashMap::new();
    classify_memo(h, &mut memo)
}

fn classify_memo(h: &Group, supso_memo: &mut HashMap<Group, bool>) -> PropertyFlags {
    let order = h.order();
    if order == 1 {
        return PropertyFlags::ALL;
    }
    let cyclic = h.exponent_witness() == order;
    let abelian = cyclic || h.is_abelian();
    let nilpotent = abelian || is_nilpotent(h);
    let supersolvable = nilpotent || is_supersolvable(h, supso_memo);
    let solvable = supersolvable || is_solvable(h);
    let flags = PropertyFlags {
        abelian,
        cyclic,
        nilpotent,
        solvable,
        supersolvable,
    };
    debug_assert!(flags.chain_holds());
    flags
}

/// Flags for every class of a table, in table order.
pub fn classify_classes(ct: &ClassTable, parallel: bool) -> Vec<PropertyFlags> {
    par::map_indexed(&ct.classes, parallel, |c| classify(&c.representative))
}

/// Per-property class counts in table column order (abelian, cyclic,
/// nilpotent, solvable, supersolvable). `weighted` sums class lengths
/// instead of counting classes.
pub fn property_class_counts(ct: &ClassTable, flags: &[PropertyFlags], weighted: bool) -> IntSeq {
    let mut counts = [0i128; 5];
    for (class, f) in ct.classes.iter().zip(flags) {
        let w = if weighted {
            class.class_length as i128
        } else {
            1
        };
        for (slot, p) in Property::TABLE_ORDER.iter().enumerate() {
            if f.get(*p) {
                counts[slot] += w;
            }
        }
    }
    IntSeq::new(counts.to_vec()).with_name(if weighted {
        "property subgroup totals"
    } else {
        "property class counts"
    })
}

/// (number of distinct subgroup orders, number of divisors of `|G|` that are
/// not the order of any subgroup).
pub fn subgroup_order_stats(ct: &ClassTable) -> (usize, usize) {
    let orders: Vec<u64> = ct.classes.iter().map(|c| c.order).collect();
    order_stats(&orders, ct.group.order())
}

/// Same, from bare class orders plus the group order (the imported-table
/// path, where no groups are materialized).
pub fn order_stats(class_orders: &[u64], group_order: u64) -> (usize, usize) {
    let mut present: Vec<u64> = class_orders.to_vec();
    present.sort_unstable();
    present.dedup();
    let missing = crate::arith::divisors(group_order)
        .into_iter()
        .filter(|d| present.binary_search(d).is_err())
        .count();
    (present.len(), missing)
}

// ---- solvability -----------------------------------------------------------

/// Derived series by iterated commutator subgroups; solvable iff it reaches
/// the trivial group.
fn is_solvable(h: &Group) -> bool {
    let mut current = h.clone();
    loop {
        let derived = commutator_subgroup(&current);
        if derived.order() == current.order() {
            return current.is_trivial();
        }
        if derived.is_trivial() {
            return true;
        }
        current = derived;
    }
}

/// The derived subgroup: normal closure of the commutators of generator
/// pairs.
pub fn commutator_subgroup(h: &Group) -> Group {
    let gens = h.generators();
    let mut seeds: Vec<Perm> = Vec::new();
    for a in gens {
        for b in gens {
            let comm = a
                .inverse()
                .compose(&b.inverse())
                .and_then(|x| x.compose(a))
                .and_then(|x| x.compose(b))
                .expect("equal degrees");
            if !comm.is_identity() {
                seeds.push(comm);
            }
        }
    }
    normal_closure(h, seeds)
}

/// Smallest subgroup of `h` containing `seeds` and normal in `h`.
fn normal_closure(h: &Group, mut seeds: Vec<Perm>) -> Group {
    let mut group = Group::closure(&seeds, h.degree()).expect("valid degree");
    loop {
        let mut grew = false;
        let snapshot: Vec<Perm> = group.elements_iter().collect();
        for e in &snapshot {
            for g in h.generators() {
                let c = e.conjugate(g).expect("equal degrees");
                if !group.contains(&c) {
                    seeds.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return group;
        }
        group = Group::closure(&seeds, h.degree()).expect("valid degree");
    }
}

// ---- nilpotency ------------------------------------------------------------

/// Every Sylow subgroup normal.
fn is_nilpotent(h: &Group) -> bool {
    for (p, _) in factorize(h.order()) {
        let sylow = sylow_subgroup(h, p);
        if !is_normal_in(&sylow, h) {
            return false;
        }
    }
    true
}

/// A Sylow p-subgroup by greedy p-element closure: keep adjoining
/// p-elements while the closure stays a p-group. Any proper p-subgroup is
/// properly contained in the normalizer intersection of a bigger one, so the
/// greedy loop always reaches full Sylow order.
pub fn sylow_subgroup(h: &Group, p: u64) -> Group {
    let target = {
        let mut t = 1u64;
        let mut n = h.order();
        while n.is_multiple_of(p) {
            n /= p;
            t *= p;
        }
        t
    };
    let p_elements: Vec<Perm> = h
        .elements_iter()
        .filter(|e| {
            let o = e.order();
            o > 1 && is_prime_power_of(o, p)
        })
        .collect();
    let mut gens: Vec<Perm> = Vec::new();
    let mut current = Group::trivial(h.degree()).expect("valid degree");
    while current.order() < target {
        let mut advanced = false;
        for x in &p_elements {
            if current.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x.clone());
            let k = Group::closure(&trial, h.degree()).expect("valid degree");
            if is_prime_power_of(k.order(), p) {
                gens = trial;
                current = k;
                advanced = true;
                break;
            }
        }
        assert!(advanced, "greedy Sylow closure must reach the full p-part");
    }
    current
}

fn is_normal_in(n: &Group, h: &Group) -> bool {
    h.generators()
        .iter()
        .all(|g| n.conjugate_subgroup(g).expect("equal degrees") == *n)
}

/// Element-scan oracle for nilpotency: every two elements of coprime order
/// commute. Quadratic; used by tests to cross-check `is_nilpotent`.
pub fn nilpotent_coprime_commuting_oracle(h: &Group) -> bool {
    let elems: Vec<Perm> = h.elements_iter().collect();
    let orders: Vec<u64> = elems.iter().map(|e| e.order()).collect();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            if crate::arith::gcd(orders[i], orders[j]) == 1
                && elems[i].compose(&elems[j]).unwrap() != elems[j].compose(&elems[i]).unwrap()
            {
                return false;
            }
        }
    }
    true
}

// ---- supersolvability --------------------------------------------------------

/// Recursive definition: trivial, or some normal subgroup of prime order
/// whose quotient is supersolvable. (A nontrivial supersolvable group always
/// has such a subgroup: its minimal normal subgroups are chief factors,
/// hence cyclic of prime order; conversely the series lifts back.)
/// Memoized on the canonical element sequence.
fn is_supersolvable(h: &Group, memo: &mut HashMap<Group, bool>) -> bool {
    if h.is_trivial() {
        return true;
    }
    if let Some(&known) = memo.get(h) {
        return known;
    }
    let mut result = false;
    let mut seen_subs: Vec<Group> = Vec::new();
    for x in h.elements_iter() {
        if !is_prime(x.order()) {
            continue;
        }
        let n = Group::closure(&[x], h.degree()).expect("valid degree");
        if !is_normal_in(&n, h) || seen_subs.contains(&n) {
            continue;
        }
        seen_subs.push(n.clone());
        let quotient = h.coset_action(&n).expect("normal subgroup").image;
        if is_supersolvable(&quotient, memo) {
            result = true;
            break;
        }
    }
    memo.insert(h.clone(), result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::class_table;

    fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn trivial_group_has_every_property() {
        assert_eq!(classify(&Group::trivial(2).unwrap()), PropertyFlags::ALL);
    }

    #[test]
    fn a4_is_solvable_but_not_supersolvable() {
        let a4 = Group::alternating(4).unwrap();
        let f = classify(&a4);
        assert!(f.solvable);
        assert!(!f.supersolvable);
        assert!(!f.nilpotent);
        assert!(!f.abelian);
        assert!(f.chain_holds());
    }

    #[test]
    fn s4_split_by_property() {
        let ct = class_table(&Group::symmetric(4).unwrap()).unwrap();
        let flags = classify_classes(&ct, false);
        let counts = property_class_counts(&ct, &flags, false);
        assert_eq!(counts.values(), &[7, 5, 8, 11, 9]);
        let weighted = property_class_counts(&ct, &flags, true);
        assert_eq!(weighted.values(), &[21, 17, 24, 30, 28]);
    }

    #[test]
    fn trivial_table_counts() {
        let ct = class_table(&Group::trivial(1).unwrap()).unwrap();
        let flags = classify_classes(&ct, false);
        assert_eq!(
            property_class_counts(&ct, &flags, false).values(),
            &[1, 1, 1, 1, 1]
        );
    }

    #[test]
    fn a5_and_s5_are_not_solvable() {
        assert!(!classify(&Group::alternating(5).unwrap()).solvable);
        assert!(!classify(&Group::symmetric(5).unwrap()).solvable);
    }

    #[test]
    fn d8_is_nilpotent_not_cyclic() {
        let d8 = Group::closure(&[perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])], 4).unwrap();
        assert_eq!(d8.order(), 8);
        let f = classify(&d8);
        assert!(f.nilpotent && f.supersolvable && f.solvable);
        assert!(!f.abelian && !f.cyclic);
    }

    #[test]
    fn s3_is_supersolvable_not_nilpotent() {
        let s3 = Group::symmetric(3).unwrap();
        let f = classify(&s3);
        assert!(f.supersolvable && f.solvable);
        assert!(!f.nilpotent);
    }

    #[test]
    fn sylow_subgroups_of_s4() {
        let s4 = Group::symmetric(4).unwrap();
        assert_eq!(sylow_subgroup(&s4, 2).order(), 8);
        assert_eq!(sylow_subgroup(&s4, 3).order(), 3);
    }

    #[test]
    fn nilpotent_oracles_agree_up_to_s4() {
        for n in 2..=4 {
            let ct = class_table(&Group::symmetric(n).unwrap()).unwrap();
            for c in &ct.classes {
                assert_eq!(
                    is_nilpotent(&c.representative),
                    nilpotent_coprime_commuting_oracle(&c.representative),
                    "disagreement at order {}",
                    c.order
                );
            }
        }
    }

    #[test]
    fn commutator_subgroup_of_s4_is_a4() {
        let s4 = Group::symmetric(4).unwrap();
        let derived = commutator_subgroup(&s4);
        assert_eq!(derived, Group::alternating(4).unwrap());
    }

    #[test]
    fn order_statistics() {
        let ct = class_table(&Group::symmetric(4).unwrap()).unwrap();
        assert_eq!(subgroup_order_stats(&ct), (8, 0));
        let ct = class_table(&Group::alternating(4).unwrap()).unwrap();
        assert_eq!(subgroup_order_stats(&ct), (5, 1)); // no subgroup of order 6
    }

    #[test]
    fn cyclic_class_count_is_partition_count_small() {
        // p(4) = 5
        let ct = class_table(&Group::symmetric(4).unwrap()).unwrap();
        let flags = classify_classes(&ct, false);
        let cyclic = flags.iter().filter(|f| f.cyclic).count();
        assert_eq!(cyclic, 5);
    }
}
