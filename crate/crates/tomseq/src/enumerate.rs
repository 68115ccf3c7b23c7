//! Exhaustive subgroup enumeration and conjugacy-class fusion.
//!
//! The algorithm is layered cyclic extension: seed with the trivial group
//! and every cyclic subgroup of prime order (found by scanning elements),
//! then repeatedly extend each known class representative `H` by an outside
//! element `x`, taking the closure `<H, x>`. Because `<H, a x b> = <H, x>`
//! for `a, b ∈ H`, it suffices to extend by one representative per double
//! coset `HxH`, and only double cosets carrying an element of prime-power
//! order matter (see [`double_coset_reps`]); together these keep the
//! closure count small. Every subgroup of the ambient group arises this
//! way: any chain from a prime-order cyclic subgroup up to `K` adds one
//! prime-power generator at a time, and extending a class representative
//! reaches, up to conjugacy, everything reachable from any member of the
//! class.
//!
//! Newly found subgroups are deduplicated by their exact sorted element
//! sequence, then fused into conjugacy classes by orbiting under the ambient
//! generators. The per-class work (closures over double-coset
//! representatives) is data-parallel; the dedup map is the single
//! synchronization point and is applied in input order, so the result is
//! identical for any thread count.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::element::{El, FastMap, Packed, PACKED_IDENTITY};
use crate::error::Error;
use crate::group::{closure_elems, conj_set, Elements, Group};
use crate::par;
use crate::perm::Perm;
use crate::Result;

/// Default cap on the order of groups we will enumerate directly
/// (the symmetric group on 7 points).
pub const DEFAULT_BUDGET: u64 = 5040;

/// Hard ceiling reachable with an explicit override (degree 8). Expect
/// minutes, not seconds, at this scale.
pub const EXTENDED_BUDGET: u64 = 40320;

/// Enumeration knobs.
#[derive(Clone, Debug)]
pub struct EnumConfig {
    /// Refuse to enumerate groups with more elements than this.
    pub max_group_order: u64,
    /// Run the per-class extension and fusion loops on rayon. Ignored when
    /// the `parallel` feature is off.
    pub parallel: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_group_order: DEFAULT_BUDGET,
            parallel: true,
        }
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Canonical representative: the lexicographically least member of the
    /// class (compared as sorted element sequences).
    pub representative: Group,
    /// Number of conjugates, `|G : N_G(rep)|`.
    pub class_length: u64,
    /// `|representative|`.
    pub order: u64,
    /// Display-only structure guess ("2^2", "D8", "A4", ...). No semantics.
    pub label: String,
    /// Position in the parent table.
    pub index: usize,
}

/// The ordered list of conjugacy classes of subgroups of a group: the
/// row and column index space of every table built on top of it.
///
/// Classes are sorted by non-decreasing order with ties broken by the
/// canonical representative comparison, so the table is identical across
/// runs and thread counts. The first class is the trivial group and the
/// last is the whole group.
#[derive(Clone, Debug)]
pub struct ClassTable {
    pub group: Group,
    pub classes: Vec<SubgroupClass>,
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Total number of subgroups: the sum of class lengths.
    pub fn total_subgroups(&self) -> u64 {
        self.classes.iter().map(|c| c.class_length).sum()
    }

    /// Index of the class containing `h`, or `None` when `h` is not a
    /// subgroup of the table's group.
    pub fn class_of(&self, h: &Group) -> Option<usize> {
        if !h.is_subgroup_of(&self.group) {
            return None;
        }
        self.classes
            .iter()
            .find(|c| {
                c.order == h.order()
                    && matches!(
                        self.group.conjugating_element(&c.representative, h),
                        Ok(Some(_))
                    )
            })
            .map(|c| c.index)
    }
}

/// Enumerate subgroup classes with the default budget.
pub fn class_table(g: &Group) -> Result<ClassTable> {
    class_table_with(g, &EnumConfig::default())
}

pub fn class_table_with(g: &Group, cfg: &EnumConfig) -> Result<ClassTable> {
    if g.order() > cfg.max_group_order {
        return Err(Error::BudgetExceeded {
            order: g.order(),
            budget: cfg.max_group_order,
        });
    }
    match &g.elements {
        Elements::Packed(elems) => {
            let recs = enumerate_classes(elems, g, cfg, Packed(PACKED_IDENTITY));
            Ok(build_table(g, recs))
        }
        Elements::Wide(elems) => {
            let recs = enumerate_classes(elems, g, cfg, Perm::identity(g.degree()));
            Ok(build_table(g, recs))
        }
    }
}

/// Every subgroup of `g`, each exactly once (trivial and `g` included),
/// sorted by order then canonical element sequence.
pub fn all_subgroups(g: &Group) -> Result<Vec<Group>> {
    all_subgroups_with(g, &EnumConfig::default())
}

pub fn all_subgroups_with(g: &Group, cfg: &EnumConfig) -> Result<Vec<Group>> {
    let table = class_table_with(g, cfg)?;
    let mut subs = class_members_of_table(&table);
    subs.sort_unstable_by(|a, b| a.order().cmp(&b.order()).then_with(|| cmp_groups(a, b)));
    Ok(subs)
}

/// Splits the classes of `Sub(S_n)/S_n` by whether the representative lies
/// in the alternating group: (blue, red) = (inside, outside).
pub fn sn_classes_of_an_subgroups(n: usize, cfg: &EnumConfig) -> Result<(usize, usize)> {
    let sn = Group::symmetric(n)?;
    let table = class_table_with(&sn, cfg)?;
    let blue = table
        .classes
        .iter()
        .filter(|c| c.representative.all_even())
        .count();
    Ok((blue, table.classes.len() - blue))
}

/// All members of every class (used by [`all_subgroups`] and the tests).
pub(crate) fn class_members_of_table(table: &ClassTable) -> Vec<Group> {
    let mut out = Vec::with_capacity(table.total_subgroups() as usize);
    for class in &table.classes {
        out.extend(class_members(&table.group, &class.representative));
    }
    out
}

/// The full conjugacy class of `h` in `g` as concrete groups.
pub fn class_members(g: &Group, h: &Group) -> Vec<Group> {
    match (&g.elements, &h.elements) {
        (Elements::Packed(_), Elements::Packed(hv)) => {
            let ggens: Vec<Packed> = g.generators().iter().map(Packed::from_perm).collect();
            let hgens: Vec<Packed> = h.generators().iter().map(Packed::from_perm).collect();
            orbit_of_set(hv, &ggens)
                .into_iter()
                .map(|(set, conj)| {
                    let gens = hgens
                        .iter()
                        .map(|e| e.conj(&conj).to_perm(g.degree()))
                        .collect();
                    Group::from_packed_parts(g.degree(), gens, set)
                })
                .collect()
        }
        (Elements::Wide(_), Elements::Wide(hv)) => {
            let ggens: Vec<Perm> = g.generators().to_vec();
            let hgens: Vec<Perm> = h.generators().to_vec();
            orbit_of_set(hv, &ggens)
                .into_iter()
                .map(|(set, conj)| {
                    let gens = hgens.iter().map(|e| El::conj(e, &conj)).collect();
                    Group::from_wide_parts(g.degree(), gens, set)
                })
                .collect()
        }
        _ => unreachable!("same degree implies same storage variant"),
    }
}

// ---- engine ----------------------------------------------------------------

struct ClassRec<E: El> {
    rep_set: Arc<[E]>,
    rep_gens: Vec<E>,
    length: u64,
}

/// Orbit of a sorted element set under conjugation by `ggens`, with the
/// conjugating element recorded per member.
fn orbit_of_set<E: El>(start: &[E], ggens: &[E]) -> Vec<(Arc<[E]>, E)> {
    let id = identity_of(start);
    let mut seen: FastMap<Arc<[E]>, ()> = FastMap::default();
    let start: Arc<[E]> = start.to_vec().into();
    seen.insert(start.clone(), ());
    let mut out: Vec<(Arc<[E]>, E)> = vec![(start, id)];
    let mut i = 0;
    while i < out.len() {
        let (set, conj) = out[i].clone();
        for g in ggens {
            let next: Arc<[E]> = conj_set(&set, g).into();
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                out.push((next, conj.compose(g)));
            }
        }
        i += 1;
    }
    out
}

fn identity_of<E: El>(sorted_set: &[E]) -> E {
    // the identity is the lexicographic minimum of any subgroup
    debug_assert!(sorted_set[0].is_identity());
    sorted_set[0].clone()
}

fn enumerate_classes<E: El>(g_elems: &[E], g: &Group, cfg: &EnumConfig, id: E) -> Vec<ClassRec<E>> {
    let ggens: Vec<E> = g.generators().iter().map(E::from_perm).collect();
    let mut pos: FastMap<E, u32> = FastMap::default();
    for (i, e) in g_elems.iter().enumerate() {
        pos.insert(e.clone(), i as u32);
    }

    let whole_group: Arc<[E]> = g_elems.to_vec().into();
    // the even elements form a subgroup of index <= 2: an even-generated
    // closure lives inside it, which tightens the give-up threshold below
    let even_part: Option<Arc<[E]>> = {
        let evens: Vec<E> = g_elems.iter().filter(|e| e.is_even()).cloned().collect();
        (evens.len() < g_elems.len()).then(|| evens.into())
    };
    let mut index: FastMap<Arc<[E]>, u32> = FastMap::default();
    let mut classes: Vec<ClassRec<E>> = Vec::new();
    let mut queue: VecDeque<u32> = VecDeque::new();

    let fuse = |key: Arc<[E]>,
                gens: Vec<E>,
                index: &mut FastMap<Arc<[E]>, u32>,
                classes: &mut Vec<ClassRec<E>>|
     -> Option<u32> {
        if index.contains_key(&key) {
            return None;
        }
        let orbit = orbit_of_set(&key, &ggens);
        let cid = classes.len() as u32;
        let mut min_idx = 0;
        for (i, (node, _)) in orbit.iter().enumerate() {
            index.insert(node.clone(), cid);
            if node < &orbit[min_idx].0 {
                min_idx = i;
            }
        }
        let (min_set, min_conj) = &orbit[min_idx];
        let rep_gens: Vec<E> = gens.iter().map(|e| e.conj(min_conj)).collect();
        classes.push(ClassRec {
            rep_set: min_set.clone(),
            rep_gens,
            length: orbit.len() as u64,
        });
        Some(cid)
    };

    // seed: trivial class
    if let Some(cid) = fuse(vec![id.clone()].into(), Vec::new(), &mut index, &mut classes) {
        queue.push_back(cid);
    }
    // seed: prime-order cyclic subgroups from the element scan; remember
    // which elements have prime-power order for the extension filter
    let mut prime_power = vec![false; g_elems.len()];
    for (i, e) in g_elems.iter().enumerate() {
        if e.is_identity() {
            continue;
        }
        let ord = element_order(e, &id);
        let primes = crate::arith::prime_divisors(ord);
        prime_power[i] = primes.len() == 1;
        for p in primes {
            let gen = power(e, ord / p, &id);
            let set = closure_elems(std::slice::from_ref(&gen), id.clone());
            if let Some(cid) = fuse(set.into(), vec![gen], &mut index, &mut classes) {
                queue.push_back(cid);
            }
        }
    }

    // extension loop over class representatives
    while let Some(cid) = queue.pop_front() {
        let rep_set = classes[cid as usize].rep_set.clone();
        let rep_gens = classes[cid as usize].rep_gens.clone();
        if rep_set.len() == g_elems.len() {
            continue; // the whole group does not extend
        }
        let rep_even = rep_gens.iter().all(|e| e.is_even());
        let dreps = double_coset_reps(g_elems, &pos, &rep_set, &rep_gens, &prime_power);
        let closures: Vec<Option<Vec<E>>> = par::map_scratch(
            &dreps,
            cfg.parallel,
            || ClosureScratch::new(g_elems.len()),
            |scratch, x| {
                let mut gens = rep_gens.clone();
                gens.push(x.clone());
                let ambient = match &even_part {
                    Some(evens) if rep_even && x.is_even() => evens.len(),
                    _ => g_elems.len(),
                };
                closure_capped(&gens, g_elems, &pos, ambient, scratch)
            },
        );
        for (x, outcome) in dreps.into_iter().zip(closures) {
            // a closure past half its ambient subgroup (the whole group, or
            // its even part when every generator is even) has index < 2
            // there and equals it
            let ambient = match &even_part {
                Some(evens) if rep_even && x.is_even() => evens.clone(),
                _ => whole_group.clone(),
            };
            let mut gens = rep_gens.clone();
            gens.push(x);
            let key = match outcome {
                Some(set) => set.into(),
                None => ambient,
            };
            if let Some(new_id) = fuse(key, gens, &mut index, &mut classes) {
                queue.push_back(new_id);
            }
        }
    }

    classes
}

/// Reusable closure workspace: element membership as an epoch-stamped array
/// over the ambient group's element indices, so nothing is reallocated or
/// cleared between closures.
struct ClosureScratch {
    stamp: Vec<u32>,
    epoch: u32,
    members: Vec<u32>,
    frontier: Vec<u32>,
}

impl ClosureScratch {
    fn new(group_size: usize) -> Self {
        ClosureScratch {
            stamp: vec![0; group_size],
            epoch: 0,
            members: Vec::new(),
            frontier: Vec::new(),
        }
    }
}

/// Product closure over group-element indices that gives up as soon as the
/// set exceeds half of `ambient_order` (the closure then fills its ambient
/// subgroup); `None` marks that outcome. The returned elements are sorted
/// because the index order is the canonical element order.
fn closure_capped<E: El>(
    gens: &[E],
    g_elems: &[E],
    pos: &FastMap<E, u32>,
    ambient_order: usize,
    scratch: &mut ClosureScratch,
) -> Option<Vec<E>> {
    let cap = ambient_order / 2;
    if scratch.epoch == u32::MAX {
        scratch.stamp.fill(0);
        scratch.epoch = 0;
    }
    scratch.epoch += 1;
    let epoch = scratch.epoch;
    scratch.members.clear();
    scratch.frontier.clear();
    // index 0 is the identity: it is the lexicographic minimum of the group
    scratch.stamp[0] = epoch;
    scratch.members.push(0);
    scratch.frontier.push(0);
    while let Some(i) = scratch.frontier.pop() {
        for g in gens {
            let y = g_elems[i as usize].compose(g);
            let yi = pos[&y];
            if scratch.stamp[yi as usize] != epoch {
                scratch.stamp[yi as usize] = epoch;
                scratch.members.push(yi);
                if scratch.members.len() > cap {
                    return None;
                }
                scratch.frontier.push(yi);
            }
        }
    }
    scratch.members.sort_unstable();
    Some(scratch.members.iter().map(|&i| g_elems[i as usize].clone()).collect())
}

/// One representative per double coset `HxH`, excluding `H` itself, in
/// ascending canonical order. Each coset is swept by a breadth-first orbit
/// under one-sided multiplication by the generators of `H`, so the cost is
/// proportional to `|G|` rather than `|H|·|G|`.
///
/// Double cosets without any prime-power-order member are dropped: every
/// subgroup is reachable through a chain that adjoins one prime-power
/// element per step (a group is generated by its prime-power elements, so a
/// maximal subgroup never contains all of them), and `<H, x>` is the same
/// group for every member `x` of a double coset.
fn double_coset_reps<E: El>(
    g_elems: &[E],
    pos: &FastMap<E, u32>,
    h_set: &[E],
    h_gens: &[E],
    prime_power: &[bool],
) -> Vec<E> {
    let mut seen = vec![false; g_elems.len()];
    for h in h_set {
        seen[pos[h] as usize] = true;
    }
    let mut reps = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    for (i, x) in g_elems.iter().enumerate() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        stack.push(i as u32);
        let mut has_prime_power = prime_power[i];
        while let Some(j) = stack.pop() {
            let e = &g_elems[j as usize];
            for gen in h_gens {
                for y in [gen.compose(e), e.compose(gen)] {
                    let yi = pos[&y] as usize;
                    if !seen[yi] {
                        seen[yi] = true;
                        has_prime_power |= prime_power[yi];
                        stack.push(yi as u32);
                    }
                }
            }
        }
        if has_prime_power {
            reps.push(x.clone());
        }
    }
    reps
}

fn element_order<E: El>(e: &E, id: &E) -> u64 {
    let mut ord = 1u64;
    let mut acc = e.clone();
    while &acc != id {
        acc = acc.compose(e);
        ord += 1;
    }
    ord
}

fn power<E: El>(e: &E, mut k: u64, id: &E) -> E {
    let mut result = id.clone();
    let mut base = e.clone();
    while k > 0 {
        if k & 1 == 1 {
            result = result.compose(&base);
        }
        base = base.compose(&base);
        k >>= 1;
    }
    result
}

fn cmp_groups(a: &Group, b: &Group) -> std::cmp::Ordering {
    match (&a.elements, &b.elements) {
        (Elements::Packed(x), Elements::Packed(y)) => x.cmp(y),
        (Elements::Wide(x), Elements::Wide(y)) => x.cmp(y),
        _ => unreachable!("same degree implies same storage variant"),
    }
}

fn build_table<E: El>(g: &Group, mut recs: Vec<ClassRec<E>>) -> ClassTable {
    recs.sort_unstable_by(|a, b| {
        a.rep_set
            .len()
            .cmp(&b.rep_set.len())
            .then_with(|| a.rep_set.cmp(&b.rep_set))
    });
    let classes = recs
        .into_iter()
        .enumerate()
        .map(|(index, rec)| {
            let rep = group_from_parts(g, &rec.rep_set, &rec.rep_gens);
            let order = rep.order();
            let label = class_label(&rep);
            SubgroupClass {
                representative: rep,
                class_length: rec.length,
                order,
                label,
                index,
            }
        })
        .collect();
    ClassTable {
        group: g.clone(),
        classes,
    }
}

fn group_from_parts<E: El>(g: &Group, set: &Arc<[E]>, gens: &[E]) -> Group {
    let degree = g.degree();
    let gen_perms: Vec<Perm> = gens.iter().map(|e| e.to_perm(degree)).collect();
    match &g.elements {
        Elements::Packed(_) => {
            let packed: Vec<Packed> = set
                .iter()
                .map(|e| Packed::from_perm(&e.to_perm(degree)))
                .collect();
            Group::from_packed_parts(degree, gen_perms, packed.into())
        }
        Elements::Wide(_) => {
            let wide: Vec<Perm> = set.iter().map(|e| e.to_perm(degree)).collect();
            Group::from_wide_parts(degree, gen_perms, wide.into())
        }
    }
}

// ---- display labels --------------------------------------------------------

/// Display-only label from cheap invariants. Equality of labels carries no
/// semantics; these exist so printed tables read like the usual ones.
fn class_label(h: &Group) -> String {
    let order = h.order();
    if order == 1 {
        return "1".to_string();
    }
    let orders = h.element_orders();
    let max_ord = *orders.iter().max().unwrap();
    if max_ord == order {
        return format!("{order}"); // cyclic
    }
    let moved: usize = {
        let mut moved = std::collections::BTreeSet::new();
        for g in h.generators() {
            moved.extend(g.support());
        }
        moved.len()
    };
    if moved >= 3 {
        if order == crate::arith::factorial(moved as u64).unwrap_or(0) {
            return format!("S{moved}");
        }
        if moved >= 4
            && h.all_even()
            && order * 2 == crate::arith::factorial(moved as u64).unwrap_or(0)
        {
            return format!("A{moved}");
        }
    }
    if h.is_abelian() {
        let factors = crate::arith::factorize(order);
        if factors.len() == 1 {
            let (p, e) = factors[0];
            if orders.iter().all(|&o| o == 1 || o == p) {
                return format!("{p}^{e}"); // elementary abelian
            }
        }
        return format!("ab{order}");
    }
    let involutions = orders.iter().filter(|&&o| o == 2).count() as u64;
    if order == 8 && involutions == 1 {
        return "Q8".to_string();
    }
    if order.is_multiple_of(2) {
        let half = order / 2;
        let expected = if half.is_multiple_of(2) {
            half + 1
        } else {
            half
        };
        if orders.contains(&half) && involutions == expected {
            return format!("D{order}");
        }
    }
    format!("G{order}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn trivial_group_has_one_class() {
        let t = class_table(&Group::trivial(3).unwrap()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.classes[0].order, 1);
        assert_eq!(t.classes[0].class_length, 1);
        assert_eq!(t.total_subgroups(), 1);
    }

    #[test]
    fn s4_has_30_subgroups_in_11_classes() {
        let s4 = Group::symmetric(4).unwrap();
        let t = class_table(&s4).unwrap();
        assert_eq!(t.len(), 11);
        assert_eq!(t.total_subgroups(), 30);
        assert_eq!(all_subgroups(&s4).unwrap().len(), 30);
        // ordering invariants
        assert_eq!(t.classes[0].order, 1);
        assert_eq!(t.classes[10].order, 24);
        assert!(t.classes.windows(2).all(|w| w[0].order <= w[1].order));
        // class lengths check against normalizers
        for c in &t.classes {
            let n = s4.normalizer_of(&c.representative).unwrap();
            assert_eq!(c.class_length, s4.order() / n.order());
        }
    }

    #[test]
    fn s5_class_and_subgroup_counts() {
        let s5 = Group::symmetric(5).unwrap();
        let t = class_table(&s5).unwrap();
        assert_eq!(t.len(), 19);
        assert_eq!(t.total_subgroups(), 156);
    }

    #[test]
    fn a5_has_9_classes() {
        let a5 = Group::alternating(5).unwrap();
        let t = class_table(&a5).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(t.total_subgroups(), 59);
    }

    #[test]
    fn budget_is_enforced_by_name() {
        let s5 = Group::symmetric(5).unwrap();
        let cfg = EnumConfig {
            max_group_order: 100,
            parallel: false,
        };
        match class_table_with(&s5, &cfg) {
            Err(Error::BudgetExceeded { order, budget }) => {
                assert_eq!(order, 120);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget refusal, got {:?}", other.map(|t| t.len())),
        }
    }

    #[test]
    fn blue_red_split() {
        let cfg = EnumConfig::default();
        assert_eq!(sn_classes_of_an_subgroups(1, &cfg).unwrap(), (1, 0));
        assert_eq!(sn_classes_of_an_subgroups(4, &cfg).unwrap(), (5, 6));
    }

    #[test]
    fn classes_are_mutually_nonconjugate_and_cover() {
        let s4 = Group::symmetric(4).unwrap();
        let t = class_table(&s4).unwrap();
        for (i, a) in t.classes.iter().enumerate() {
            for b in &t.classes[i + 1..] {
                assert!(s4
                    .conjugating_element(&a.representative, &b.representative)
                    .unwrap()
                    .is_none());
            }
        }
        // every subgroup conjugate to exactly one representative
        for sub in all_subgroups(&s4).unwrap() {
            let hits = t
                .classes
                .iter()
                .filter(|c| {
                    c.order == sub.order()
                        && s4
                            .conjugating_element(&c.representative, &sub)
                            .unwrap()
                            .is_some()
                })
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn ordering_invariant_under_generator_permutation_and_mode() {
        let gens = [perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])];
        let g1 = Group::closure(&gens, 4).unwrap();
        let g2 = Group::closure(&[gens[1].clone(), gens[0].clone()], 4).unwrap();
        let seq = EnumConfig {
            parallel: false,
            ..EnumConfig::default()
        };
        let t1 = class_table_with(&g1, &EnumConfig::default()).unwrap();
        let t2 = class_table_with(&g2, &seq).unwrap();
        assert_eq!(t1.len(), t2.len());
        for (a, b) in t1.classes.iter().zip(&t2.classes) {
            assert_eq!(a.representative, b.representative);
            assert_eq!(a.class_length, b.class_length);
        }
    }

    #[test]
    fn wide_storage_path_enumerates_too() {
        // C_6 x C_2 on 8 points, degree kept above 16 by padding the degree
        let a = perm(18, &[&[0, 1, 2, 3, 4, 5]]);
        let b = perm(18, &[&[6, 7]]);
        let g = Group::closure(&[a, b], 18).unwrap();
        assert_eq!(g.order(), 12);
        let t = class_table(&g).unwrap();
        // C6 x C2 = C2 x C2 x C3: 5 subgroups of the Klein part times 2 of
        // the C3 part, each its own class (abelian)
        assert_eq!(t.total_subgroups(), 10);
        assert_eq!(t.len(), 10);
    }

    #[test]
    fn labels_look_reasonable_for_s4() {
        let t = class_table(&Group::symmetric(4).unwrap()).unwrap();
        let labels: Vec<&str> = t.classes.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels[0], "1");
        assert!(labels.contains(&"S4"));
        assert!(labels.contains(&"A4"));
        assert!(labels.contains(&"D8"));
        assert!(labels.contains(&"2^2"));
        assert!(labels.contains(&"4"));
        assert!(labels.contains(&"S3"));
    }
}
