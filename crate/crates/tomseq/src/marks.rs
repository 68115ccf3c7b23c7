//! Tables of marks and everything read off them.
//!
//! For subgroups `H, K ≤ G`, the mark `β_{G/H}(K)` is the number of right
//! cosets of `H` fixed by every element of `K` in the natural action of `G`;
//! equivalently `|N_G(H):H|` times the number of conjugates of `H`
//! containing `K`. Over the canonical class order the matrix
//! `M(G) = (β_{G/H_i}(H_j))` is lower triangular, its first column holds the
//! indices `|G:H_i|`, its diagonal the normalizer indices `|N_G(H_i):H_i|`,
//! and each diagonal entry divides every entry of its row.
//!
//! Dividing each row by its diagonal yields the containment matrix, whose
//! `(i, j)` entry counts the conjugates of `H_i` containing `H_j`; its 0/1
//! shadow is the incidence matrix of the subconjugacy partial order.
//! Maximal subgroups, Hasse-diagram edge counts (both for the class poset
//! and the full subgroup lattice), and maximal property-P classes all come
//! from these matrices with no further group computation, which is how
//! externally supplied tables plug in (see [`crate::tomtext`]).
//!
//! A [`MarksTable`] deliberately stores only class metadata (order, length,
//! label) next to the matrix, not the groups: an imported table has no
//! groups to offer, and none of the derived quantities need them.

use std::sync::Arc;

use crate::element::{El, Packed};
use crate::enumerate::{class_members, ClassTable};
use crate::error::Error;
use crate::group::{Elements, Group};
use crate::par;
use crate::perm::Perm;
use crate::properties::{Property, PropertyFlags};
use crate::tomtext::TomError;
use crate::Result;

/// Per-class metadata carried alongside the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub order: u64,
    pub length: u64,
    pub label: String,
}

/// A table of marks over an ordered list of subgroup classes.
///
/// Rows are stored sparsely as `(column, value)` pairs sorted by column;
/// entries are 64-bit, all derived accumulations run in 128-bit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarksTable {
    name: String,
    group_order: u64,
    classes: Vec<ClassInfo>,
    rows: Vec<Vec<(u32, i64)>>,
}

/// Containment matrix (marks over their diagonal) plus its 0/1 shadow, the
/// incidence matrix of the class poset. Entry `(i, j)` of the containment
/// matrix counts conjugates of the row class `H_i` that contain the column
/// class `H_j`.
#[derive(Clone, Debug)]
pub struct DerivedMatrices {
    size: usize,
    containment: Vec<Vec<(u32, i64)>>,
}

impl MarksTable {
    /// Builds `M(G)` from an enumerated class table. Marks are computed by
    /// the conjugate-scan formula: `β_{G/H_i}(H_j) = |N(H_i):H_i| · #{H_i^x ⊇ H_j}`,
    /// with rows running in parallel when asked.
    pub fn from_class_table(ct: &ClassTable, parallel: bool) -> MarksTable {
        let group_order = ct.group.order();
        let classes: Vec<ClassInfo> = ct
            .classes
            .iter()
            .map(|c| ClassInfo {
                order: c.order,
                length: c.class_length,
                label: c.label.clone(),
            })
            .collect();
        let rows = match &ct.group.elements {
            Elements::Packed(_) => marks_rows::<Packed>(ct, &classes, group_order, parallel),
            Elements::Wide(_) => marks_rows::<Perm>(ct, &classes, group_order, parallel),
        };
        let name = format!("G{group_order}");
        let table = MarksTable {
            name,
            group_order,
            classes,
            rows,
        };
        debug_assert!(table.validate().is_ok());
        table
    }

    /// Assembles a table from parsed parts, enforcing every structural
    /// invariant. This is the import path.
    pub fn from_raw(
        name: String,
        classes: Vec<ClassInfo>,
        dense_rows: Vec<Vec<i64>>,
    ) -> std::result::Result<MarksTable, TomError> {
        let r = classes.len();
        if r == 0 || dense_rows.len() != r {
            return Err(TomError::CountMismatch {
                expected: r,
                found: dense_rows.len(),
            });
        }
        let mut rows = Vec::with_capacity(r);
        for (i, dense) in dense_rows.into_iter().enumerate() {
            if dense.len() != i + 1 {
                return Err(TomError::NotLowerTriangular { row: i + 1 });
            }
            let mut row = Vec::new();
            for (j, v) in dense.into_iter().enumerate() {
                if v < 0 {
                    return Err(TomError::NegativeEntry {
                        row: i + 1,
                        col: j + 1,
                    });
                }
                if v != 0 {
                    row.push((j as u32, v));
                }
            }
            rows.push(row);
        }
        let group_order = rows[0].first().map(|&(_, v)| v as u64).unwrap_or(0);
        let table = MarksTable {
            name,
            group_order,
            classes,
            rows,
        };
        table.validate()?;
        Ok(table)
    }

    /// Structural invariants, each failure named. Also used as a debug
    /// check on freshly computed tables.
    pub fn validate(&self) -> std::result::Result<(), TomError> {
        let r = self.classes.len();
        if r == 0 || self.rows.len() != r {
            return Err(TomError::CountMismatch {
                expected: r,
                found: self.rows.len(),
            });
        }
        if self.classes[0].order != 1 {
            return Err(TomError::TrivialFirstClass);
        }
        if self.classes[r - 1].order != self.group_order {
            return Err(TomError::WholeGroupLast);
        }
        for i in 1..r {
            if self.classes[i].order < self.classes[i - 1].order {
                return Err(TomError::OrderSort { row: i + 1 });
            }
        }
        for i in 0..r {
            for &(j, v) in &self.rows[i] {
                if j as usize > i {
                    return Err(TomError::NotLowerTriangular { row: i + 1 });
                }
                debug_assert!(v > 0);
            }
            let diag = self.beta(i, i);
            if diag <= 0 {
                return Err(TomError::ZeroDiagonal { row: i + 1 });
            }
            let order = self.classes[i].order;
            if order == 0
                || !self.group_order.is_multiple_of(order)
                || self.beta(i, 0) != (self.group_order / order) as i64
            {
                return Err(TomError::FirstColumnMismatch { row: i + 1 });
            }
            for &(j, v) in &self.rows[i] {
                if v % diag != 0 {
                    return Err(TomError::DiagonalDivisibility {
                        row: i + 1,
                        col: j as usize + 1,
                    });
                }
                if !order.is_multiple_of(self.classes[j as usize].order) {
                    return Err(TomError::OrderDivisibility {
                        row: i + 1,
                        col: j as usize + 1,
                    });
                }
            }
            if self.beta(i, 0) % diag != 0
                || (self.beta(i, 0) / diag) as u64 != self.classes[i].length
            {
                return Err(TomError::ClassLengthMismatch { row: i + 1 });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn beta(&self, i: usize, j: usize) -> i64 {
        match self.rows[i].binary_search_by_key(&(j as u32), |&(c, _)| c) {
            Ok(pos) => self.rows[i][pos].1,
            Err(_) => 0,
        }
    }

    pub fn diagonal(&self, i: usize) -> i64 {
        self.beta(i, i)
    }

    /// Class length read off the matrix: `β_{G/H}(1) / β_{G/H}(H)`.
    pub fn class_length(&self, i: usize) -> i64 {
        self.beta(i, 0) / self.diagonal(i)
    }

    /// Dense lower-triangular row `i` (length `i + 1`).
    pub fn dense_row(&self, i: usize) -> Vec<i64> {
        let mut out = vec![0i64; i + 1];
        for &(j, v) in &self.rows[i] {
            out[j as usize] = v;
        }
        out
    }

    /// Total number of subgroups: `Σ_i β_{G/H_i}(1) / β_{G/H_i}(H_i)`.
    pub fn total_subgroups(&self) -> i128 {
        (0..self.class_count())
            .map(|i| self.class_length(i) as i128)
            .sum()
    }

    /// Sum of all matrix entries.
    pub fn entry_sum(&self) -> i128 {
        self.rows.iter().flatten().map(|&(_, v)| v as i128).sum()
    }

    pub fn diagonal_sum(&self) -> i128 {
        (0..self.class_count())
            .map(|i| self.diagonal(i) as i128)
            .sum()
    }

    /// Number of incidences in the class poset: the count of nonzero
    /// entries (of the marks matrix, equivalently of the incidence matrix).
    pub fn incidence_count(&self) -> i128 {
        self.rows.iter().map(|r| r.len() as i128).sum()
    }

    /// Number of incidences in the full subgroup lattice: the sum of the
    /// containment matrix.
    pub fn containment_sum(&self) -> i128 {
        (0..self.class_count())
            .map(|i| {
                let diag = self.diagonal(i) as i128;
                self.rows[i]
                    .iter()
                    .map(|&(_, v)| v as i128 / diag)
                    .sum::<i128>()
            })
            .sum()
    }

    pub fn derived_matrices(&self) -> Result<DerivedMatrices> {
        let mut containment = Vec::with_capacity(self.rows.len());
        for i in 0..self.rows.len() {
            let diag = self.diagonal(i);
            let mut row = Vec::with_capacity(self.rows[i].len());
            for &(j, v) in &self.rows[i] {
                if v % diag != 0 {
                    return Err(Error::Invariant("diagonal must divide every row entry"));
                }
                row.push((j, v / diag));
            }
            containment.push(row);
        }
        Ok(DerivedMatrices {
            size: self.rows.len(),
            containment,
        })
    }

    /// Indices of classes properly subconjugate to class `i` (the nonzero
    /// sub-diagonal positions of row `i`).
    pub fn rho(&self, i: usize) -> Vec<u32> {
        self.rows[i]
            .iter()
            .map(|&(j, _)| j)
            .filter(|&j| j as usize != i)
            .collect()
    }

    /// Positions of the classes maximal in `H_i`, up to conjugacy:
    /// `ρ_i` minus everything subconjugate to some member of `ρ_i`.
    pub fn maximal_subgroups(&self, i: usize) -> Result<Vec<u32>> {
        let r = self.class_count();
        if i >= r {
            return Err(Error::ClassIndexOutOfRange(i, r));
        }
        let rho_i = self.rho(i);
        let mut keep = vec![false; r];
        for &j in &rho_i {
            keep[j as usize] = true;
        }
        for &j in &rho_i {
            for &k in &self.rho(j as usize) {
                keep[k as usize] = false;
            }
        }
        Ok(rho_i.into_iter().filter(|&j| keep[j as usize]).collect())
    }

    /// Number of conjugates of `H_i` contained in `H_j`:
    /// `β_{G/H_j}(H_i) · β_{G/H_i}(1) / (β_{G/H_i}(H_i) · β_{G/H_j}(1))`.
    /// Always an integer; a failed division is an invariant violation.
    pub fn edges_up(&self, i: usize, j: usize) -> Result<i64> {
        let r = self.class_count();
        if i >= r || j >= r {
            return Err(Error::ClassIndexOutOfRange(i.max(j), r));
        }
        let num = (self.beta(j, i) as i128) * (self.beta(i, 0) as i128);
        let den = (self.diagonal(i) as i128) * (self.beta(j, 0) as i128);
        if num % den != 0 {
            return Err(Error::Invariant(
                "conjugate containment count must be integral",
            ));
        }
        Ok((num / den) as i64)
    }

    /// Edges in the Hasse diagram of the poset of classes: `Σ_i |Max(H_i)|`.
    pub fn poset_edge_count(&self) -> Result<u64> {
        let mut total = 0u64;
        for i in 0..self.class_count() {
            total += self.maximal_subgroups(i)?.len() as u64;
        }
        Ok(total)
    }

    /// Edges in the Hasse diagram of the full subgroup lattice. Each member
    /// of class `i` covers `edges_up(j, i)` members of each maximal class
    /// `j`, so the total weights the per-representative count by the class
    /// length.
    pub fn lattice_edge_count(&self) -> Result<i128> {
        let mut total = 0i128;
        for i in 0..self.class_count() {
            let li = self.class_length(i) as i128;
            for j in self.maximal_subgroups(i)? {
                total += li * self.edges_up(j as usize, i)? as i128;
            }
        }
        Ok(total)
    }

    /// Positions of the maximal property-P classes: the property-P classes
    /// minus those maximal in some other property-P class. Correct for
    /// subgroup-closed properties (all five shipped ones are).
    pub fn maximal_property_classes(
        &self,
        flags: &[PropertyFlags],
        property: Property,
    ) -> Result<Vec<usize>> {
        let r = self.class_count();
        assert_eq!(flags.len(), r, "one flag set per class");
        let in_p: Vec<bool> = flags.iter().map(|f| f.get(property)).collect();
        let mut excluded = vec![false; r];
        for j in 0..r {
            if !in_p[j] {
                continue;
            }
            for m in self.maximal_subgroups(j)? {
                excluded[m as usize] = true;
            }
        }
        Ok((0..r).filter(|&i| in_p[i] && !excluded[i]).collect())
    }

    /// Sum of class lengths over the maximal property-P classes.
    pub fn total_maximal_property(
        &self,
        flags: &[PropertyFlags],
        property: Property,
    ) -> Result<i128> {
        Ok(self
            .maximal_property_classes(flags, property)?
            .into_iter()
            .map(|i| self.class_length(i) as i128)
            .sum())
    }

    /// (distinct subgroup orders, divisors of `|G|` missing as subgroup
    /// orders) — computable from class metadata alone.
    pub fn order_stats(&self) -> (usize, usize) {
        let orders: Vec<u64> = self.classes.iter().map(|c| c.order).collect();
        crate::properties::order_stats(&orders, self.group_order)
    }
}

impl DerivedMatrices {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Containment entry `(i, j)`: conjugates of `H_i` containing `H_j`.
    pub fn containment(&self, i: usize, j: usize) -> i64 {
        match self.containment[i].binary_search_by_key(&(j as u32), |&(c, _)| c) {
            Ok(pos) => self.containment[i][pos].1,
            Err(_) => 0,
        }
    }

    /// Incidence entry `(i, j)`: 1 iff `H_j` is subconjugate to `H_i`.
    pub fn incidence(&self, i: usize, j: usize) -> u8 {
        u8::from(self.containment(i, j) != 0)
    }

    pub fn containment_sum(&self) -> i128 {
        self.containment
            .iter()
            .flatten()
            .map(|&(_, v)| v as i128)
            .sum()
    }

    pub fn incidence_count(&self) -> i128 {
        self.containment.iter().map(|r| r.len() as i128).sum()
    }

    /// Checks that incidence is a partial order on classes: reflexive,
    /// antisymmetric, transitive.
    pub fn incidence_is_partial_order(&self) -> bool {
        let n = self.size;
        for i in 0..n {
            if self.incidence(i, i) != 1 {
                return false;
            }
        }
        for i in 0..n {
            for &(j, _) in &self.containment[i] {
                let j = j as usize;
                if j != i && self.incidence(j, i) == 1 {
                    return false; // antisymmetry
                }
                // transitivity: everything below j is below i
                for &(k, _) in &self.containment[j] {
                    if self.incidence(i, k as usize) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

// ---- single marks, dual-computed -------------------------------------------

/// `β_{G/H}(K)` computed two independent ways — fixed cosets and the
/// normalizer-index formula — with agreement asserted.
pub fn mark(g: &Group, h: &Group, k: &Group) -> Result<u64> {
    let by_cosets = mark_by_fixed_cosets(g, h, k)?;
    let by_formula = mark_by_conjugate_count(g, h, k)?;
    if by_cosets != by_formula {
        return Err(Error::Invariant("mark computations disagree"));
    }
    Ok(by_cosets)
}

/// Reference path: count the right cosets `Hx` fixed by every element of
/// `K` under right multiplication, i.e. those with `xKx⁻¹ ≤ H` (testing
/// the generators of `K` suffices since the fixed cosets of a set of
/// elements are the fixed cosets of the subgroup they generate).
pub fn mark_by_fixed_cosets(g: &Group, h: &Group, k: &Group) -> Result<u64> {
    if !k.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let reps = g.right_coset_reps(h)?;
    let kgens: Vec<Perm> = k.generators().to_vec();
    let mut fixed = 0u64;
    for x in &reps {
        let x_inv = x.inverse();
        let all_in = kgens.iter().all(|kg| {
            let conj = x
                .compose(kg)
                .and_then(|p| p.compose(&x_inv))
                .expect("equal degrees");
            h.contains(&conj)
        });
        if all_in {
            fixed += 1;
        }
    }
    Ok(fixed)
}

/// Fast path: `|N_G(H):H|` times the number of conjugates of `H`
/// containing `K`.
pub fn mark_by_conjugate_count(g: &Group, h: &Group, k: &Group) -> Result<u64> {
    if !h.is_subgroup_of(g) || !k.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let members = class_members(g, h);
    let class_len = members.len() as u64;
    let norm_index = g.order() / (class_len * h.order());
    let containing = members.iter().filter(|m| k.is_subgroup_of(m)).count() as u64;
    Ok(norm_index * containing)
}

// ---- row computation ---------------------------------------------------------

fn marks_rows<E: El>(
    ct: &ClassTable,
    classes: &[ClassInfo],
    group_order: u64,
    parallel: bool,
) -> Vec<Vec<(u32, i64)>> {
    let ggens: Vec<E> = ct.group.generators().iter().map(E::from_perm).collect();
    let reps: Vec<Arc<[E]>> = ct
        .classes
        .iter()
        .map(|c| elements_of::<E>(&c.representative))
        .collect();
    par::map_range(classes.len(), parallel, |i| {
        let orbit = set_orbit(&reps[i], &ggens);
        let norm_index = (group_order / (classes[i].length * classes[i].order)) as i64;
        let mut row: Vec<(u32, i64)> = Vec::new();
        for j in 0..=i {
            if !classes[i].order.is_multiple_of(classes[j].order) {
                continue;
            }
            let contained = orbit.iter().filter(|set| subset_of(&reps[j], set)).count() as i64;
            if contained > 0 {
                row.push((j as u32, norm_index * contained));
            }
        }
        row
    })
}

fn elements_of<E: El>(g: &Group) -> Arc<[E]> {
    let v: Vec<E> = g.elements_iter().map(|p| E::from_perm(&p)).collect();
    v.into()
}

/// Orbit of a sorted subgroup element set under conjugation, sets only.
fn set_orbit<E: El>(start: &Arc<[E]>, ggens: &[E]) -> Vec<Arc<[E]>> {
    let mut seen: crate::element::FastSet<Arc<[E]>> = Default::default();
    seen.insert(start.clone());
    let mut out = vec![start.clone()];
    let mut i = 0;
    while i < out.len() {
        let set = out[i].clone();
        for g in ggens {
            let next: Arc<[E]> = crate::group::conj_set(&set, g).into();
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
        i += 1;
    }
    out
}

fn subset_of<E: El>(small: &[E], big: &[E]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    small.iter().all(|e| big.binary_search(e).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::class_table;
    use crate::properties::classify_classes;

    fn s4_table() -> MarksTable {
        let ct = class_table(&Group::symmetric(4).unwrap()).unwrap();
        MarksTable::from_class_table(&ct, false)
    }

    #[test]
    fn s4_matrix_invariants() {
        let mt = s4_table();
        assert_eq!(mt.class_count(), 11);
        assert!(mt.validate().is_ok());
        // first column = |G| / |H_i|
        for i in 0..11 {
            assert_eq!(mt.beta(i, 0) as u64, 24 / mt.classes()[i].order);
            assert_eq!(mt.class_length(i) as u64, mt.classes()[i].length);
        }
        assert_eq!(mt.entry_sum(), 146);
        assert_eq!(mt.diagonal_sum(), 47);
        assert_eq!(mt.total_subgroups(), 30);
        assert_eq!(mt.incidence_count(), 44);
        assert_eq!(mt.containment_sum(), 68);
    }

    #[test]
    fn s4_mark_values() {
        let s4 = Group::symmetric(4).unwrap();
        let d8 = crate::properties::sylow_subgroup(&s4, 2);
        let triv = Group::trivial(4).unwrap();
        let c4 = Group::closure(&[Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()], 4).unwrap();
        assert_eq!(mark(&s4, &d8, &triv).unwrap(), 3);
        assert_eq!(mark(&s4, &d8, &c4).unwrap(), 1);
        assert_eq!(mark(&s4, &s4, &s4).unwrap(), 1);
    }

    #[test]
    fn derived_matrices_of_s4() {
        let mt = s4_table();
        let dm = mt.derived_matrices().unwrap();
        assert_eq!(dm.containment_sum(), 68);
        assert_eq!(dm.incidence_count(), 44);
        assert!(dm.incidence_is_partial_order());
        // diagonal of containment is all ones
        for i in 0..dm.size() {
            assert_eq!(dm.containment(i, i), 1);
            assert_eq!(dm.incidence(i, i), 1);
        }
    }

    #[test]
    fn maximal_subgroups_and_edges_of_s4() {
        let mt = s4_table();
        // Max(S_4) consists of the classes of S_3, D_8 and A_4
        let top = mt.class_count() - 1;
        let max = mt.maximal_subgroups(top).unwrap();
        let labels: Vec<&str> = max
            .iter()
            .map(|&j| mt.classes()[j as usize].label.as_str())
            .collect();
        assert_eq!(max.len(), 3);
        assert!(labels.contains(&"S3") && labels.contains(&"D8") && labels.contains(&"A4"));
        // trivial class has no maximal subgroups
        assert!(mt.maximal_subgroups(0).unwrap().is_empty());
        // E-up from the trivial class is always 1
        for j in 0..mt.class_count() {
            assert_eq!(mt.edges_up(0, j).unwrap(), 1);
        }
        assert_eq!(mt.poset_edge_count().unwrap(), 17);
        assert_eq!(mt.lattice_edge_count().unwrap(), 66);
        assert!(mt.maximal_subgroups(99).is_err());
    }

    #[test]
    fn maximal_subgroups_are_the_cover_relation() {
        // j ∈ Max(i) iff incidence(i, j) = 1, i ≠ j, and no k strictly
        // between them; members of Max(i) are pairwise incomparable
        for n in [4usize, 5] {
            let ct = class_table(&Group::symmetric(n).unwrap()).unwrap();
            let mt = MarksTable::from_class_table(&ct, false);
            let dm = mt.derived_matrices().unwrap();
            let r = mt.class_count();
            for i in 0..r {
                let max = mt.maximal_subgroups(i).unwrap();
                for (a, &x) in max.iter().enumerate() {
                    for &y in &max[a + 1..] {
                        assert_eq!(dm.incidence(x as usize, y as usize), 0);
                        assert_eq!(dm.incidence(y as usize, x as usize), 0);
                    }
                }
                for j in 0..r {
                    let covered = j != i
                        && dm.incidence(i, j) == 1
                        && !(0..r).any(|k| {
                            k != i && k != j && dm.incidence(i, k) == 1 && dm.incidence(k, j) == 1
                        });
                    assert_eq!(
                        max.contains(&(j as u32)),
                        covered,
                        "pair ({i},{j}) of S_{n}"
                    );
                }
            }
        }
    }

    #[test]
    fn edge_consistency_between_classes() {
        // the edges between two classes counted from either side agree:
        // class_length(j) · E↑(i in j) = class_length(i) · containment(j, i)
        let mt = s4_table();
        let dm = mt.derived_matrices().unwrap();
        for j in 0..mt.class_count() {
            for i in 0..=j {
                if dm.incidence(j, i) == 0 {
                    continue;
                }
                let lhs = mt.class_length(j) as i128 * mt.edges_up(i, j).unwrap() as i128;
                let rhs = mt.class_length(i) as i128 * dm.containment(j, i) as i128;
                assert_eq!(lhs, rhs, "pair ({i}, {j})");
            }
        }
    }

    #[test]
    fn maximal_property_classes_of_s4() {
        let ct = class_table(&Group::symmetric(4).unwrap()).unwrap();
        let mt = MarksTable::from_class_table(&ct, false);
        let flags = classify_classes(&ct, false);
        let abelian = mt
            .maximal_property_classes(&flags, Property::Abelian)
            .unwrap();
        assert_eq!(abelian.len(), 4);
        let labels: Vec<&str> = abelian
            .iter()
            .map(|&i| mt.classes()[i].label.as_str())
            .collect();
        assert_eq!(labels.iter().filter(|l| **l == "2^2").count(), 2);
        assert!(labels.contains(&"3") && labels.contains(&"4"));
        assert_eq!(
            mt.total_maximal_property(&flags, Property::Abelian)
                .unwrap(),
            11
        );
        assert_eq!(
            mt.total_maximal_property(&flags, Property::Cyclic).unwrap(),
            13
        );
        assert_eq!(
            mt.maximal_property_classes(&flags, Property::Solvable)
                .unwrap(),
            vec![10]
        );
    }

    #[test]
    fn dual_mark_computation_agrees_on_s4_exhaustively() {
        let s4 = Group::symmetric(4).unwrap();
        let ct = class_table(&s4).unwrap();
        for a in &ct.classes {
            for b in &ct.classes {
                let cosets =
                    mark_by_fixed_cosets(&s4, &a.representative, &b.representative).unwrap();
                let formula =
                    mark_by_conjugate_count(&s4, &a.representative, &b.representative).unwrap();
                assert_eq!(cosets, formula, "classes {} / {}", a.label, b.label);
            }
        }
    }

    #[test]
    fn marks_match_fixed_points_of_coset_action() {
        // cross-oracle: β equals the fixed-point count of the image perms
        let s4 = Group::symmetric(4).unwrap();
        let ct = class_table(&s4).unwrap();
        let mt = MarksTable::from_class_table(&ct, false);
        for (i, hc) in ct.classes.iter().enumerate() {
            let action = s4.coset_action(&hc.representative).unwrap();
            for (j, kc) in ct.classes.iter().enumerate().take(i + 1) {
                let m = action.coset_reps.len();
                let fixed = (0..m)
                    .filter(|&pt| {
                        kc.representative.generators().iter().all(|kg| {
                            let idx = s4.elements_iter().position(|e| e == *kg).unwrap();
                            action.element_images[idx].apply(pt) == pt
                        })
                    })
                    .count() as i64;
                assert_eq!(fixed, mt.beta(i, j), "classes {} / {}", hc.label, kc.label);
            }
        }
    }

    #[test]
    fn trivial_group_marks() {
        let ct = class_table(&Group::trivial(2).unwrap()).unwrap();
        let mt = MarksTable::from_class_table(&ct, false);
        assert_eq!(mt.class_count(), 1);
        assert_eq!(mt.total_subgroups(), 1);
        assert_eq!(mt.beta(0, 0), 1);
        assert_eq!(mt.poset_edge_count().unwrap(), 0);
        assert_eq!(mt.lattice_edge_count().unwrap(), 0);
    }
}
