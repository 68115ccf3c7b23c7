//! Finite permutation groups with fully materialized, canonically sorted
//! element sets.
//!
//! A [`Group`] is identified by its element sequence: two groups are equal
//! iff their degrees match and their sorted element lists coincide. This
//! makes subgroup hashing exact and deterministic, which the enumeration and
//! fusion machinery depends on. There are no stabilizer chains; desk-scale
//! orders keep the materialized form simplest and correct.
//!
//! Everything here is immutable after construction; all operations are pure
//! functions, so parallel callers need no synchronization.

use std::sync::Arc;

use crate::element::{El, FastMap, Packed, PACKED_IDENTITY};
use crate::error::Error;
use crate::perm::Perm;
use crate::Result;

/// Element storage. Degrees up to 16 always pack; anything wider keeps the
/// array form. Both variants hold the canonical sorted order (lexicographic
/// on image arrays, which for packed words is plain numeric order).
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Elements {
    Packed(Arc<[Packed]>),
    Wide(Arc<[Perm]>),
}

impl Elements {
    fn len(&self) -> usize {
        match self {
            Elements::Packed(v) => v.len(),
            Elements::Wide(v) => v.len(),
        }
    }
}

/// A finite permutation group on `{0..degree-1}`, given by generators, with
/// its full element set materialized.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Arc<[Perm]>,
    pub(crate) elements: Elements,
}

/// Group identity is the canonical element sequence; the generating set is
/// construction detail and takes no part in equality or hashing.
impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

impl std::hash::Hash for Group {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

/// The image of a group acting on the right cosets of a subgroup.
///
/// Cosets are indexed by their lexicographically minimal member; coset 0 is
/// the subgroup itself. The map `x ↦ action_of(x)` sends `Hy` to `Hyx⁻¹`,
/// which makes it a homomorphism under the crate's `(p∘q)(x) = p(q(x))`
/// convention. When the subgroup is normal the image is isomorphic to the
/// quotient.
pub struct CosetAction {
    /// The image group, acting on `|g| / |h|` coset indices.
    pub image: Group,
    /// `element_images[i]` is the action of `g.element(i)`.
    pub element_images: Vec<Perm>,
    /// Minimal representative of each coset, indexed by coset.
    pub coset_reps: Vec<Perm>,
}

impl Group {
    // ---- construction ----------------------------------------------------

    /// The smallest group containing `generators`, all of which must have
    /// degree `degree >= 1`. Empty generators give the trivial group.
    pub fn closure(generators: &[Perm], degree: usize) -> Result<Group> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
        }
        let gens: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let elements = if degree <= 16 {
            let packed: Vec<Packed> = gens.iter().map(Packed::from_perm).collect();
            Elements::Packed(closure_elems(&packed, Packed(PACKED_IDENTITY)).into())
        } else {
            Elements::Wide(closure_elems(&gens, Perm::identity(degree)).into())
        };
        Ok(Group {
            degree,
            generators: gens.into(),
            elements,
        })
    }

    pub fn trivial(degree: usize) -> Result<Group> {
        Group::closure(&[], degree)
    }

    /// The symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Result<Group> {
        let gens = match n {
            0 => return Err(Error::ZeroDegree),
            1 => vec![],
            2 => vec![Perm::from_cycles(2, &[&[0, 1]])?],
            _ => vec![
                Perm::from_cycles(n, &[&[0, 1]])?,
                Perm::from_cycles(n, &[&(0..n).collect::<Vec<_>>()])?,
            ],
        };
        Group::closure(&gens, n)
    }

    /// The alternating group on `n` points.
    pub fn alternating(n: usize) -> Result<Group> {
        let gens = match n {
            0 => return Err(Error::ZeroDegree),
            1 | 2 => vec![],
            3 => vec![Perm::from_cycles(3, &[&[0, 1, 2]])?],
            _ => {
                let cycle: Vec<usize> = if n % 2 == 1 {
                    (0..n).collect()
                } else {
                    (1..n).collect()
                };
                vec![
                    Perm::from_cycles(n, &[&[0, 1, 2]])?,
                    Perm::from_cycles(n, &[&cycle])?,
                ]
            }
        };
        Group::closure(&gens, n)
    }

    pub(crate) fn from_packed_parts(
        degree: usize,
        generators: Vec<Perm>,
        elements: Arc<[Packed]>,
    ) -> Group {
        debug_assert!(
            elements.windows(2).all(|w| w[0] < w[1]),
            "element set must be sorted"
        );
        Group {
            degree,
            generators: generators.into(),
            elements: Elements::Packed(elements),
        }
    }

    pub(crate) fn from_wide_parts(
        degree: usize,
        generators: Vec<Perm>,
        elements: Arc<[Perm]>,
    ) -> Group {
        debug_assert!(
            elements.windows(2).all(|w| w[0] < w[1]),
            "element set must be sorted"
        );
        Group {
            degree,
            generators: generators.into(),
            elements: Elements::Wide(elements),
        }
    }

    // ---- basic queries ---------------------------------------------------

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// The `i`-th element in canonical order; index 0 is the identity.
    pub fn element(&self, i: usize) -> Perm {
        match &self.elements {
            Elements::Packed(v) => v[i].to_perm(self.degree),
            Elements::Wide(v) => v[i].clone(),
        }
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements_iter(&self) -> impl Iterator<Item = Perm> + '_ {
        (0..self.elements.len()).map(move |i| self.element(i))
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        match &self.elements {
            Elements::Packed(v) => v.binary_search(&Packed::from_perm(p)).is_ok(),
            Elements::Wide(v) => v.binary_search(p).is_ok(),
        }
    }

    /// True iff every element of `self` lies in `g`. Groups of different
    /// degree are never subgroups of one another.
    pub fn is_subgroup_of(&self, g: &Group) -> bool {
        if self.degree != g.degree || !g.order().is_multiple_of(self.order()) {
            return false;
        }
        match (&self.elements, &g.elements) {
            (Elements::Packed(h), Elements::Packed(big)) => {
                h.iter().all(|e| big.binary_search(e).is_ok())
            }
            (Elements::Wide(h), Elements::Wide(big)) => {
                h.iter().all(|e| big.binary_search(e).is_ok())
            }
            _ => unreachable!("same degree implies same storage variant"),
        }
    }

    /// Orders of all elements, identity included.
    pub fn element_orders(&self) -> Vec<u64> {
        self.elements_iter().map(|p| p.order()).collect()
    }

    /// Largest element order.
    pub fn exponent_witness(&self) -> u64 {
        self.element_orders().into_iter().max().unwrap_or(1)
    }

    /// True when every element is an even permutation.
    pub fn all_even(&self) -> bool {
        // generators suffice: products of even permutations are even
        self.generators.iter().all(|g| g.is_even())
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if a.compose(b).unwrap() != b.compose(a).unwrap() {
                    return false;
                }
            }
        }
        true
    }

    // ---- conjugation -----------------------------------------------------

    /// The conjugate subgroup `self^g = {g⁻¹ h g : h ∈ self}`.
    pub fn conjugate_subgroup(&self, g: &Perm) -> Result<Group> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(g.degree(), self.degree));
        }
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|h| h.conjugate(g).expect("equal degrees"))
            .collect();
        let elements = match &self.elements {
            Elements::Packed(v) => {
                let gg = Packed::from_perm(g);
                Elements::Packed(conj_sorted(v, &gg).into())
            }
            Elements::Wide(v) => Elements::Wide(conj_sorted(v, g).into()),
        };
        Ok(Group {
            degree: self.degree,
            generators: gens.into(),
            elements,
        })
    }

    /// Looks for `x ∈ self` with `h^x = k`, returning the first witness in
    /// canonical element order (or `None` if the subgroups are not
    /// conjugate). For `|self| > 1000` the scan runs over coset
    /// representatives of the normalizer of `h` instead of all of `self`;
    /// the witness is then the first working coset representative.
    pub fn conjugating_element(&self, h: &Group, k: &Group) -> Result<Option<Perm>> {
        if !h.is_subgroup_of(self) || !k.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        if h.order() != k.order() {
            return Ok(None);
        }
        if h == k {
            return Ok(Some(Perm::identity(self.degree)));
        }
        if self.order() <= 1000 {
            self.conjugating_element_full_scan(h, k)
        } else {
            self.conjugating_element_coset_scan(h, k)
        }
    }

    /// Reference path: scan every element of the group.
    pub fn conjugating_element_full_scan(&self, h: &Group, k: &Group) -> Result<Option<Perm>> {
        match (&self.elements, &h.elements, &k.elements) {
            (Elements::Packed(g), Elements::Packed(hv), Elements::Packed(kv)) => {
                for x in g.iter() {
                    if conj_sorted(hv, x) == **kv {
                        return Ok(Some(x.to_perm(self.degree)));
                    }
                }
                Ok(None)
            }
            (Elements::Wide(g), Elements::Wide(hv), Elements::Wide(kv)) => {
                for x in g.iter() {
                    if conj_sorted(hv, x) == **kv {
                        return Ok(Some(x.clone()));
                    }
                }
                Ok(None)
            }
            _ => unreachable!("same degree implies same storage variant"),
        }
    }

    /// Conjugates of `h` are parameterized by cosets of its normalizer, so
    /// scanning one representative per coset suffices.
    fn conjugating_element_coset_scan(&self, h: &Group, k: &Group) -> Result<Option<Perm>> {
        let norm = self.normalizer_of(h)?;
        match (&self.elements, &norm.elements, &h.elements, &k.elements) {
            (
                Elements::Packed(g),
                Elements::Packed(nv),
                Elements::Packed(hv),
                Elements::Packed(kv),
            ) => Ok(coset_scan(g, nv, hv, kv).map(|x| x.to_perm(self.degree))),
            (Elements::Wide(g), Elements::Wide(nv), Elements::Wide(hv), Elements::Wide(kv)) => {
                Ok(coset_scan(g, nv, hv, kv))
            }
            _ => unreachable!("same degree implies same storage variant"),
        }
    }

    /// The normalizer `N_self(h) = {x : h^x = h}`. Errors when `h` is not a
    /// subgroup of `self`.
    pub fn normalizer_of(&self, h: &Group) -> Result<Group> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        match (&self.elements, &h.elements) {
            (Elements::Packed(g), Elements::Packed(hv)) => {
                let hgens: Vec<Packed> = h.generators.iter().map(Packed::from_perm).collect();
                let norm = normalizer_elems(g, hv, &hgens);
                let gens = reduce_generators(&norm, Packed(PACKED_IDENTITY));
                Ok(Group::from_packed_parts(
                    self.degree,
                    gens.iter().map(|e| e.to_perm(self.degree)).collect(),
                    norm.into(),
                ))
            }
            (Elements::Wide(g), Elements::Wide(hv)) => {
                let hgens: Vec<Perm> = h.generators.to_vec();
                let norm = normalizer_elems(g, hv, &hgens);
                let gens = reduce_generators(&norm, Perm::identity(self.degree));
                Ok(Group::from_wide_parts(self.degree, gens, norm.into()))
            }
            _ => unreachable!("same degree implies same storage variant"),
        }
    }

    // ---- actions ---------------------------------------------------------

    /// Orbit partition of the natural action on points. Blocks are sorted
    /// ascending internally and ordered by their smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut blocks = Vec::new();
        for start in 0..self.degree {
            if assigned[start] {
                continue;
            }
            let mut block = vec![start];
            assigned[start] = true;
            let mut frontier = vec![start];
            while let Some(p) = frontier.pop() {
                for g in self.generators.iter() {
                    let q = g.apply(p);
                    if !assigned[q] {
                        assigned[q] = true;
                        block.push(q);
                        frontier.push(q);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    /// Minimal representative of each right coset of `h` in `self`, in
    /// ascending canonical order. Errors when `h` is not a subgroup.
    pub fn right_coset_reps(&self, h: &Group) -> Result<Vec<Perm>> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        match (&self.elements, &h.elements) {
            (Elements::Packed(g), Elements::Packed(hv)) => {
                let (_, reps) = coset_table(g, hv);
                Ok(reps.iter().map(|e| e.to_perm(self.degree)).collect())
            }
            (Elements::Wide(g), Elements::Wide(hv)) => {
                let (_, reps) = coset_table(g, hv);
                Ok(reps)
            }
            _ => unreachable!("same degree implies same storage variant"),
        }
    }

    /// The action of `self` on the right cosets of `h`, with the full
    /// element-to-image table. Errors when `h` is not a subgroup.
    ///
    /// Note the table costs `|self| / |h| · |self|` points of storage; for
    /// quotient computations (`h` normal) this is small, but the regular
    /// action (`h` trivial) of a large group is expensive by design.
    pub fn coset_action(&self, h: &Group) -> Result<CosetAction> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        let (coset_of, reps) = match (&self.elements, &h.elements) {
            (Elements::Packed(g), Elements::Packed(hv)) => {
                let (c, r) = coset_table(g, hv);
                (
                    c,
                    r.iter().map(|e| e.to_perm(self.degree)).collect::<Vec<_>>(),
                )
            }
            (Elements::Wide(g), Elements::Wide(hv)) => coset_table(g, hv),
            _ => unreachable!("same degree implies same storage variant"),
        };
        let m = reps.len();

        // π_x : Hy ↦ Hyx⁻¹, a homomorphism under (p∘q)(x) = p(q(x)).
        let index_of = |p: &Perm| -> usize {
            match &self.elements {
                Elements::Packed(v) => v
                    .binary_search(&Packed::from_perm(p))
                    .expect("element of the group"),
                Elements::Wide(v) => v.binary_search(p).expect("element of the group"),
            }
        };
        let mut element_images = Vec::with_capacity(self.elements.len());
        for i in 0..self.elements.len() {
            let x_inv = self.element(i).inverse();
            let images: Vec<u16> = reps
                .iter()
                .map(|rep| coset_of[index_of(&rep.compose(&x_inv).expect("equal degrees"))] as u16)
                .collect();
            element_images.push(Perm::from_images(images).expect("coset action is a bijection"));
        }

        let mut image_elems: Vec<Perm> = element_images.clone();
        image_elems.sort_unstable();
        image_elems.dedup();
        let image_gens: Vec<Perm> = if m == 1 {
            Vec::new()
        } else {
            self.generators
                .iter()
                .map(|g| element_images[index_of(g)].clone())
                .filter(|p| !p.is_identity())
                .collect()
        };
        let image = if m <= 16 {
            let packed: Vec<Packed> = image_elems.iter().map(Packed::from_perm).collect();
            Group::from_packed_parts(m, image_gens, packed.into())
        } else {
            Group::from_wide_parts(m, image_gens, image_elems.into())
        };
        Ok(CosetAction {
            image,
            element_images,
            coset_reps: reps,
        })
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Group(degree={}, order={}, gens=[",
            self.degree,
            self.order()
        )?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

// ---- generic engine helpers ----------------------------------------------

/// Product closure by breadth-first right multiplication. Returns the sorted
/// element set; finite closure under products is automatically a group.
pub(crate) fn closure_elems<E: El>(gens: &[E], id: E) -> Vec<E> {
    let mut set: crate::element::FastSet<E> = Default::default();
    set.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<E> = set.into_iter().collect();
    out.sort_unstable();
    out
}

/// Greedy small generating set for a materialized subgroup.
pub(crate) fn reduce_generators<E: El>(elems: &[E], id: E) -> Vec<E> {
    let target = elems.len();
    let mut gens: Vec<E> = Vec::new();
    let mut current = 1usize;
    // prefer high-order elements: scanning from the lexicographic top tends
    // to find big cyclic chunks first
    for e in elems.iter().rev() {
        if e.is_identity() {
            continue;
        }
        if current == target {
            break;
        }
        let mut trial = gens.clone();
        trial.push(e.clone());
        let size = closure_elems(&trial, id.clone()).len();
        if size > current {
            gens = trial;
            current = size;
        }
    }
    gens
}

/// Conjugate a sorted element set, returning it sorted.
pub(crate) fn conj_set<E: El>(set: &[E], g: &E) -> Vec<E> {
    let g_inv = g.inverse();
    let mut out: Vec<E> = set.iter().map(|e| g_inv.compose(e).compose(g)).collect();
    out.sort_unstable();
    out
}

fn conj_sorted<E: El>(set: &[E], g: &E) -> Vec<E> {
    conj_set(set, g)
}

fn normalizer_elems<E: El>(g: &[E], h: &[E], hgens: &[E]) -> Vec<E> {
    // x normalizes H iff every generator conjugates into H
    g.iter()
        .filter(|x| {
            let x_inv = x.inverse();
            hgens
                .iter()
                .all(|hg| h.binary_search(&x_inv.compose(hg).compose(x)).is_ok())
        })
        .cloned()
        .collect()
}

fn coset_scan<E: El>(g: &[E], norm: &[E], h: &[E], k: &[E]) -> Option<E> {
    let mut pos: FastMap<E, u32> = FastMap::default();
    for (i, e) in g.iter().enumerate() {
        pos.insert(e.clone(), i as u32);
    }
    let mut assigned = vec![false; g.len()];
    for (i, x) in g.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        // x is the minimal member of the coset (norm ∘ x)
        for n in norm {
            assigned[pos[&n.compose(x)] as usize] = true;
        }
        if conj_sorted(h, x) == k {
            return Some(x.clone());
        }
    }
    None
}

/// Assigns each element of `g` a right-coset index of `h`, cosets numbered
/// by ascending minimal member. Returns (element index -> coset index,
/// minimal representative per coset).
fn coset_table<E: El>(g: &[E], h: &[E]) -> (Vec<usize>, Vec<E>) {
    let mut pos: FastMap<E, u32> = FastMap::default();
    for (i, e) in g.iter().enumerate() {
        pos.insert(e.clone(), i as u32);
    }
    let mut coset_of = vec![usize::MAX; g.len()];
    let mut reps = Vec::new();
    for (i, e) in g.iter().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(e.clone());
        for hh in h {
            coset_of[pos[&hh.compose(e)] as usize] = id;
        }
    }
    (coset_of, reps)
}
