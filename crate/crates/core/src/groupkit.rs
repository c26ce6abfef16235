//! Enumeration of finitely generated matrix groups over finite rings.
//!
//! Elements are stored once, as fixed-width canonical byte strings in a flat
//! arena, and indexed by a hash table of arena positions. Closure runs
//! breadth-first one layer at a time and sorts each new layer, so element
//! order is `(depth, encoding)` and does not depend on hashing.

use alloc::vec;
use alloc::vec::Vec;
use core::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashSet, HashTable};

use crate::matrix::{self, Matrix};
use crate::rings::{Elem, RingSpec};

/// Default element budget for closures.
pub const DEFAULT_BUDGET: usize = 5_000_000;

/// Errors from group enumeration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    /// The closure grew past the budget.
    #[error("closure exceeded the budget of {budget} elements ({found} found so far)")]
    BudgetExceeded {
        /// Elements enumerated before stopping.
        found: usize,
        /// The budget.
        budget: usize,
    },
    /// The subspace is not invariant under the generators.
    #[error("radical is not invariant under the generators")]
    NotInvariant,
    /// A generator is not invertible.
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    /// Groups over different rings or dimensions.
    #[error("groups live over different rings or dimensions")]
    Mismatch,
}

/// A finite matrix group, fully enumerated.
///
/// In projective mode every element is stored as the least encoding among
/// its multiples by the recorded scalar subgroup.
#[derive(Clone)]
pub struct MatrixGroup {
    ring: RingSpec,
    n: usize,
    generators: Vec<Matrix>,
    scalars: Option<Vec<Elem>>,
    width: usize,
    key_len: usize,
    arena: Vec<u8>,
    layer_starts: Vec<usize>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
}

impl core::fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("MatrixGroup")
            .field("ring", &self.ring.description())
            .field("n", &self.n)
            .field("order", &self.order())
            .field("projective", &self.scalars.is_some())
            .finish()
    }
}

fn entry_width(ring: &RingSpec) -> usize {
    match ring.order() {
        0..=256 => 1,
        257..=65536 => 2,
        _ => 4,
    }
}

impl MatrixGroup {
    /// Enumerates `⟨gens⟩`.
    pub fn closure(gens: &[Matrix], ring: &RingSpec, budget: usize) -> Result<Self, GroupError> {
        Self::build(gens, ring, None, budget)
    }

    /// Enumerates the image of `⟨gens⟩` modulo the scalar matrices `λI`,
    /// `λ ∈ scalars` (a subgroup of the units; `1` is added if missing).
    pub fn closure_projective(
        gens: &[Matrix],
        ring: &RingSpec,
        scalars: &[Elem],
        budget: usize,
    ) -> Result<Self, GroupError> {
        let mut s = scalars.to_vec();
        s.push(ring.one());
        s.sort_unstable_by_key(|&e| ring.index(e));
        s.dedup();
        Self::build(gens, ring, Some(s), budget)
    }

    fn build(gens: &[Matrix], ring: &RingSpec, scalars: Option<Vec<Elem>>, budget: usize) -> Result<Self, GroupError> {
        let n = gens.first().map_or(1, Matrix::dim);
        if gens.iter().any(|g| g.dim() != n) {
            return Err(GroupError::Mismatch);
        }
        for (k, g) in gens.iter().enumerate() {
            if !ring.is_unit(g.det(ring)) {
                return Err(GroupError::NotInvertible(k));
            }
        }
        let width = entry_width(ring);
        let mut grp = Self {
            ring: ring.clone(),
            n,
            generators: gens.to_vec(),
            scalars,
            width,
            key_len: width * n * n,
            arena: Vec::new(),
            layer_starts: Vec::new(),
            table: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
        };
        let (id, key) = grp.canonical(&Matrix::identity(ring, n));
        grp.push_layer(vec![key]);
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut seen: HashSet<Vec<u8>> = HashSet::new();
            let mut next: Vec<(Vec<u8>, Matrix)> = Vec::new();
            for g in &frontier {
                for s in &grp.generators {
                    let (h, key) = grp.canonical(&g.mul(s, ring));
                    if grp.position(&key).is_none() && !seen.contains(&key) {
                        seen.insert(key.clone());
                        next.push((key, h));
                        if grp.order() + next.len() > budget {
                            return Err(GroupError::BudgetExceeded { found: grp.order() + next.len(), budget });
                        }
                    }
                }
            }
            next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            let (keys, mats): (Vec<Vec<u8>>, Vec<Matrix>) = next.into_iter().unzip();
            if !keys.is_empty() {
                grp.push_layer(keys);
            }
            frontier = mats;
        }
        Ok(grp)
    }

    fn push_layer(&mut self, keys: Vec<Vec<u8>>) {
        self.layer_starts.push(self.order());
        let Self { table, arena, hasher, key_len, .. } = self;
        let kl = *key_len;
        for key in keys {
            let idx = (arena.len() / kl) as u32;
            arena.extend_from_slice(&key);
            let h = hasher.hash_one(&key[..]);
            table.insert_unique(h, idx, |&i| hasher.hash_one(&arena[i as usize * kl..(i as usize + 1) * kl]));
        }
    }

    /// Ring of coefficients.
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    /// Matrix dimension.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Generators as given.
    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.arena.len() / self.key_len
    }

    /// Whether elements are scalar classes.
    pub fn is_projective(&self) -> bool {
        self.scalars.is_some()
    }

    /// The scalar subgroup used for projective classes.
    pub fn scalars(&self) -> Option<&[Elem]> {
        self.scalars.as_deref()
    }

    /// Bytes per element encoding.
    pub fn encoding_len(&self) -> usize {
        self.key_len
    }

    /// Number of breadth-first layers, i.e. one more than the largest word
    /// length needed.
    pub fn depth(&self) -> usize {
        self.layer_starts.len()
    }

    /// The canonical encoding of `m` (after scalar normalisation).
    pub fn encode(&self, m: &Matrix) -> Vec<u8> {
        self.canonical(m).1
    }

    fn raw_encode(&self, m: &Matrix, out: &mut Vec<u8>) {
        for &e in m.entries() {
            let v = self.ring.index(e);
            match self.width {
                1 => out.push(v as u8),
                2 => out.extend_from_slice(&(v as u16).to_be_bytes()),
                _ => out.extend_from_slice(&v.to_be_bytes()),
            }
        }
    }

    /// The stored representative of `m` and its encoding.
    pub fn canonical(&self, m: &Matrix) -> (Matrix, Vec<u8>) {
        let mut key = Vec::with_capacity(self.key_len);
        self.raw_encode(m, &mut key);
        let Some(sc) = &self.scalars else {
            return (m.clone(), key);
        };
        let mut best = m.clone();
        let mut buf = Vec::with_capacity(self.key_len);
        for &l in sc {
            if l == self.ring.one() {
                continue;
            }
            let cand = m.scale(l, &self.ring);
            buf.clear();
            self.raw_encode(&cand, &mut buf);
            if buf < key {
                core::mem::swap(&mut key, &mut buf);
                best = cand;
            }
        }
        (best, key)
    }

    fn decode(&self, key: &[u8]) -> Matrix {
        let entries: Vec<Elem> = key
            .chunks(self.width)
            .map(|c| self.ring.from_index(c.iter().fold(0u32, |acc, &b| (acc << 8) | b as u32)))
            .collect();
        Matrix::from_entries(self.n, &entries)
    }

    fn key_at(&self, idx: usize) -> &[u8] {
        &self.arena[idx * self.key_len..(idx + 1) * self.key_len]
    }

    fn position(&self, key: &[u8]) -> Option<usize> {
        let h = self.hasher.hash_one(key);
        self.table.find(h, |&i| self.key_at(i as usize) == key).map(|&i| i as usize)
    }

    /// Position of `m` in the element order, if it is a member.
    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        if m.dim() != self.n {
            return None;
        }
        self.position(&self.encode(m))
    }

    /// Membership.
    pub fn contains(&self, m: &Matrix) -> bool {
        self.index_of(m).is_some()
    }

    /// The `k`-th element in `(depth, encoding)` order.
    pub fn element(&self, k: usize) -> Matrix {
        self.decode(self.key_at(k))
    }

    /// All elements in `(depth, encoding)` order.
    pub fn elements(&self) -> impl Iterator<Item = Matrix> + '_ {
        (0..self.order()).map(move |k| self.element(k))
    }

    /// All encodings in element order.
    pub fn encodings(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.arena.chunks(self.key_len)
    }

    /// The concatenated encodings (the opt-in element dump).
    pub fn raw_bytes(&self) -> &[u8] {
        &self.arena
    }

    /// Encodings sorted, for set comparisons.
    pub fn sorted_encodings(&self) -> Vec<&[u8]> {
        let mut v: Vec<&[u8]> = self.encodings().collect();
        v.sort_unstable();
        v
    }

    /// Whether `m` represents the identity (up to the scalar subgroup).
    pub fn is_identity(&self, m: &Matrix) -> bool {
        match &self.scalars {
            None => m.is_identity(&self.ring),
            Some(sc) => m.is_scalar().is_some_and(|l| sc.contains(&l)),
        }
    }

    /// `g · h`, as a stored representative.
    pub fn mul(&self, g: &Matrix, h: &Matrix) -> Matrix {
        self.canonical(&g.mul(h, &self.ring)).0
    }

    /// Least `k ≥ 1` with `g^k` the identity (projectively, if the group
    /// is projective).
    pub fn element_order(&self, g: &Matrix) -> u64 {
        element_order_with(g, &self.ring, |m| self.is_identity(m), self.order() as u64 + 1)
    }

    /// Closure of the generators at `idx` (in the same mode as `self`).
    pub fn subgroup(&self, idx: &[usize], budget: usize) -> Result<MatrixGroup, GroupError> {
        let gens: Vec<Matrix> = idx.iter().map(|&i| self.generators[i].clone()).collect();
        self.subgroup_from(&gens, budget)
    }

    /// Closure of arbitrary elements (in the same mode as `self`).
    pub fn subgroup_from(&self, gens: &[Matrix], budget: usize) -> Result<MatrixGroup, GroupError> {
        if gens.is_empty() {
            return Self::build(&[Matrix::identity(&self.ring, self.n)], &self.ring, self.scalars.clone(), budget)
                .map(|mut g| {
                    g.generators.clear();
                    g
                });
        }
        Self::build(gens, &self.ring, self.scalars.clone(), budget)
    }

    /// Scalars `λ` with `λI` in the group (linear mode).
    pub fn scalar_subgroup(&self) -> Vec<Elem> {
        self.ring
            .units()
            .into_iter()
            .filter(|&l| self.contains(&Matrix::scalar(l, self.n)))
            .collect()
    }
}

/// Least `k ≥ 1` with `is_id(g^k)`, or `0` if none up to `limit`.
pub fn element_order_with(g: &Matrix, ring: &RingSpec, is_id: impl Fn(&Matrix) -> bool, limit: u64) -> u64 {
    let mut p = g.clone();
    for k in 1..=limit {
        if is_id(&p) {
            return k;
        }
        p = p.mul(g, ring);
    }
    0
}

/// Linear order of a matrix: least `k` with `g^k = I` (up to `limit`).
pub fn matrix_order(g: &Matrix, ring: &RingSpec, limit: u64) -> u64 {
    element_order_with(g, ring, |m| m.is_identity(ring), limit)
}

/// Number of common elements of two groups over the same ring and mode.
pub fn intersection_order(a: &MatrixGroup, b: &MatrixGroup) -> usize {
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    small.encodings().filter(|k| large.position(k).is_some()).count()
}

/// `A ∩ B` as a group. Generators are chosen greedily from the common
/// elements and the closure is checked to reproduce exactly that set.
pub fn intersect(a: &MatrixGroup, b: &MatrixGroup) -> Result<MatrixGroup, GroupError> {
    if a.ring != b.ring || a.n != b.n || a.scalars != b.scalars {
        return Err(GroupError::Mismatch);
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let common: Vec<usize> = (0..small.order()).filter(|&k| large.position(small.key_at(k)).is_some()).collect();
    let budget = common.len();
    let mut gens: Vec<Matrix> = Vec::new();
    let mut h = small.subgroup_from(&[], budget)?;
    for &k in &common {
        if h.order() == common.len() {
            break;
        }
        let m = small.element(k);
        if !h.contains(&m) {
            gens.push(m);
            h = small.subgroup_from(&gens, budget)?;
        }
    }
    debug_assert_eq!(h.order(), common.len());
    Ok(h)
}

/// Which side matrices act on vectors from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `v ↦ g·v` on columns.
    Left,
    /// `v ↦ v·g` on rows.
    Right,
}

/// Orbit of `v` under `⟨gens⟩`, in breadth-first order.
pub fn orbit(v: &[Elem], gens: &[Matrix], ring: &RingSpec, side: Side) -> Vec<Vec<Elem>> {
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    seen.insert(v.to_vec());
    let mut out = vec![v.to_vec()];
    let mut k = 0;
    while k < out.len() {
        let w = out[k].clone();
        for g in gens {
            let u = match side {
                Side::Left => g.apply(&w, ring),
                Side::Right => g.apply_right(&w, ring),
            };
            if seen.insert(u.clone()) {
                out.push(u);
            }
        }
        k += 1;
    }
    out
}

/// The image of `⟨gens⟩` modulo every scalar matrix it contains.
///
/// The scalar subgroup is computed from the linear closure rather than
/// assumed.
pub fn projectivize(gens: &[Matrix], ring: &RingSpec, budget: usize) -> Result<MatrixGroup, GroupError> {
    let linear = MatrixGroup::closure(gens, ring, budget)?;
    let scalars = linear.scalar_subgroup();
    MatrixGroup::closure_projective(gens, ring, &scalars, budget)
}

/// Result of passing to the action on `V / rad`.
#[derive(Clone, Debug)]
pub struct RadicalQuotient {
    /// Generators acting on `V / rad`.
    pub induced_generators: Vec<Matrix>,
    /// The projective image (modulo the scalars it contains).
    pub image: MatrixGroup,
    /// Order of the linear action on `V / rad`.
    pub linear_order: usize,
    /// `|G|`, if the full closure fit in the budget.
    pub full_order: Option<usize>,
    /// `|G| / |image|`, when `|G|` is known.
    pub kernel_order: Option<usize>,
}

/// Projects `⟨gens⟩` to its action on `V / rad` modulo scalars.
///
/// The basis is changed to `[complement | radical]`; invariance of the
/// radical makes the generators block triangular and the leading block is
/// the induced action. The full closure is attempted for the kernel order
/// only; exceeding the budget there leaves it unknown.
pub fn quotient_by_radical_action(
    gens: &[Matrix],
    ring: &RingSpec,
    radical: &[Vec<Elem>],
    budget: usize,
) -> Result<RadicalQuotient, GroupError> {
    let n = gens.first().map_or(0, Matrix::dim);
    let k = radical.len();
    let basis = matrix::complete_basis(radical, n, ring);
    let p = matrix::from_columns(&basis);
    let p_inv = p.inverse(ring).ok_or(GroupError::NotInvariant)?;
    let mut induced = Vec::new();
    for g in gens {
        let h = g.conjugate_by(&p, &p_inv, ring);
        for i in 0..n - k {
            for j in n - k..n {
                if h.get(i, j) != Elem::ZERO {
                    return Err(GroupError::NotInvariant);
                }
            }
        }
        induced.push(h.leading_block(n - k));
    }
    if k == 0 {
        let image = MatrixGroup::closure(gens, ring, budget)?;
        let order = image.order();
        return Ok(RadicalQuotient {
            induced_generators: induced,
            image,
            linear_order: order,
            full_order: Some(order),
            kernel_order: Some(1),
        });
    }
    let linear = MatrixGroup::closure(&induced, ring, budget)?;
    let scalars = linear.scalar_subgroup();
    let image = MatrixGroup::closure_projective(&induced, ring, &scalars, budget)?;
    let full_order = match MatrixGroup::closure(gens, ring, budget) {
        Ok(g) => Some(g.order()),
        Err(GroupError::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(RadicalQuotient {
        induced_generators: induced,
        linear_order: linear.order(),
        kernel_order: full_order.map(|f| f / image.order()),
        full_order,
        image,
    })
}
