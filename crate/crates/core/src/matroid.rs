//! Matroids as explicit base collections over small ground sets, with
//! exchange verification on by default.
//!
//! Rank is computed directly as the maximum overlap with a base, so every
//! derived quantity (flats, separators, connected components, duals) is
//! correct by definition and auditable at desk scale.

use std::sync::OnceLock;

use thiserror::Error;

use crate::subset::{GroundMap, Subset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("base collection is empty")]
    EmptyCollection,
    #[error("bases have mixed cardinalities ({0} and {1})")]
    MixedCardinality(usize, usize),
    #[error("exchange property violated: A={a:?}, B={b:?}, x={x} has no exchange partner")]
    ExchangeViolation { a: Subset, b: Subset, x: usize },
    #[error("element index {index} out of range for ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("rank {k} out of range (must be between 0 and {max})")]
    RankOutOfRange { k: usize, max: usize },
    #[error("ground map does not match matroid ground set")]
    MapMismatch,
    #[error("matroids have mismatched ground size or rank")]
    RankMismatch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
}

/// Outcome of the codimension-2 classification of two decompositions
/// `M(F)`, `M(L)`: when their base polytopes meet in a loopless
/// codimension-2 face, exactly one structural case applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Codim2Class {
    /// `F` and `L` disjoint; the intersection is `M(F ∪ L)`.
    DisjointUnion(Matroid),
    /// `F ∪ L` is the whole ground set; the intersection is `M(F ∩ L)`.
    CoveringIntersection(Matroid),
    /// `F ⊋ L`; the intersection is `M/F ⊕ M|_F/L ⊕ M|_L`.
    NestedChain(Matroid),
    NotApplicable,
}

/// A matroid on `[n]`, stored as its full base collection (sorted,
/// duplicate-free bitmasks). Immutable after construction; the component
/// partition is memoized behind a `OnceLock`.
#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u32>,
    components: OnceLock<Vec<Subset>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rank == other.rank && self.bases == other.bases
    }
}
impl Eq for Matroid {}

/// Membership structure for exchange checks: a flat bitset over all masks.
struct MaskSet {
    words: Vec<u64>,
}

impl MaskSet {
    fn new(n: usize, masks: &[u32]) -> Self {
        let mut words = vec![0u64; (1usize << n).div_ceil(64)];
        for &m in masks {
            words[(m >> 6) as usize] |= 1u64 << (m & 63);
        }
        MaskSet { words }
    }

    #[inline]
    fn contains(&self, m: u32) -> bool {
        self.words[(m >> 6) as usize] & (1u64 << (m & 63)) != 0
    }
}

impl Matroid {
    /// Builds a matroid from an explicit base collection, verifying the
    /// exchange property over all ordered pairs.
    pub fn new(n: usize, bases: &[Subset]) -> Result<Self, MatroidError> {
        let m = Self::new_unchecked(n, bases)?;
        m.verify_exchange()?;
        Ok(m)
    }

    /// Same as [`Matroid::new`] but skips exchange verification. For trusted
    /// constructions (duals, restrictions of verified matroids, ...).
    pub fn new_unchecked(n: usize, bases: &[Subset]) -> Result<Self, MatroidError> {
        if bases.is_empty() {
            return Err(MatroidError::EmptyCollection);
        }
        let rank = bases[0].len();
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            if b.ground_size() != n {
                return Err(MatroidError::IndexOutOfRange {
                    index: b.ground_size(),
                    n,
                });
            }
            if b.len() != rank {
                return Err(MatroidError::MixedCardinality(rank, b.len()));
            }
            masks.push(b.bits());
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Matroid {
            n,
            rank,
            bases: masks,
            components: OnceLock::new(),
        })
    }

    /// Full pairwise exchange check: for all bases `A`, `B` and `x ∈ A−B`
    /// there must be `y ∈ B−A` with `A−x+y` a base.
    pub fn verify_exchange(&self) -> Result<(), MatroidError> {
        let set = MaskSet::new(self.n, &self.bases);
        for &a in &self.bases {
            for &b in &self.bases {
                if a == b {
                    continue;
                }
                let mut xs = a & !b;
                while xs != 0 {
                    let xbit = xs & xs.wrapping_neg();
                    xs ^= xbit;
                    let without = a ^ xbit;
                    let mut ys = b & !a;
                    let mut found = false;
                    while ys != 0 {
                        let ybit = ys & ys.wrapping_neg();
                        ys ^= ybit;
                        if set.contains(without | ybit) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Err(MatroidError::ExchangeViolation {
                            a: Subset::from_bits(self.n, a),
                            b: Subset::from_bits(self.n, b),
                            x: xbit.trailing_zeros() as usize,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The `(k, [n])`-uniform matroid: all k-subsets are bases.
    pub fn uniform(k: usize, n: usize) -> Self {
        assert!(k <= n, "uniform({k},{n})");
        let bases: Vec<u32> = Subset::all_of_size(n, k).map(|s| s.bits()).collect();
        Matroid {
            n,
            rank: k,
            bases,
            components: OnceLock::new(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> impl Iterator<Item = Subset> + '_ {
        self.bases
            .iter()
            .map(move |&m| Subset::from_bits(self.n, m))
    }

    pub fn base_count(&self) -> usize {
        self.bases.len()
    }

    pub fn is_base(&self, b: &Subset) -> bool {
        b.ground_size() == self.n && self.bases.binary_search(&b.bits()).is_ok()
    }

    /// Rank of a subset: maximum overlap with a base.
    pub fn rank_of(&self, a: &Subset) -> usize {
        assert_eq!(a.ground_size(), self.n, "ground set mismatch");
        let bits = a.bits();
        self.bases
            .iter()
            .map(|&b| (b & bits).count_ones() as usize)
            .max()
            .unwrap()
    }

    pub fn is_independent(&self, a: &Subset) -> bool {
        self.rank_of(a) == a.len()
    }

    /// Elements contained in no base.
    pub fn loops(&self) -> Subset {
        let mut covered = 0u32;
        for &b in &self.bases {
            covered |= b;
        }
        Subset::from_bits(self.n, covered).complement()
    }

    /// Elements contained in every base.
    pub fn coloops(&self) -> Subset {
        let mut common = u32::MAX;
        for &b in &self.bases {
            common &= b;
        }
        Subset::from_bits(self.n, common & Subset::full(self.n).bits())
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub fn closure(&self, a: &Subset) -> Subset {
        let r = self.rank_of(a);
        let mut out = *a;
        for s in a.complement().iter() {
            if self.rank_of(&a.insert(s)) == r {
                out = out.insert(s);
            }
        }
        out
    }

    pub fn is_flat(&self, a: &Subset) -> bool {
        self.closure(a) == *a
    }

    /// All flats, by brute force over `2^n` subsets.
    pub fn flats(&self) -> Vec<Subset> {
        Subset::all(self.n).filter(|a| self.is_flat(a)).collect()
    }

    pub fn dual(&self) -> Matroid {
        let full = Subset::full(self.n).bits();
        let mut masks: Vec<u32> = self.bases.iter().map(|&b| !b & full).collect();
        masks.sort_unstable();
        Matroid {
            n: self.n,
            rank: self.n - self.rank,
            bases: masks,
            components: OnceLock::new(),
        }
    }

    /// Restriction `M|_A`, re-indexed to a ground set of size `|A|`
    /// (the i-th smallest element of `A` becomes element i).
    pub fn restrict(&self, a: &Subset) -> Result<Matroid, MatroidError> {
        if a.is_empty() {
            return Err(MatroidError::EmptySubset);
        }
        assert_eq!(a.ground_size(), self.n);
        let r = self.rank_of(a);
        let positions: Vec<usize> = a.iter().collect();
        let mut masks: Vec<u32> = self
            .bases
            .iter()
            .filter(|&&b| (b & a.bits()).count_ones() as usize == r)
            .map(|&b| compress_bits(b & a.bits(), &positions))
            .collect();
        masks.sort_unstable();
        masks.dedup();
        Ok(Matroid {
            n: positions.len(),
            rank: r,
            bases: masks,
            components: OnceLock::new(),
        })
    }

    /// Contraction `M/A`, re-indexed to a ground set of size `n − |A|`.
    pub fn contract(&self, a: &Subset) -> Result<Matroid, MatroidError> {
        if a.is_empty() {
            return Err(MatroidError::EmptySubset);
        }
        assert_eq!(a.ground_size(), self.n);
        let r = self.rank_of(a);
        let comp = a.complement();
        let positions: Vec<usize> = comp.iter().collect();
        let mut masks: Vec<u32> = self
            .bases
            .iter()
            .filter(|&&b| (b & a.bits()).count_ones() as usize == r)
            .map(|&b| compress_bits(b & comp.bits(), &positions))
            .collect();
        masks.sort_unstable();
        masks.dedup();
        Ok(Matroid {
            n: positions.len(),
            rank: self.rank - r,
            bases: masks,
            components: OnceLock::new(),
        })
    }

    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let n = self.n + other.n;
        let mut masks = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &a in &self.bases {
            for &b in &other.bases {
                masks.push(a | (b << self.n));
            }
        }
        masks.sort_unstable();
        Matroid {
            n,
            rank: self.rank + other.rank,
            bases: masks,
            components: OnceLock::new(),
        }
    }

    /// `M(A) = M|_A ⊕ M/A`, kept on the original ground set labeling.
    pub fn decompose(&self, a: &Subset) -> Matroid {
        assert_eq!(a.ground_size(), self.n);
        let r = self.rank_of(a);
        let abits = a.bits();
        let mut traces: Vec<u32> = Vec::new();
        let mut cotraces: Vec<u32> = Vec::new();
        for &b in &self.bases {
            if (b & abits).count_ones() as usize == r {
                traces.push(b & abits);
                cotraces.push(b & !abits);
            }
        }
        traces.sort_unstable();
        traces.dedup();
        cotraces.sort_unstable();
        cotraces.dedup();
        let mut masks = Vec::with_capacity(traces.len() * cotraces.len());
        for &t in &traces {
            for &c in &cotraces {
                masks.push(t | c);
            }
        }
        masks.sort_unstable();
        Matroid {
            n: self.n,
            rank: self.rank,
            bases: masks,
            components: OnceLock::new(),
        }
    }

    /// Connected components: the partition of the ground set into
    /// inclusionwise minimal nonempty separators. Computed from the basis
    /// exchange graph (i ~ j when some base swaps i for j); loops and
    /// coloops come out as singleton components.
    pub fn components(&self) -> &[Subset] {
        self.components.get_or_init(|| {
            let set = MaskSet::new(self.n, &self.bases);
            let mut parent: Vec<usize> = (0..self.n).collect();
            fn find(parent: &mut [usize], i: usize) -> usize {
                let mut i = i;
                while parent[i] != i {
                    parent[i] = parent[parent[i]];
                    i = parent[i];
                }
                i
            }
            for &b in &self.bases {
                let full = Subset::full(self.n).bits();
                let mut xs = b;
                while xs != 0 {
                    let xbit = xs & xs.wrapping_neg();
                    xs ^= xbit;
                    let mut ys = !b & full;
                    while ys != 0 {
                        let ybit = ys & ys.wrapping_neg();
                        ys ^= ybit;
                        if set.contains((b ^ xbit) | ybit) {
                            let (i, j) = (
                                xbit.trailing_zeros() as usize,
                                ybit.trailing_zeros() as usize,
                            );
                            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                            if ri != rj {
                                parent[ri] = rj;
                            }
                        }
                    }
                }
            }
            let mut groups: Vec<Subset> = Vec::new();
            let mut rep_of: Vec<Option<usize>> = vec![None; self.n];
            for i in 0..self.n {
                let r = find(&mut parent, i);
                match rep_of[r] {
                    Some(g) => groups[g] = groups[g].insert(i),
                    None => {
                        rep_of[r] = Some(groups.len());
                        groups.push(Subset::singleton(self.n, i));
                    }
                }
            }
            groups
        })
    }

    /// Number of connected components κ(M).
    pub fn kappa(&self) -> usize {
        self.components().len()
    }

    pub fn is_inseparable(&self) -> bool {
        self.kappa() == 1
    }

    /// Oracle variant of [`Matroid::components`]: brute-force search for
    /// minimal separators over all `2^n` subsets. Used to cross-check the
    /// exchange-graph computation.
    pub fn components_brute_force(&self) -> Vec<Subset> {
        let mut comp_of: Vec<Subset> = (0..self.n).map(|_| Subset::full(self.n)).collect();
        for a in Subset::all(self.n) {
            if self.is_separator(&a) {
                for i in 0..self.n {
                    if a.contains(i) {
                        comp_of[i] = comp_of[i].intersection(&a);
                    }
                }
            }
        }
        let mut groups: Vec<Subset> = Vec::new();
        for i in 0..self.n {
            if !groups.contains(&comp_of[i]) {
                groups.push(comp_of[i]);
            }
        }
        groups
    }

    pub fn is_separator(&self, a: &Subset) -> bool {
        self.is_modular_pair(a, &a.complement())
    }

    /// `{F, L}` is a modular pair when `r(F) + r(L) = r(F∪L) + r(F∩L)`.
    pub fn is_modular_pair(&self, f: &Subset, l: &Subset) -> bool {
        self.rank_of(f) + self.rank_of(l)
            == self.rank_of(&f.union(l)) + self.rank_of(&f.intersection(l))
    }

    /// `A` is non-degenerate when `κ(M(A)) = κ(M) + 1`.
    pub fn is_nondegenerate(&self, a: &Subset) -> bool {
        if !a.is_proper_nonempty() {
            return false;
        }
        self.decompose(a).kappa() == self.kappa() + 1
    }

    /// All non-degenerate flats: exactly the flats whose rank inequality
    /// x(F) ≤ r(F) cuts out a facet of the base polytope (restriction and
    /// contraction both connected within their component).
    pub fn nondegenerate_flats(&self) -> Vec<Subset> {
        self.flats()
            .into_iter()
            .filter(|f| self.is_nondegenerate(f))
            .collect()
    }

    /// Inclusionwise minimal flats among the non-degenerate flats.
    pub fn minimal_nondegenerate_flats(&self) -> Vec<Subset> {
        let nondeg = self.nondegenerate_flats();
        nondeg
            .iter()
            .filter(|f| !nondeg.iter().any(|g| g != *f && g.is_subset_of(f)))
            .copied()
            .collect()
    }

    /// Truncation `M^{(≤k)}`: bases are the independent k-sets.
    pub fn truncate(&self, k: usize) -> Result<Matroid, MatroidError> {
        if k > self.rank {
            return Err(MatroidError::RankOutOfRange { k, max: self.rank });
        }
        let masks: Vec<u32> = Subset::all_of_size(self.n, k)
            .filter(|a| self.is_independent(a))
            .map(|a| a.bits())
            .collect();
        let mut masks = masks;
        masks.sort_unstable();
        Ok(Matroid {
            n: self.n,
            rank: k,
            bases: masks,
            components: OnceLock::new(),
        })
    }

    /// Independent sets of the pullback `f*(M)`: subsets `A` of the domain
    /// with `f` injective on `A` and `f(A)` independent in `M`.
    pub fn pullback(f: &GroundMap, m: &Matroid) -> Result<Matroid, MatroidError> {
        if f.codomain_size != m.n {
            return Err(MatroidError::MapMismatch);
        }
        let n = f.domain_size;
        let mut best = 0usize;
        let mut bases: Vec<u32> = Vec::new();
        for a in Subset::all(n) {
            let img = f.map_subset(&a);
            if img.len() == a.len() && m.is_independent(&img) {
                match a.len().cmp(&best) {
                    std::cmp::Ordering::Greater => {
                        best = a.len();
                        bases.clear();
                        bases.push(a.bits());
                    }
                    std::cmp::Ordering::Equal => bases.push(a.bits()),
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        bases.sort_unstable();
        Ok(Matroid {
            n,
            rank: best,
            bases,
            components: OnceLock::new(),
        })
    }

    /// Independent sets of the pushforward `f_*(M)`: images of independent
    /// sets of `M`.
    pub fn pushforward(f: &GroundMap, m: &Matroid) -> Result<Matroid, MatroidError> {
        if f.domain_size != m.n {
            return Err(MatroidError::MapMismatch);
        }
        let n = f.codomain_size;
        let mut best = 0usize;
        let mut bases: Vec<u32> = Vec::new();
        for a in Subset::all(m.n) {
            if m.is_independent(&a) {
                let img = f.map_subset(&a);
                match img.len().cmp(&best) {
                    std::cmp::Ordering::Greater => {
                        best = img.len();
                        bases.clear();
                        bases.push(img.bits());
                    }
                    std::cmp::Ordering::Equal => bases.push(img.bits()),
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(Matroid {
            n,
            rank: best,
            bases,
            components: OnceLock::new(),
        })
    }

    /// Simplification: pushforward under the parallel-class map. Requires a
    /// loopless matroid. Returns the simplified matroid together with the
    /// class map.
    pub fn simplify(&self) -> Result<(Matroid, GroundMap), MatroidError> {
        if !self.is_loopless() {
            return Err(MatroidError::PreconditionViolated("matroid has loops"));
        }
        let mut class_of: Vec<Option<usize>> = vec![None; self.n];
        let mut classes = 0usize;
        for i in 0..self.n {
            if class_of[i].is_some() {
                continue;
            }
            class_of[i] = Some(classes);
            for j in (i + 1)..self.n {
                if class_of[j].is_none() {
                    let pair = Subset::singleton(self.n, i).insert(j);
                    if self.rank_of(&pair) == 1 {
                        class_of[j] = Some(classes);
                    }
                }
            }
            classes += 1;
        }
        let image: Vec<usize> = class_of.into_iter().map(|c| c.unwrap()).collect();
        let f = GroundMap::new(self.n, classes, image)?;
        let simple = Matroid::pushforward(&f, self)?;
        Ok((simple, f))
    }

    /// Intersection of the base collections. The second component is the
    /// matroid with those bases when the exchange property holds.
    pub fn base_intersection(
        m1: &Matroid,
        m2: &Matroid,
    ) -> Result<(Vec<Subset>, Option<Matroid>), MatroidError> {
        if m1.n != m2.n || m1.rank != m2.rank {
            return Err(MatroidError::RankMismatch);
        }
        let common: Vec<u32> = m1
            .bases
            .iter()
            .filter(|&&b| m2.bases.binary_search(&b).is_ok())
            .copied()
            .collect();
        let subsets: Vec<Subset> = common.iter().map(|&b| Subset::from_bits(m1.n, b)).collect();
        let matroid = if subsets.is_empty() {
            None
        } else {
            Matroid::new(m1.n, &subsets).ok()
        };
        Ok((subsets, matroid))
    }

    /// Initial matroid `M_u`: the bases maximizing `Σ_{i∈B} u_i`. Its base
    /// polytope is the face of `BP_M` maximizing `u`.
    pub fn initial_matroid(&self, u: &[i64]) -> Matroid {
        assert_eq!(u.len(), self.n, "weight vector length mismatch");
        let weight = |b: u32| -> i64 {
            (0..self.n)
                .filter(|&i| b & (1 << i) != 0)
                .map(|i| u[i])
                .sum()
        };
        let best = self.bases.iter().map(|&b| weight(b)).max().unwrap();
        let masks: Vec<u32> = self
            .bases
            .iter()
            .filter(|&&b| weight(b) == best)
            .copied()
            .collect();
        Matroid {
            n: self.n,
            rank: self.rank,
            bases: masks,
            components: OnceLock::new(),
        }
    }

    /// Classifies two distinct non-degenerate flats whose decompositions
    /// meet in a loopless codimension-2 face: disjoint, covering, or nested.
    pub fn classify_codim2(&self, f: &Subset, l: &Subset) -> Result<Codim2Class, MatroidError> {
        if !self.is_inseparable() || self.rank < 3 {
            return Err(MatroidError::PreconditionViolated(
                "matroid must be inseparable of rank >= 3",
            ));
        }
        if f == l {
            return Ok(Codim2Class::NotApplicable);
        }
        // Normalize to r(F) >= r(L); the intersection is symmetric.
        let (f, l) = if self.rank_of(f) >= self.rank_of(l) {
            (*f, *l)
        } else {
            (*l, *f)
        };
        let mf = self.decompose(&f);
        let ml = self.decompose(&l);
        let (common, matroid) = Matroid::base_intersection(&mf, &ml)?;
        if common.is_empty() {
            return Ok(Codim2Class::NotApplicable);
        }
        let inter = match matroid {
            Some(m) => m,
            None => return Ok(Codim2Class::NotApplicable),
        };
        if !inter.is_loopless() || inter.kappa() != self.kappa() + 2 {
            return Ok(Codim2Class::NotApplicable);
        }
        let table = if f.is_disjoint_from(&l) {
            Codim2Class::DisjointUnion(self.decompose(&f.union(&l)))
        } else if f.union(&l).is_full() {
            Codim2Class::CoveringIntersection(self.decompose(&f.intersection(&l)))
        } else if l.is_subset_of(&f) {
            // M/F ⊕ M|_F/L ⊕ M|_L on the original labels = (M(F))(L).
            Codim2Class::NestedChain(mf.decompose(&l))
        } else {
            return Ok(Codim2Class::NotApplicable);
        };
        let factored = match &table {
            Codim2Class::DisjointUnion(m)
            | Codim2Class::CoveringIntersection(m)
            | Codim2Class::NestedChain(m) => m,
            Codim2Class::NotApplicable => unreachable!(),
        };
        if factored != &inter {
            return Ok(Codim2Class::NotApplicable);
        }
        Ok(table)
    }
}

fn compress_bits(bits: u32, positions: &[usize]) -> u32 {
    let mut out = 0u32;
    for (new, &old) in positions.iter().enumerate() {
        if bits & (1 << old) != 0 {
            out |= 1 << new;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(n: usize, lists: &[&[usize]]) -> Vec<Subset> {
        lists
            .iter()
            .map(|l| Subset::from_indices(n, l).unwrap())
            .collect()
    }

    #[test]
    fn make_matroid_uniform() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(u24.base_count(), 6);
        u24.verify_exchange().unwrap();
        let from_bases = Matroid::new(
            4,
            &subsets(4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]),
        )
        .unwrap();
        assert_eq!(from_bases, u24);
    }

    #[test]
    fn make_matroid_errors() {
        assert_eq!(
            Matroid::new(3, &[]).unwrap_err(),
            MatroidError::EmptyCollection
        );
        assert!(matches!(
            Matroid::new(3, &subsets(3, &[&[0, 1], &[2]])).unwrap_err(),
            MatroidError::MixedCardinality(..)
        ));
        // {0,1} and {2,3} cannot exchange.
        assert!(matches!(
            Matroid::new(4, &subsets(4, &[&[0, 1], &[2, 3]])).unwrap_err(),
            MatroidError::ExchangeViolation { .. }
        ));
        // Hand oracle: exchange holds for {{0,1},{0,2}}.
        assert!(Matroid::new(3, &subsets(3, &[&[0, 1], &[0, 2]])).is_ok());
    }

    #[test]
    fn rank_basics() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(
            u24.rank_of(&Subset::from_indices(4, &[0, 1, 2]).unwrap()),
            2
        );
        assert_eq!(u24.rank_of(&Subset::empty(4)), 0);
    }

    #[test]
    fn rank_axioms_exhaustive_small() {
        for m in [
            Matroid::uniform(2, 5),
            Matroid::uniform(1, 3).direct_sum(&Matroid::uniform(2, 3)),
            Matroid::new(3, &subsets(3, &[&[0, 1], &[0, 2]])).unwrap(),
        ] {
            let n = m.ground_size();
            for a in Subset::all(n) {
                let ra = m.rank_of(&a);
                assert!(ra <= a.len());
                for b in Subset::all(n) {
                    let rb = m.rank_of(&b);
                    if a.is_subset_of(&b) {
                        assert!(ra <= rb);
                    }
                    assert!(
                        m.rank_of(&a.union(&b)) + m.rank_of(&a.intersection(&b)) <= ra + rb,
                        "submodularity failed"
                    );
                }
            }
        }
    }

    #[test]
    fn closure_and_flats() {
        let u24 = Matroid::uniform(2, 4);
        let s0 = Subset::singleton(4, 0);
        assert_eq!(u24.closure(&s0), s0);
        assert!(u24.is_flat(&s0));
        // Flats of U(2,4): empty set, 4 singletons, full set.
        assert_eq!(u24.flats().len(), 6);
        // Intersection of flats is a flat.
        let flats = u24.flats();
        for f in &flats {
            for g in &flats {
                assert!(u24.is_flat(&f.intersection(g)));
            }
        }
    }

    #[test]
    fn dual_involution() {
        let m = Matroid::uniform(2, 5);
        assert_eq!(m.dual(), Matroid::uniform(3, 5));
        assert_eq!(m.dual().dual(), m);
        assert_eq!(m.dual().kappa(), m.kappa());
    }

    #[test]
    fn restrict_contract_decompose() {
        let u24 = Matroid::uniform(2, 4);
        let a01 = Subset::from_indices(4, &[0, 1]).unwrap();
        assert_eq!(u24.restrict(&a01).unwrap(), Matroid::uniform(2, 2));
        assert_eq!(
            u24.contract(&Subset::singleton(4, 0)).unwrap(),
            Matroid::uniform(1, 3)
        );
        assert_eq!(
            u24.restrict(&Subset::empty(4)).unwrap_err(),
            MatroidError::EmptySubset
        );
        // decompose keeps the labeling: M({0,1}) = U(2, {0,1}) ⊕ U(0, {2,3}).
        let d = u24.decompose(&a01);
        assert_eq!(d.base_count(), 1);
        assert!(d.is_base(&a01));
    }

    #[test]
    fn components_match_brute_force() {
        let samples = [
            Matroid::uniform(2, 4),
            Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 3)),
            Matroid::uniform(2, 4).decompose(&Subset::from_indices(4, &[0, 1]).unwrap()),
            Matroid::uniform(0, 2).direct_sum(&Matroid::uniform(2, 2)),
        ];
        for m in samples {
            let fast = m.components().to_vec();
            let brute = m.components_brute_force();
            let mut fast_sorted = fast.clone();
            let mut brute_sorted = brute.clone();
            fast_sorted.sort();
            brute_sorted.sort();
            assert_eq!(fast_sorted, brute_sorted, "components disagree for {m:?}");
        }
    }

    #[test]
    fn kappa_counts() {
        let m = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2));
        assert_eq!(m.kappa(), 2);
        assert!(Matroid::uniform(2, 4).is_inseparable());
    }

    #[test]
    fn modular_pairs() {
        let u24 = Matroid::uniform(2, 4);
        let f = Subset::from_indices(4, &[0, 1]).unwrap();
        let l = Subset::from_indices(4, &[2, 3]).unwrap();
        // r(F)+r(L)=4 but r(F∪L)+r(F∩L)=2.
        assert!(!u24.is_modular_pair(&f, &l));
        assert!(u24.is_modular_pair(&f, &f));
        let nested = Subset::singleton(4, 0);
        assert!(u24.is_modular_pair(&nested, &f));
    }

    #[test]
    fn nondegenerate_subsets() {
        let u24 = Matroid::uniform(2, 4);
        // κ(U(1,1) ⊕ U(1,3)) = 2 = κ(M)+1.
        assert!(u24.is_nondegenerate(&Subset::singleton(4, 0)));
        let mins = u24.minimal_nondegenerate_flats();
        assert_eq!(mins.len(), 4);
        assert!(mins.iter().all(|f| f.len() == 1));
        // Every separator is degenerate.
        let sep = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2));
        let a = Subset::from_indices(4, &[0, 1]).unwrap();
        assert!(sep.is_separator(&a));
        assert!(!sep.is_nondegenerate(&a));
    }

    #[test]
    fn truncation() {
        let m = Matroid::uniform(1, 3).direct_sum(&Matroid::uniform(3, 3));
        let t = m.truncate(3).unwrap();
        assert_eq!(t.rank(), 3);
        assert_eq!(m.truncate(m.rank()).unwrap(), m);
        assert!(m.truncate(5).is_err());
        // slicing fixes the rank of the cut set: {0,1,2} has rank 1 here
        let f = Subset::from_indices(6, &[0, 1, 2]).unwrap();
        assert_eq!(t.rank_of(&f), 1);
    }

    #[test]
    fn pullback_pushforward() {
        let u22 = Matroid::uniform(2, 2);
        let f = GroundMap::new(4, 2, vec![0, 0, 1, 1]).unwrap();
        let pb = Matroid::pullback(&f, &u22).unwrap();
        assert_eq!(pb.rank(), 2);
        assert_eq!(pb.base_count(), 4); // one element per fiber
        let ident = GroundMap::identity(2);
        assert_eq!(Matroid::pullback(&ident, &u22).unwrap(), u22);
        // Simplification of the doubled matroid is uniform again.
        let (simple, map) = pb.simplify().unwrap();
        assert_eq!(simple, Matroid::uniform(2, 2));
        assert_eq!(Matroid::pullback(&map, &simple).unwrap(), pb);
    }

    #[test]
    fn base_intersection_basics() {
        let m = Matroid::uniform(2, 4);
        let (common, mat) = Matroid::base_intersection(&m, &m).unwrap();
        assert_eq!(common.len(), 6);
        assert_eq!(mat.unwrap(), m);
        let big = Matroid::uniform(3, 6);
        let f = big.decompose(&Subset::singleton(6, 0));
        let l = big.decompose(&Subset::singleton(6, 1));
        let (common, mat) = Matroid::base_intersection(&f, &l).unwrap();
        // Bases containing both 0 and 1.
        assert_eq!(common.len(), 4);
        assert_eq!(
            mat.unwrap(),
            big.decompose(&Subset::from_indices(6, &[0, 1]).unwrap())
        );
        // Disjoint faces: vertex (1,1,0,0) vs vertex (1,0,1,0) of U(2,4).
        let vf = m.decompose(&Subset::from_indices(4, &[0, 1]).unwrap());
        let vl = m.decompose(&Subset::from_indices(4, &[0, 2]).unwrap());
        let (common, mat) = Matroid::base_intersection(&vf, &vl).unwrap();
        assert!(common.is_empty() && mat.is_none());
    }

    #[test]
    fn initial_matroids() {
        let m = Matroid::uniform(2, 4);
        assert_eq!(m.initial_matroid(&[0, 0, 0, 0]), m);
        let init = m.initial_matroid(&[1, 1, 0, 0]);
        assert_eq!(init.base_count(), 1);
        assert!(init.is_base(&Subset::from_indices(4, &[0, 1]).unwrap()));
        // Facet identity: initial wrt 1^F equals M(F) for non-degenerate flats.
        for f in m.flats() {
            if m.is_nondegenerate(&f) {
                let mut u = vec![0i64; 4];
                for i in f.iter() {
                    u[i] = 1;
                }
                assert_eq!(m.initial_matroid(&u), m.decompose(&f));
            }
        }
    }

    #[test]
    fn codim2_classification() {
        let m = Matroid::uniform(3, 6);
        // Disjoint singleton flats: M(F)∩M(L) = M(F∪L).
        let f = Subset::singleton(6, 0);
        let l = Subset::singleton(6, 1);
        match m.classify_codim2(&f, &l).unwrap() {
            Codim2Class::DisjointUnion(d) => {
                assert_eq!(d, m.decompose(&f.union(&l)));
            }
            other => panic!("expected DisjointUnion, got {other:?}"),
        }
        assert!(matches!(
            Matroid::uniform(1, 2)
                .direct_sum(&Matroid::uniform(1, 2))
                .classify_codim2(&f.intersection(&f), &l)
                .unwrap_err(),
            MatroidError::PreconditionViolated(_)
        ));
    }
}
