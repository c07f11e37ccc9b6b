//! Subsets of a finite ground set `[n] = {0, ..., n-1}`, stored as bitmasks,
//! and maps between ground sets.

use std::fmt;

use crate::matroid::MatroidError;

/// Largest ground set we support. Everything here is desk scale; a `u32`
/// mask keeps all set operations branch-free.
pub const MAX_GROUND: usize = 25;

/// A subset of `[n]`. Canonical by construction: the representation is a
/// bitmask, so equality is structural and there are no duplicates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u32,
    n: usize,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large: {n}");
        Subset { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large: {n}");
        Subset {
            bits: if n == 0 { 0 } else { (1u32 << n) - 1 },
            n,
        }
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        assert!(i < n && n <= MAX_GROUND);
        Subset { bits: 1 << i, n }
    }

    /// Builds a subset from raw bits; bits at positions `>= n` must be zero.
    pub fn from_bits(n: usize, bits: u32) -> Self {
        assert!(n <= MAX_GROUND);
        assert_eq!(bits & !Subset::full(n).bits, 0, "bits out of range");
        Subset { bits, n }
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self, MatroidError> {
        let mut bits = 0u32;
        for &i in indices {
            if i >= n {
                return Err(MatroidError::IndexOutOfRange { index: i, n });
            }
            bits |= 1 << i;
        }
        Ok(Subset::from_bits(n, bits))
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == Subset::full(self.n).bits
    }

    /// Nonempty and not the whole ground set.
    pub fn is_proper_nonempty(&self) -> bool {
        !self.is_empty() && !self.is_full()
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.bits & (1 << i) != 0
    }

    pub fn insert(&self, i: usize) -> Self {
        assert!(i < self.n);
        Subset {
            bits: self.bits | (1 << i),
            n: self.n,
        }
    }

    pub fn remove(&self, i: usize) -> Self {
        assert!(i < self.n);
        Subset {
            bits: self.bits & !(1 << i),
            n: self.n,
        }
    }

    pub fn union(&self, other: &Subset) -> Self {
        assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Self {
        assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    pub fn difference(&self, other: &Subset) -> Self {
        assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    pub fn complement(&self) -> Self {
        Subset {
            bits: !self.bits & Subset::full(self.n).bits,
            n: self.n,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(&self, other: &Subset) -> bool {
        self.n == other.n && self.bits & other.bits == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.bits & (1 << i) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `[n]`, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n <= MAX_GROUND);
        (0..=Subset::full(n).bits).map(move |bits| Subset { bits, n })
    }

    /// All k-element subsets of `[n]`, in mask order (Gosper's hack).
    pub fn all_of_size(n: usize, k: usize) -> impl Iterator<Item = Subset> {
        assert!(n <= MAX_GROUND && k <= n);
        let limit = Subset::full(n).bits;
        let first = if k == 0 { 0 } else { (1u32 << k) - 1 };
        std::iter::successors(Some(first), move |&m| {
            if m == 0 {
                return None;
            }
            let c = m & m.wrapping_neg();
            let r = m + c;
            let next = (((r ^ m) >> 2) / c) | r;
            (next <= limit && next > m).then_some(next)
        })
        .take_while(move |&m| m <= limit)
        .map(move |bits| Subset { bits, n })
        .take(if k == 0 { 1 } else { usize::MAX })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, i) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.n)
    }
}

/// A map `[domain_size] -> [codomain_size]`, used for pullback, pushforward
/// and simplification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundMap {
    pub domain_size: usize,
    pub codomain_size: usize,
    pub image: Vec<usize>,
}

impl GroundMap {
    pub fn new(
        domain_size: usize,
        codomain_size: usize,
        image: Vec<usize>,
    ) -> Result<Self, MatroidError> {
        if image.len() != domain_size {
            return Err(MatroidError::MapMismatch);
        }
        for &v in &image {
            if v >= codomain_size {
                return Err(MatroidError::IndexOutOfRange {
                    index: v,
                    n: codomain_size,
                });
            }
        }
        Ok(GroundMap {
            domain_size,
            codomain_size,
            image,
        })
    }

    pub fn identity(n: usize) -> Self {
        GroundMap {
            domain_size: n,
            codomain_size: n,
            image: (0..n).collect(),
        }
    }

    /// Image of a subset of the domain.
    pub fn map_subset(&self, a: &Subset) -> Subset {
        assert_eq!(a.ground_size(), self.domain_size);
        let mut out = Subset::empty(self.codomain_size);
        for i in a.iter() {
            out = out.insert(self.image[i]);
        }
        out
    }

    /// Preimage of a subset of the codomain.
    pub fn preimage(&self, a: &Subset) -> Subset {
        assert_eq!(a.ground_size(), self.codomain_size);
        let mut out = Subset::empty(self.domain_size);
        for i in 0..self.domain_size {
            if a.contains(self.image[i]) {
                out = out.insert(i);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_basics() {
        let a = Subset::from_indices(5, &[0, 2, 4]).unwrap();
        assert_eq!(a.len(), 3);
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(a.complement().to_vec(), vec![1, 3]);
        assert_eq!(a.union(&Subset::singleton(5, 1)).len(), 4);
        assert!(Subset::from_indices(3, &[3]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Subset::all(4).count(), 16);
        assert_eq!(Subset::all_of_size(6, 3).count(), 20);
        assert_eq!(Subset::all_of_size(8, 4).count(), 70);
        assert_eq!(Subset::all_of_size(4, 0).count(), 1);
        assert_eq!(Subset::all_of_size(4, 4).count(), 1);
    }

    #[test]
    fn ground_map_roundtrip() {
        let f = GroundMap::new(4, 2, vec![0, 0, 1, 1]).unwrap();
        let a = Subset::from_indices(4, &[0, 3]).unwrap();
        assert_eq!(f.map_subset(&a), Subset::full(2));
        assert_eq!(f.preimage(&Subset::singleton(2, 0)).to_vec(), vec![0, 1]);
    }
}
