//! Seeded random generators used by property tests and the demo commands:
//! small matroids (via random transversal systems), tree specs over random
//! partitions, and generic matrices whose hulls are maximal polytropes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipartite::{ForestSpec, Partition};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::tropical::TropMatrix;
use crate::Rat;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Subset {
    Subset::from_bits(n, rng.gen_range(1..(1u32 << n)))
}

/// Whether the elements of `b` admit a perfect matching to the sets.
fn has_transversal(b: &[usize], sets: &[Subset], used: u32) -> bool {
    match b.split_first() {
        None => true,
        Some((&x, rest)) => (0..sets.len()).any(|j| {
            used >> j & 1 == 0 && sets[j].contains(x) && has_transversal(rest, sets, used | 1 << j)
        }),
    }
}

/// A random matroid on `n` elements: a transversal matroid from random
/// subsets, occasionally dualized or truncated for variety. Always passes
/// the exchange check.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    assert!((2..=7).contains(&n));
    loop {
        let r = rng.gen_range(1..n);
        let sets: Vec<Subset> = (0..r).map(|_| random_subset(rng, n)).collect();
        let bases: Vec<Subset> = Subset::all_of_size(n, r)
            .filter(|b| has_transversal(&b.to_vec(), &sets, 0))
            .collect();
        if bases.is_empty() {
            continue;
        }
        let mut m = Matroid::new(n, &bases).expect("transversal systems satisfy exchange");
        if rng.gen_bool(0.3) {
            m = m.dual();
        }
        if m.rank() > 1 && rng.gen_bool(0.25) {
            m = m.truncate(m.rank() - 1).unwrap();
        }
        return m;
    }
}

/// A random partition of blocks of size 2 or 3 into `k` blocks.
pub fn random_partition<R: Rng>(rng: &mut R, k: usize) -> Partition {
    let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(2..=3)).collect();
    Partition::from_sizes(&sizes).unwrap()
}

/// A random spanning tree of [k] with all edges crossing a random proper
/// bipartition, oriented out of the chosen side.
pub fn random_tree_spec<R: Rng>(rng: &mut R, k: usize) -> ForestSpec {
    assert!(k >= 2);
    let partition = random_partition(rng, k);
    let i_bits = rng.gen_range(1..(1u32 << k) - 1);
    let on_i = |v: usize| i_bits >> v & 1 == 1;
    let mut connected = vec![rng.gen_range(0..k)];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    while connected.len() < k {
        let u = loop {
            let u = rng.gen_range(0..k);
            if !connected.contains(&u) {
                break u;
            }
        };
        let partners: Vec<usize> = connected
            .iter()
            .copied()
            .filter(|&v| on_i(v) != on_i(u))
            .collect();
        if partners.is_empty() {
            continue;
        }
        let v = partners[rng.gen_range(0..partners.len())];
        edges.push(if on_i(u) { (u, v) } else { (v, u) });
        connected.push(u);
    }
    ForestSpec::new(partition, edges).expect("construction yields a valid tree spec")
}

/// A random k×k matrix with zero diagonal and off-diagonal entries in
/// (1, 2). Such entries satisfy the strict triangle inequality, so the
/// tropical hull of the rows is a polytrope, generically maximal.
pub fn random_generic_matrix<R: Rng>(rng: &mut R, k: usize) -> TropMatrix {
    let rows: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        Rat::from_integer(0)
                    } else {
                        Rat::from_integer(1) + Rat::new(rng.gen_range(1..=9999), 10000)
                    }
                })
                .collect()
        })
        .collect();
    TropMatrix::new(rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::realize_type;

    #[test]
    fn matroids_are_valid() {
        let mut r = rng(11);
        for _ in 0..40 {
            let n = r.gen_range(3..=7);
            let m = random_matroid(&mut r, n);
            assert_eq!(m.ground_size(), n);
            assert!(m.rank() >= 1);
        }
    }

    #[test]
    fn tree_specs_are_trees() {
        let mut r = rng(12);
        for _ in 0..40 {
            let k = r.gen_range(2..=6);
            let spec = random_tree_spec(&mut r, k);
            assert!(spec.is_tree());
            assert_eq!(spec.edges().len(), k - 1);
        }
    }

    #[test]
    fn generic_matrices_realize_maximal() {
        let mut r = rng(13);
        for _ in 0..5 {
            let t = realize_type(&random_generic_matrix(&mut r, 4)).unwrap();
            assert!(t.is_maximal());
        }
    }

    #[test]
    fn determinism() {
        let a = random_generic_matrix(&mut rng(99), 3);
        let b = random_generic_matrix(&mut rng(99), 3);
        assert_eq!(a, b);
    }
}
