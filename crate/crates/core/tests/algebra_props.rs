//! Property tests over seeded random inputs: tropical determinant algebra,
//! hull membership, vertex realization round-trips, and decomposition
//! idempotence.

use polytrope::matroid::Matroid;
use polytrope::sample::{random_generic_matrix, random_matroid, rng};
use polytrope::subset::Subset;
use polytrope::tropical::{
    expression_of_point, is_direction, realize_type, realize_vertex, tconv_member, trop_det,
    ProjectivePoint, TropMatrix,
};
use polytrope::Rat;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn determinant_is_stable_under_row_shifts_and_swaps(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let k = r.gen_range(3..=5usize);
        let v = random_generic_matrix(&mut r, k);
        let (d, _) = trop_det(&v);

        let shift = Rat::new(r.gen_range(1..100), 7);
        let row = r.gen_range(0..k);
        let shifted: Vec<Vec<Rat>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| v.entry(i, j) + if i == row { shift } else { Rat::from_integer(0) })
                    .collect()
            })
            .collect();
        let (d2, _) = trop_det(&TropMatrix::new(shifted).unwrap());
        prop_assert_eq!(d2, d + shift);

        let (a, b) = (r.gen_range(0..k), r.gen_range(0..k));
        let mut rows: Vec<Vec<Rat>> = (0..k).map(|i| v.row(i).to_vec()).collect();
        rows.swap(a, b);
        let (d3, _) = trop_det(&TropMatrix::new(rows).unwrap());
        prop_assert_eq!(d3, d);
    }

    #[test]
    fn min_plus_combinations_stay_in_the_hull(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let k = r.gen_range(3..=5usize);
        let v = random_generic_matrix(&mut r, k);
        for _ in 0..8 {
            let lambda: Vec<Rat> = (0..k).map(|_| Rat::new(r.gen_range(0..50), 13)).collect();
            let coords: Vec<Rat> = (0..k)
                .map(|j| (0..k).map(|i| lambda[i] + v.entry(i, j)).min().unwrap())
                .collect();
            prop_assert!(tconv_member(&v, &ProjectivePoint::new(coords)));
        }
    }

    #[test]
    fn vertex_realizations_round_trip(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let k = r.gen_range(3..=4usize);
        let v = random_generic_matrix(&mut r, k);
        let t = realize_type(&v).unwrap();
        prop_assert!(t.is_maximal());
        let points: Vec<ProjectivePoint> = t
            .vertices
            .iter()
            .map(|e| realize_vertex(&v, e).unwrap())
            .collect();
        for (e, x) in t.vertices.iter().zip(&points) {
            prop_assert!(tconv_member(&v, x));
            prop_assert_eq!(&expression_of_point(&v, x).unwrap(), e);
        }
        // every 1-skeleton edge runs along a 0/1 direction given by its logs
        for edge in &t.edges {
            let (xa, xb) = (&points[edge.a], &points[edge.b]);
            prop_assert!(is_direction(xa, xb, &edge.log_a) || is_direction(xb, xa, &edge.log_a));
        }
    }

    #[test]
    fn decompose_is_idempotent(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let n = r.gen_range(3..=7usize);
        let m = random_matroid(&mut r, n);
        let a = Subset::from_bits(n, r.gen_range(1..(1u32 << n) - 1));
        let once = m.decompose(&a);
        prop_assert_eq!(&once.decompose(&a), &once);
        prop_assert!(once.bases().all(|b| m.is_base(&b)));
    }

    #[test]
    fn restriction_and_contraction_ranks_add_up(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let n = r.gen_range(3..=7usize);
        let m = random_matroid(&mut r, n);
        let a = Subset::from_bits(n, r.gen_range(1..(1u32 << n) - 1));
        let restricted = m.restrict(&a).unwrap();
        let contracted = m.contract(&a).unwrap();
        prop_assert_eq!(restricted.rank(), m.rank_of(&a));
        prop_assert_eq!(restricted.rank() + contracted.rank(), m.rank());
    }
}

#[test]
fn matroid_equality_uses_sorted_bases() {
    let m = Matroid::uniform(2, 4);
    let again = Matroid::new(4, &m.bases().collect::<Vec<_>>()).unwrap();
    assert_eq!(m, again);
}
