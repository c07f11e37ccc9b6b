//! End-to-end runs: realize a polytrope from a random generic matrix, build
//! the dual matroid subdivision, verify coverage and duality, and scan the
//! rank-4 family for forbidden split patterns.

use polytrope::bipartite::Partition;
use polytrope::matroid::Matroid;
use polytrope::sample::{random_generic_matrix, rng};
use polytrope::subdivision::{
    build_sigma_star, build_tilde, check_duality, splits_lemma_scan, verify_subdivision,
};
use polytrope::subset::Subset;
use polytrope::tropical::realize_type;

#[test]
fn random_hexagon_pipelines() {
    let mut r = rng(301);
    let partition = Partition::from_sizes(&[2, 2, 2]).unwrap();
    for _ in 0..10 {
        let t = realize_type(&random_generic_matrix(&mut r, 3)).unwrap();
        assert_eq!(t.vertices.len(), 6);
        let tiling = build_sigma_star(&t, &partition).unwrap();
        let report = verify_subdivision(&tiling).unwrap();
        assert!(report.all_pass());
        assert!(check_duality(&tiling, &t, &partition).unwrap());
        // each cell's dual degree matches the polytrope vertex degree
        for v in 0..6 {
            assert_eq!(report.dual.degree(v), t.degree(v));
        }
    }
}

#[test]
fn uneven_blocks_still_tile() {
    let mut r = rng(302);
    let partition = Partition::from_sizes(&[2, 3, 2]).unwrap();
    for _ in 0..3 {
        let t = realize_type(&random_generic_matrix(&mut r, 3)).unwrap();
        let tiling = build_sigma_star(&t, &partition).unwrap();
        let report = verify_subdivision(&tiling).unwrap();
        assert!(report.all_pass());
        assert!(check_duality(&tiling, &t, &partition).unwrap());
        // the mirrored tiling covers the complementary hypersimplex
        let dual_report = verify_subdivision(&tiling.involution_dual()).unwrap();
        assert!(dual_report.all_pass());
    }
}

#[test]
fn rank_four_subdivision_refines_the_coarse_tiling() {
    let mut r = rng(303);
    let partition = Partition::from_sizes(&[2, 2, 2, 2]).unwrap();
    let coarse = build_tilde(&partition).unwrap();
    let t = realize_type(&random_generic_matrix(&mut r, 4)).unwrap();
    assert_eq!(t.vertices.len(), 20);
    let fine = build_sigma_star(&t, &partition).unwrap();
    assert_eq!(fine.cells.len(), 20);
    for cell in &fine.cells {
        let inside_some = coarse
            .cells
            .iter()
            .any(|big| cell.matroid().bases().all(|b| big.matroid().is_base(&b)));
        assert!(inside_some, "cell not contained in any coarse cell");
    }
    let report = verify_subdivision(&fine).unwrap();
    assert!(report.all_pass());
    assert!(check_duality(&fine, &t, &partition).unwrap());
}

/// Rank-4 inseparable matroids on up to 7 elements: the coarse tiling's
/// cells, the tree-matroid cells of a realized subdivision, and all their
/// single-element restrictions.
fn rank_four_family() -> Vec<Matroid> {
    let partition = Partition::from_sizes(&[2, 2, 2, 2]).unwrap();
    let coarse = build_tilde(&partition).unwrap();
    let t = realize_type(&random_generic_matrix(&mut rng(304), 4)).unwrap();
    let fine = build_sigma_star(&t, &partition).unwrap();
    let mut family: Vec<Matroid> = Vec::new();
    for cell in coarse.cells.iter().chain(fine.cells.iter()) {
        let m = cell.matroid().clone();
        for e in 0..m.ground_size() {
            if m.coloops().contains(e) {
                continue;
            }
            let rest = m
                .restrict(&Subset::singleton(m.ground_size(), e).complement())
                .unwrap();
            if rest.rank() == 4 && rest.is_loopless() {
                family.push(rest);
            }
        }
        family.push(m);
    }
    family
}

#[test]
fn no_rank_two_splits_meet_in_codimension_two() {
    let family = rank_four_family();
    assert!(family.len() >= 14);
    let report = splits_lemma_scan(&family).unwrap();
    assert!(report.eligible > 0, "scan had nothing to check");
    assert!(report.pairs_checked > 0, "scan had nothing to check");
    assert!(
        report.violations.is_empty(),
        "violations: {:?}",
        report.violations
    );
}
