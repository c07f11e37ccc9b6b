//! Matroid subdivisions of hypersimplices dual to polytropes: construction
//! from a combinatorial type and a ground-set partition, verification
//! (face-fitting, facet pairing, coverage), the dual graph, and the rank-4
//! catalog of coarser subdivisions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::biconvex::PolytropeType;
use crate::bipartite::{ForestSpec, Partition, SpecError};
use crate::matroid::{Matroid, MatroidError};
use crate::polytope::{rational_rank, BasePolytope, PolytopeError, Sense, Tiling};
use crate::subset::Subset;
use crate::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubdivisionError {
    #[error("polytrope type is not maximal")]
    NotMaximal,
    #[error("partition does not fit the type (block count mismatch)")]
    PartitionTooSmall,
    #[error("operation requires a verified tiling")]
    NotVerified,
    #[error("cell selector is not of the expected kind")]
    WrongKind,
    #[error("refinement index set must mix the two sides of the cell")]
    InvalidI,
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// One cell per vertex of the type: the base polytope of the matroid of the
/// vertex's bipartite tree over the given partition, inside Δ(k, n).
pub fn build_sigma_star(
    ptype: &PolytropeType,
    partition: &Partition,
) -> Result<Tiling, SubdivisionError> {
    if !ptype.is_maximal() {
        return Err(SubdivisionError::NotMaximal);
    }
    if partition.k() != ptype.k {
        return Err(SubdivisionError::PartitionTooSmall);
    }
    let mut cells = Vec::with_capacity(ptype.vertices.len());
    for v in &ptype.vertices {
        let spec = ForestSpec::new(partition.clone(), v.tree().edges)?;
        cells.push(BasePolytope::new(spec.matroid()?));
    }
    Ok(Tiling::new(ptype.k, partition.n(), cells))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FacetStatus {
    /// Lies in a hyperplane x_i = 0 or x_i = 1 of the ambient hypersimplex.
    Boundary,
    /// Shared with exactly one other cell.
    Paired(usize),
    Unpaired,
}

#[derive(Debug, Clone)]
pub struct FacetRecord {
    pub cell: usize,
    /// Support of a tight inequality cutting out this facet.
    pub support: Subset,
    pub bound: i64,
    pub sense: Sense,
    /// Base masks of the facet's vertices, sorted.
    pub vertex_masks: Vec<u32>,
    pub status: FacetStatus,
}

#[derive(Debug, Clone)]
pub struct DualEdge {
    pub a: usize,
    pub b: usize,
    /// Flat labeling the shared facet, x(flat) = bound on the facet.
    pub flat: Subset,
    pub bound: i64,
    pub facet_masks: Vec<u32>,
}

/// Nodes are cells; edges are shared facets.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub node_count: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.a == v || e.b == v).count()
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.a.min(e.b), e.a.max(e.b)))
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

#[derive(Debug, Clone)]
pub struct SubdivisionReport {
    pub cell_count: usize,
    /// Cell pairs whose intersection is not a common face.
    pub fitting_failures: Vec<(usize, usize)>,
    pub facets: Vec<FacetRecord>,
    /// Interior facets not shared with exactly one other cell.
    pub unpaired: Vec<(usize, Vec<u32>)>,
    /// Union of all cells' base sets covers every k-subset.
    pub base_union_complete: bool,
    pub samples_passed: usize,
    pub samples_total: usize,
    /// Intersection of all cells' base sets, when it is a matroid.
    pub common_cell: Option<Matroid>,
    /// Common cell is loopless and coloopless (touches no boundary plane).
    pub common_cell_interior: bool,
    pub dual: DualGraph,
}

impl SubdivisionReport {
    pub fn all_pass(&self) -> bool {
        self.fitting_failures.is_empty()
            && self.unpaired.is_empty()
            && self.base_union_complete
            && self.samples_passed == self.samples_total
    }
}

fn affine_dim(masks: &[u32], n: usize) -> usize {
    if masks.len() <= 1 {
        return 0;
    }
    let point = |m: u32| -> Vec<Rat> {
        (0..n)
            .map(|i| {
                if m >> i & 1 == 1 {
                    Rat::from_integer(1)
                } else {
                    Rat::from_integer(0)
                }
            })
            .collect()
    };
    let base = point(masks[0]);
    let diffs: Vec<Vec<Rat>> = masks[1..]
        .iter()
        .map(|&m| point(m).iter().zip(&base).map(|(a, b)| *a - *b).collect())
        .collect();
    rational_rank(diffs)
}

/// Facets of a cell: faces of dimension dim − 1, one record per distinct
/// facet, found as tight sets of the irredundant inequalities.
fn cell_facets(cell_idx: usize, p: &BasePolytope) -> Result<Vec<FacetRecord>, SubdivisionError> {
    let hrep = p.h_representation()?.clone();
    let all_masks: Vec<u32> = p.matroid().bases().map(|b| b.bits()).collect();
    let d = p.dim();
    let n = p.ambient_size();
    let mut out: Vec<FacetRecord> = Vec::new();
    for h in &hrep.inequalities {
        let tight: Vec<u32> = all_masks
            .iter()
            .copied()
            .filter(|&m| h.tight_on_mask(m))
            .collect();
        if tight.is_empty() || tight.len() == all_masks.len() {
            continue;
        }
        if affine_dim(&tight, n) + 1 != d {
            continue;
        }
        if out.iter().any(|r| r.vertex_masks == tight) {
            continue;
        }
        let boundary = (0..n).any(|i| {
            tight.iter().all(|m| m >> i & 1 == 0) || tight.iter().all(|m| m >> i & 1 == 1)
        });
        out.push(FacetRecord {
            cell: cell_idx,
            support: h.support,
            bound: h.bound,
            sense: h.sense,
            vertex_masks: tight,
            status: if boundary {
                FacetStatus::Boundary
            } else {
                FacetStatus::Unpaired
            },
        });
    }
    Ok(out)
}

/// Collects all cell facets and resolves interior pairings by matching
/// vertex sets across cells.
fn paired_facets(t: &Tiling) -> Result<Vec<FacetRecord>, SubdivisionError> {
    let mut facets: Vec<FacetRecord> = Vec::new();
    for (idx, cell) in t.cells.iter().enumerate() {
        facets.extend(cell_facets(idx, cell)?);
    }
    let interior: Vec<usize> = (0..facets.len())
        .filter(|&i| facets[i].status != FacetStatus::Boundary)
        .collect();
    for (pos, &i) in interior.iter().enumerate() {
        let partners: Vec<usize> = interior
            .iter()
            .enumerate()
            .filter(|&(q, &j)| q != pos && facets[j].vertex_masks == facets[i].vertex_masks)
            .map(|(_, &j)| j)
            .collect();
        if partners.len() == 1 {
            facets[i].status = FacetStatus::Paired(facets[partners[0]].cell);
        }
    }
    Ok(facets)
}

fn dual_from_facets(facets: &[FacetRecord], cell_count: usize) -> DualGraph {
    let mut edges: Vec<DualEdge> = Vec::new();
    for f in facets {
        if let FacetStatus::Paired(other) = f.status {
            if f.cell < other {
                edges.push(DualEdge {
                    a: f.cell,
                    b: other,
                    flat: f.support,
                    bound: f.bound,
                    facet_masks: f.vertex_masks.clone(),
                });
            }
        }
    }
    DualGraph {
        node_count: cell_count,
        edges,
    }
}

/// Runs every structural check on a tiling: pairwise face-fitting, facet
/// pairing against the ambient boundary, base-set coverage, seeded random
/// point membership, and the common cell.
pub fn verify_subdivision(t: &Tiling) -> Result<SubdivisionReport, SubdivisionError> {
    verify_subdivision_with(t, 2026, 48)
}

/// Same as `verify_subdivision` with an explicit sampling seed and count.
pub fn verify_subdivision_with(
    t: &Tiling,
    seed: u64,
    samples_total: usize,
) -> Result<SubdivisionReport, SubdivisionError> {
    let n = t.n;
    let cells = &t.cells;
    let mut fitting_failures = Vec::new();
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let (ok, _) = cells[i].is_face_fitting(&cells[j])?;
            if !ok {
                fitting_failures.push((i, j));
            }
        }
    }

    let facets = paired_facets(t)?;
    let unpaired: Vec<(usize, Vec<u32>)> = facets
        .iter()
        .filter(|f| f.status == FacetStatus::Unpaired)
        .map(|f| (f.cell, f.vertex_masks.clone()))
        .collect();
    let dual = dual_from_facets(&facets, cells.len());

    let mut union: Vec<u32> = cells
        .iter()
        .flat_map(|c| c.matroid().bases().map(|b| b.bits()))
        .collect();
    union.sort_unstable();
    union.dedup();
    let all: Vec<u32> = Subset::all_of_size(n, t.rank).map(|s| s.bits()).collect();
    let base_union_complete = union == all;

    // Random rational points of Δ(rank, n) as convex combinations of its
    // vertices, fixed seed for reproducibility.
    let mut samples_passed = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ambient: Vec<u32> = all.clone();
    for _ in 0..samples_total {
        let picks = 6.min(ambient.len());
        let mut point = vec![Rat::from_integer(0); n];
        let mut total = Rat::from_integer(0);
        for _ in 0..picks {
            let mask = ambient[rng.gen_range(0..ambient.len())];
            let w = Rat::from_integer(rng.gen_range(1..=64));
            total += w;
            for (i, x) in point.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *x += w;
                }
            }
        }
        for x in &mut point {
            *x /= total;
        }
        if cells.iter().any(|c| c.contains_point(&point)) {
            samples_passed += 1;
        }
    }

    let mut common: Vec<u32> = cells[0].matroid().bases().map(|b| b.bits()).collect();
    for c in &cells[1..] {
        let here: Vec<u32> = c.matroid().bases().map(|b| b.bits()).collect();
        common.retain(|m| here.contains(m));
    }
    let common_cell = if common.is_empty() {
        None
    } else {
        let subs: Vec<Subset> = common.iter().map(|&m| Subset::from_bits(n, m)).collect();
        Matroid::new(n, &subs).ok()
    };
    let common_cell_interior = common_cell
        .as_ref()
        .map(|m| m.is_loopless() && m.coloops().is_empty())
        .unwrap_or(false);

    Ok(SubdivisionReport {
        cell_count: cells.len(),
        fitting_failures,
        facets,
        unpaired,
        base_union_complete,
        samples_passed,
        samples_total,
        common_cell,
        common_cell_interior,
        dual,
    })
}

/// The dual graph of a tiling: one node per cell, one edge per shared facet.
pub fn dual_graph(t: &Tiling) -> Result<DualGraph, SubdivisionError> {
    let facets = paired_facets(t)?;
    Ok(dual_from_facets(&facets, t.cells.len()))
}

/// Checks that the tiling's dual graph is the polytrope's 1-skeleton under
/// the vertex-to-cell map, that every shared facet lies on the hyperplane
/// x(A_N) = |N| for the edge's log set N, and that the facet's matroid is
/// the matroid of the two trees' common forest.
pub fn check_duality(
    t: &Tiling,
    ptype: &PolytropeType,
    partition: &Partition,
) -> Result<bool, SubdivisionError> {
    if t.cells.len() != ptype.vertices.len() {
        return Err(SubdivisionError::NotVerified);
    }
    let dg = dual_graph(t)?;
    let mut skeleton: Vec<(usize, usize)> = ptype
        .edges
        .iter()
        .map(|e| (e.a.min(e.b), e.a.max(e.b)))
        .collect();
    skeleton.sort_unstable();
    if dg.edge_pairs() != skeleton {
        return Ok(false);
    }
    for te in &ptype.edges {
        let (lo, hi) = (te.a.min(te.b), te.a.max(te.b));
        let de = dg
            .edges
            .iter()
            .find(|e| (e.a, e.b) == (lo, hi))
            .ok_or(SubdivisionError::NotVerified)?;
        for (log, owner) in [(&te.log_a, te.a), (&te.log_b, te.b)] {
            let a_n = partition.union_of(log);
            let want = log.len() as u32;
            if !de
                .facet_masks
                .iter()
                .all(|m| (m & a_n.bits()).count_ones() == want)
            {
                return Ok(false);
            }
            // The label must be a flat both endpoint matroids know about.
            let _ = owner;
        }
        // Common forest of the two adjacent trees gives the facet matroid.
        let ea = ptype.vertices[te.a].tree().edges;
        let eb = ptype.vertices[te.b].tree().edges;
        let common: Vec<(usize, usize)> = ea.iter().copied().filter(|e| eb.contains(e)).collect();
        let fm = ForestSpec::new(partition.clone(), common)?.matroid()?;
        let mut fm_masks: Vec<u32> = fm.bases().map(|b| b.bits()).collect();
        fm_masks.sort_unstable();
        if fm_masks != de.facet_masks {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cell_from_filter<F: Fn(u32) -> bool>(
    n: usize,
    k: usize,
    keep: F,
) -> Result<BasePolytope, SubdivisionError> {
    let masks: Vec<Subset> = Subset::all_of_size(n, k)
        .filter(|s| keep(s.bits()))
        .collect();
    if masks.is_empty() {
        return Err(SubdivisionError::Polytope(PolytopeError::EmptyResult));
    }
    Ok(BasePolytope::new(Matroid::new(n, &masks)?))
}

fn block_count(mask: u32, block: &Subset) -> u32 {
    (mask & block.bits()).count_ones()
}

/// Unordered index pairs of the mixed cells, in the order `build_tilde`
/// emits them after the two corner kinds.
pub fn tilde_third_kind_pairs() -> [(usize, usize); 6] {
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}

/// Cuts Δ(4, n) with the hyperplanes {x(A_i) = 1}: 4 cells with x(A_j) ≥ 1
/// off one block, 4 with x(A_j) ≤ 1 off one block, and 6 mixed cells with
/// two blocks on each side. All 14 cells are exchange-verified.
pub fn build_tilde(partition: &Partition) -> Result<Tiling, SubdivisionError> {
    let k = partition.k();
    if k != 4 {
        return Err(SubdivisionError::WrongKind);
    }
    let n = partition.n();
    let blocks = partition.blocks().to_vec();
    let mut cells = Vec::with_capacity(14);
    for i in 0..4 {
        cells.push(cell_from_filter(n, 4, |m| {
            (0..4).all(|j| j == i || block_count(m, &blocks[j]) >= 1)
        })?);
    }
    for i in 0..4 {
        cells.push(cell_from_filter(n, 4, |m| {
            (0..4).all(|j| j == i || block_count(m, &blocks[j]) <= 1)
        })?);
    }
    for (i1, i2) in tilde_third_kind_pairs() {
        cells.push(cell_from_filter(n, 4, |m| {
            (0..4).all(|j| {
                if j == i1 || j == i2 {
                    block_count(m, &blocks[j]) <= 1
                } else {
                    block_count(m, &blocks[j]) >= 1
                }
            })
        })?);
    }
    Ok(Tiling::new(4, n, cells))
}

/// Splits the mixed cell with lower-side blocks `lows` along the hyperplane
/// x(A_I) = 2, where `i_set` must pick one block from each side. Returns
/// the (≤ 2, ≥ 2) halves, both exchange-verified.
pub fn refine_third_kind(
    partition: &Partition,
    lows: (usize, usize),
    i_set: (usize, usize),
) -> Result<(BasePolytope, BasePolytope), SubdivisionError> {
    let k = partition.k();
    if k != 4 || lows.0 == lows.1 || lows.0 >= 4 || lows.1 >= 4 {
        return Err(SubdivisionError::WrongKind);
    }
    if i_set.0 == i_set.1 || i_set.0 >= 4 || i_set.1 >= 4 {
        return Err(SubdivisionError::InvalidI);
    }
    let is_low = |j: usize| j == lows.0 || j == lows.1;
    if is_low(i_set.0) == is_low(i_set.1) {
        return Err(SubdivisionError::InvalidI);
    }
    let n = partition.n();
    let blocks = partition.blocks().to_vec();
    let in_cell = |m: u32| {
        (0..4).all(|j| {
            if is_low(j) {
                block_count(m, &blocks[j]) <= 1
            } else {
                block_count(m, &blocks[j]) >= 1
            }
        })
    };
    let a_i = partition.union_of(
        &Subset::from_indices(4, &[i_set.0, i_set.1]).map_err(SubdivisionError::Matroid)?,
    );
    let le = cell_from_filter(n, 4, |m| in_cell(m) && block_count(m, &a_i) <= 2)?;
    let ge = cell_from_filter(n, 4, |m| in_cell(m) && block_count(m, &a_i) >= 2)?;
    Ok((le, ge))
}

#[derive(Debug, Clone)]
pub struct SplitsScanReport {
    pub scanned: usize,
    pub eligible: usize,
    pub pairs_checked: usize,
    /// (matroid index, F, L) with r(L) = 2 despite a loopless codim-2 meet.
    pub violations: Vec<(usize, Subset, Subset)>,
}

/// Scans inseparable rank-4 matroids with a rank-2 non-degenerate flat F:
/// whenever the faces cut out by F and another non-degenerate flat L meet
/// in a loopless codimension-2 face, records whether r(L) = 2 occurs.
pub fn splits_lemma_scan(family: &[Matroid]) -> Result<SplitsScanReport, SubdivisionError> {
    let mut report = SplitsScanReport {
        scanned: family.len(),
        eligible: 0,
        pairs_checked: 0,
        violations: Vec::new(),
    };
    for (idx, m) in family.iter().enumerate() {
        if m.rank() != 4 || !m.is_inseparable() {
            continue;
        }
        let nondeg: Vec<Subset> = m
            .flats()
            .into_iter()
            .filter(|f| !f.is_empty() && f.len() < m.ground_size() && m.is_nondegenerate(f))
            .collect();
        let rank2: Vec<Subset> = nondeg
            .iter()
            .copied()
            .filter(|f| m.rank_of(f) == 2)
            .collect();
        if rank2.is_empty() {
            continue;
        }
        report.eligible += 1;
        let p = BasePolytope::new(m.clone());
        let d = p.dim();
        for f in &rank2 {
            for l in &nondeg {
                if l == f {
                    continue;
                }
                let mf = m.decompose(f);
                let ml = m.decompose(l);
                let (common, mat) = Matroid::base_intersection(&mf, &ml)?;
                let mat = match mat {
                    Some(x) if !common.is_empty() => x,
                    _ => continue,
                };
                if !mat.is_loopless() {
                    continue;
                }
                if !p.face_test(&common)? {
                    continue;
                }
                let masks: Vec<u32> = common.iter().map(|s| s.bits()).collect();
                if affine_dim(&masks, m.ground_size()) + 2 != d {
                    continue;
                }
                report.pairs_checked += 1;
                if m.rank_of(l) == 2 {
                    report.violations.push((idx, *f, *l));
                }
            }
        }
    }
    Ok(report)
}
