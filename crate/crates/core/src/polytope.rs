//! Base polytopes over exact rationals: H-descriptions, hypersimplex cuts,
//! face tests, the involution x ↦ 1−x, and quotient polytopes.
//!
//! Vertices are always indicator vectors of bases, so most of the geometry
//! reduces to counting; the only genuinely rational computation is the
//! quotient map and point-membership sampling.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError};
use crate::subset::Subset;
use crate::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("matroid has loops")]
    LoopyMatroid,
    #[error("cut produced an empty polytope")]
    EmptyResult,
    #[error("vertex set is not a subset of the polytope's vertices")]
    NotASubset,
    #[error("polytopes live in different ambient hypersimplices")]
    AmbientMismatch,
    #[error("given polytope is not a face")]
    NotAFace,
    #[error("given polytope is not a common cell of the tiling")]
    NotCommonCell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Le,
    Ge,
}

/// The half-space `x(support) ≤ bound` or `x(support) ≥ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpace {
    pub support: Subset,
    pub bound: i64,
    pub sense: Sense,
}

impl HalfSpace {
    pub fn le(support: Subset, bound: i64) -> Self {
        HalfSpace {
            support,
            bound,
            sense: Sense::Le,
        }
    }

    pub fn ge(support: Subset, bound: i64) -> Self {
        HalfSpace {
            support,
            bound,
            sense: Sense::Ge,
        }
    }

    fn value_on_mask(&self, mask: u32) -> i64 {
        (mask & self.support.bits()).count_ones() as i64
    }

    pub fn admits_mask(&self, mask: u32) -> bool {
        let v = self.value_on_mask(mask);
        match self.sense {
            Sense::Le => v <= self.bound,
            Sense::Ge => v >= self.bound,
        }
    }

    pub fn tight_on_mask(&self, mask: u32) -> bool {
        self.value_on_mask(mask) == self.bound
    }

    fn value_on_point(&self, x: &[Rat]) -> Rat {
        self.support.iter().map(|i| x[i]).sum()
    }

    pub fn admits_point(&self, x: &[Rat]) -> bool {
        let v = self.value_on_point(x);
        let b = Rat::from_integer(self.bound);
        match self.sense {
            Sense::Le => v <= b,
            Sense::Ge => v >= b,
        }
    }
}

/// Equations `x(A_i) = r(A_i)` over the components plus facet half-spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub equations: Vec<(Subset, i64)>,
    pub inequalities: Vec<HalfSpace>,
}

impl HRep {
    pub fn admits_mask(&self, mask: u32) -> bool {
        self.equations
            .iter()
            .all(|(a, b)| (mask & a.bits()).count_ones() as i64 == *b)
            && self.inequalities.iter().all(|h| h.admits_mask(mask))
    }

    pub fn admits_point(&self, x: &[Rat]) -> bool {
        self.equations
            .iter()
            .all(|(a, b)| a.iter().map(|i| x[i]).sum::<Rat>() == Rat::from_integer(*b))
            && self.inequalities.iter().all(|h| h.admits_point(x))
    }
}

/// The convex hull of the indicator vectors of a matroid's bases.
#[derive(Debug, Clone)]
pub struct BasePolytope {
    matroid: Matroid,
    hrep: OnceLock<HRep>,
    rank_table: OnceLock<Vec<u8>>,
}

impl PartialEq for BasePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.matroid == other.matroid
    }
}
impl Eq for BasePolytope {}

impl BasePolytope {
    pub fn new(matroid: Matroid) -> Self {
        BasePolytope {
            matroid,
            hrep: OnceLock::new(),
            rank_table: OnceLock::new(),
        }
    }

    /// The hypersimplex Δ(k,n), base polytope of the uniform matroid.
    pub fn hypersimplex(k: usize, n: usize) -> Result<Self, PolytopeError> {
        if k == 0 || k >= n {
            return Err(MatroidError::RankOutOfRange { k, max: n }.into());
        }
        Ok(BasePolytope::new(Matroid::uniform(k, n)))
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn ambient_size(&self) -> usize {
        self.matroid.ground_size()
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    pub fn vertex_count(&self) -> usize {
        self.matroid.base_count()
    }

    /// Vertices as exact rational coordinate vectors, in base order.
    pub fn vertices(&self) -> Vec<Vec<Rat>> {
        let n = self.ambient_size();
        self.matroid
            .bases()
            .map(|b| {
                (0..n)
                    .map(|i| {
                        if b.contains(i) {
                            Rat::one()
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.ambient_size() - self.matroid.kappa()
    }

    /// Dimension computed independently as the rational rank of the span of
    /// vertex differences.
    pub fn dim_from_vertices(&self) -> usize {
        let verts = self.vertices();
        let v0 = &verts[0];
        let diffs: Vec<Vec<Rat>> = verts[1..]
            .iter()
            .map(|v| v.iter().zip(v0).map(|(a, b)| *a - *b).collect())
            .collect();
        rational_rank(diffs)
    }

    /// The facet description: per-component equations, x_i ≥ 0, and
    /// `x(F) ≤ r(F)` over the non-degenerate flats. Requires a loopless
    /// matroid; its 0/1 solutions of full weight are exactly the bases.
    pub fn h_representation(&self) -> Result<&HRep, PolytopeError> {
        if !self.matroid.is_loopless() {
            return Err(PolytopeError::LoopyMatroid);
        }
        Ok(self.hrep.get_or_init(|| {
            let m = &self.matroid;
            let equations: Vec<(Subset, i64)> = m
                .components()
                .iter()
                .map(|a| (*a, m.rank_of(a) as i64))
                .collect();
            let mut inequalities: Vec<HalfSpace> = (0..m.ground_size())
                .map(|i| HalfSpace::ge(Subset::singleton(m.ground_size(), i), 0))
                .collect();
            for f in m.nondegenerate_flats() {
                inequalities.push(HalfSpace::le(f, m.rank_of(&f) as i64));
            }
            HRep {
                equations,
                inequalities,
            }
        }))
    }

    /// `r(A)` for every mask, indexed by mask bits.
    fn rank_table(&self) -> &[u8] {
        self.rank_table.get_or_init(|| {
            let n = self.ambient_size();
            Subset::all(n)
                .map(|a| self.matroid.rank_of(&a) as u8)
                .collect()
        })
    }

    /// Exact membership of a rational point: x ≥ 0, x(E) = rank, and the
    /// rank inequality x(A) ≤ r(A) for every subset A.
    pub fn contains_point(&self, x: &[Rat]) -> bool {
        let n = self.ambient_size();
        assert_eq!(x.len(), n);
        if x.iter().any(|v| *v < Rat::zero()) {
            return false;
        }
        if x.iter().sum::<Rat>() != Rat::from_integer(self.rank() as i64) {
            return false;
        }
        let table = self.rank_table();
        // Running subset sums over all masks in one pass.
        let mut sums: Vec<Rat> = vec![Rat::zero(); 1 << n];
        for mask in 1u32..(1 << n) as u32 {
            let low = mask & mask.wrapping_neg();
            let i = low.trailing_zeros() as usize;
            sums[mask as usize] = sums[(mask ^ low) as usize] + x[i];
            if sums[mask as usize] > Rat::from_integer(table[mask as usize] as i64) {
                return false;
            }
        }
        true
    }

    /// Intersects with the half-space `x(F) ≤ ρ`. Valid when the matroid's
    /// simplification is uniform and `F` is a union of parallel classes
    /// (the hypersimplex is the basic case); the result is again a base
    /// polytope, verified by the exchange check.
    pub fn cut(&self, h: &HalfSpace) -> Result<BasePolytope, PolytopeError> {
        if h.sense != Sense::Le {
            return Err(MatroidError::PreconditionViolated("cut requires a <= half-space").into());
        }
        if h.bound < 0 {
            return Err(PolytopeError::EmptyResult);
        }
        let m = &self.matroid;
        if !m.is_loopless() {
            return Err(PolytopeError::LoopyMatroid);
        }
        let class_count = if *m == Matroid::uniform(m.rank(), m.ground_size()) {
            // hypersimplex: any support is allowed
            h.support.len()
        } else {
            let (simple, f) = m.simplify()?;
            if simple != Matroid::uniform(simple.rank(), simple.ground_size()) {
                return Err(
                    MatroidError::PreconditionViolated("simplification is not uniform").into(),
                );
            }
            let img = f.map_subset(&h.support);
            if f.preimage(&img) != h.support {
                return Err(
                    MatroidError::PreconditionViolated("support splits a parallel class").into(),
                );
            }
            img.len()
        };
        let rho = h.bound as usize;
        if rho >= m.rank().min(class_count) {
            return Ok(self.clone());
        }
        let kept: Vec<Subset> = m
            .bases()
            .filter(|b| b.intersection(&h.support).len() <= rho)
            .collect();
        if kept.is_empty() {
            return Err(PolytopeError::EmptyResult);
        }
        Ok(BasePolytope::new(Matroid::new(m.ground_size(), &kept)?))
    }

    /// Whether `w` is the vertex set of a face, via tight-set closure over
    /// the H-description.
    pub fn face_test(&self, w: &[Subset]) -> Result<bool, PolytopeError> {
        if w.is_empty() {
            return Ok(false);
        }
        if !w.iter().all(|b| self.matroid.is_base(b)) {
            return Err(PolytopeError::NotASubset);
        }
        let hrep = self.h_representation()?;
        let tight: Vec<&HalfSpace> = hrep
            .inequalities
            .iter()
            .filter(|h| w.iter().all(|b| h.tight_on_mask(b.bits())))
            .collect();
        let closure: Vec<Subset> = self
            .matroid
            .bases()
            .filter(|b| tight.iter().all(|h| h.tight_on_mask(b.bits())))
            .collect();
        let mut w_sorted: Vec<u32> = w.iter().map(|s| s.bits()).collect();
        w_sorted.sort_unstable();
        w_sorted.dedup();
        let closure_sorted: Vec<u32> = closure.iter().map(|s| s.bits()).collect();
        Ok(w_sorted == closure_sorted)
    }

    /// Tests whether the two polytopes intersect in a common face. Returns
    /// the matroid of the common face when they do and it is non-empty.
    pub fn is_face_fitting(
        &self,
        other: &BasePolytope,
    ) -> Result<(bool, Option<Matroid>), PolytopeError> {
        if self.ambient_size() != other.ambient_size() || self.rank() != other.rank() {
            return Err(PolytopeError::AmbientMismatch);
        }
        let (common, mat) = Matroid::base_intersection(&self.matroid, &other.matroid)?;
        if common.is_empty() {
            return Ok((true, None));
        }
        let mat = match mat {
            Some(m) => m,
            None => return Ok((false, None)),
        };
        let ok = self.face_test(&common)? && other.face_test(&common)?;
        Ok((ok, ok.then_some(mat)))
    }

    /// Image under the involution x ↦ 1 − x: the base polytope of the dual
    /// matroid.
    pub fn involution_dual(&self) -> BasePolytope {
        BasePolytope::new(self.matroid.dual())
    }
}

/// A collection of equal-rank base polytopes inside Δ(rank, n).
#[derive(Debug, Clone)]
pub struct Tiling {
    pub rank: usize,
    pub n: usize,
    pub cells: Vec<BasePolytope>,
}

impl Tiling {
    pub fn new(rank: usize, n: usize, cells: Vec<BasePolytope>) -> Self {
        for c in &cells {
            assert_eq!(c.ambient_size(), n);
            assert_eq!(c.rank(), rank);
        }
        Tiling { rank, n, cells }
    }

    pub fn involution_dual(&self) -> Tiling {
        Tiling::new(
            self.n - self.rank,
            self.n,
            self.cells.iter().map(|c| c.involution_dual()).collect(),
        )
    }
}

/// A polytope living in the quotient of the ambient space modulo the span
/// of a face: exact rational vertex images and dimension only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPolytope {
    pub dim: usize,
    pub points: Vec<Vec<Rat>>,
}

/// Quotient of `p` modulo its face `q`: translate by a vertex of `q`, then
/// project out the linear span of `q`. Deterministic: Gaussian elimination
/// with pivots in coordinate order, image points sorted.
pub fn quotient(p: &BasePolytope, q: &BasePolytope) -> Result<QuotientPolytope, PolytopeError> {
    let qverts: Vec<Subset> = q.matroid().bases().collect();
    if !p.face_test(&qverts)? {
        return Err(PolytopeError::NotAFace);
    }
    let qpts = q.vertices();
    let base = &qpts[0];
    let mut span = Eliminator::new(p.ambient_size());
    for v in &qpts[1..] {
        span.absorb(sub(v, base));
    }
    let mut points: Vec<Vec<Rat>> = p
        .vertices()
        .iter()
        .map(|v| span.reduce(sub(v, base)))
        .collect();
    points.sort();
    points.dedup();
    let mut dim_span = Eliminator::new(p.ambient_size());
    let p0 = points[0].clone();
    let mut dim = 0;
    for x in &points[1..] {
        if dim_span.absorb(sub(x, &p0)) {
            dim += 1;
        }
    }
    Ok(QuotientPolytope { dim, points })
}

/// Quotient of every cell of a tiling modulo a common cell.
pub fn quotient_tiling(
    t: &Tiling,
    q: &BasePolytope,
) -> Result<Vec<QuotientPolytope>, PolytopeError> {
    let qverts: Vec<Subset> = q.matroid().bases().collect();
    for cell in &t.cells {
        if !cell
            .face_test(&qverts)
            .map_err(|_| PolytopeError::NotCommonCell)?
        {
            return Err(PolytopeError::NotCommonCell);
        }
    }
    t.cells.iter().map(|c| quotient(c, q)).collect()
}

fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| *x - *y).collect()
}

/// Incremental row-echelon basis with pivot order 0..n.
struct Eliminator {
    rows: Vec<(usize, Vec<Rat>)>, // (pivot, row with row[pivot]=1)
    n: usize,
}

impl Eliminator {
    fn new(n: usize) -> Self {
        Eliminator {
            rows: Vec::new(),
            n,
        }
    }

    fn reduce(&self, mut x: Vec<Rat>) -> Vec<Rat> {
        for (p, row) in &self.rows {
            if !x[*p].is_zero() {
                let c = x[*p];
                for j in 0..self.n {
                    x[j] -= c * row[j];
                }
            }
        }
        x
    }

    /// Reduces `x` and, if non-zero, adds it to the basis. Returns whether
    /// the rank grew.
    fn absorb(&mut self, x: Vec<Rat>) -> bool {
        let mut x = self.reduce(x);
        match x.iter().position(|v| !v.is_zero()) {
            None => false,
            Some(p) => {
                let c = x[p];
                for v in &mut x {
                    *v /= c;
                }
                let at = self.rows.partition_point(|(q, _)| *q < p);
                self.rows.insert(at, (p, x));
                true
            }
        }
    }
}

/// Rank of the span of the given rational vectors.
pub fn rational_rank(rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut e = Eliminator::new(rows[0].len());
    let mut rank = 0;
    for r in rows {
        if e.absorb(r) {
            rank += 1;
        }
    }
    rank
}
