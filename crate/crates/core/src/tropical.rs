//! Min-plus numeric layer: tropical determinants, membership in tropical
//! convex hulls, and exact realization of polytrope vertices from a k×k
//! rational generator matrix.

use num_traits::Zero;
use thiserror::Error;

use crate::biconvex::{ExprError, PolytropeType, VertexExpr};
use crate::subset::Subset;
use crate::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TropicalError {
    #[error("matrix is tropically singular")]
    Singular,
    #[error("argmax tie: input is not generic")]
    NonGenericTie,
    #[error("point is not a vertex of the polytrope")]
    NotAVertex,
    #[error("cone condition fails: tconv is not certified biconvex")]
    NotBiconvex,
    #[error("matrix is not generic")]
    NonGeneric,
    #[error("matrix must be square with k >= 2")]
    BadShape,
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Row i holds the coordinates of the generator v_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropMatrix {
    k: usize,
    rows: Vec<Vec<Rat>>,
}

impl TropMatrix {
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self, TropicalError> {
        let k = rows.len();
        if k < 2 || rows.iter().any(|r| r.len() != k) {
            return Err(TropicalError::BadShape);
        }
        Ok(TropMatrix { k, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> Rat {
        self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.rows[i]
    }
}

/// A point of R^k modulo the all-ones line, stored with first coordinate 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Rat>,
}

impl ProjectivePoint {
    pub fn new(mut coords: Vec<Rat>) -> Self {
        let shift = coords[0];
        for c in &mut coords {
            *c -= shift;
        }
        ProjectivePoint { coords }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    fn heap(items: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
        if size == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..size {
            heap(items, size - 1, out);
            if size % 2 == 1 {
                items.swap(0, size - 1);
            } else {
                items.swap(i, size - 1);
            }
        }
    }
    heap(&mut items, k, &mut out);
    out
}

/// Min-plus determinant: the minimum over permutations of Σ v_{i,σ(i)},
/// with all minimizing permutations.
pub fn trop_det(v: &TropMatrix) -> (Rat, Vec<Vec<usize>>) {
    let mut best: Option<Rat> = None;
    let mut winners: Vec<Vec<usize>> = Vec::new();
    for sigma in permutations(v.k) {
        let total: Rat = (0..v.k).map(|i| v.entry(i, sigma[i])).sum();
        match best {
            Some(b) if total > b => {}
            Some(b) if total == b => winners.push(sigma),
            _ => {
                best = Some(total);
                winners = vec![sigma];
            }
        }
    }
    (best.unwrap(), winners)
}

pub fn is_trop_nonsingular(v: &TropMatrix) -> bool {
    trop_det(v).1.len() == 1
}

/// Nearest-point projection onto tconv of the rows: λ_i = max_j (x_j − v_{i,j}),
/// π(x)_j = min_i (λ_i + v_{i,j}). Membership is π(x) = x.
pub fn tconv_member(v: &TropMatrix, x: &ProjectivePoint) -> bool {
    let xs = x.coords();
    assert_eq!(xs.len(), v.k);
    let lambdas: Vec<Rat> = (0..v.k)
        .map(|i| (0..v.k).map(|j| xs[j] - v.entry(i, j)).max().unwrap())
        .collect();
    (0..v.k).all(|j| {
        let pj = (0..v.k).map(|i| lambdas[i] + v.entry(i, j)).min().unwrap();
        pj == xs[j]
    })
}

/// Solves the tree-structured difference constraints of a vertex
/// expression: x_c − x_i = v_{i,c} − v_{i,i} for every tree edge (i,c).
pub fn realize_vertex(v: &TropMatrix, e: &VertexExpr) -> Result<ProjectivePoint, TropicalError> {
    e.validate()?;
    if e.k() != v.k {
        return Err(TropicalError::BadShape);
    }
    let k = v.k;
    let edges = e.tree().edges;
    let mut coords: Vec<Option<Rat>> = vec![None; k];
    coords[0] = Some(Rat::zero());
    loop {
        let mut progressed = false;
        for &(i, c) in &edges {
            let delta = v.entry(i, c) - v.entry(i, i);
            match (coords[i], coords[c]) {
                (Some(xi), None) => {
                    coords[c] = Some(xi + delta);
                    progressed = true;
                }
                (None, Some(xc)) => {
                    coords[i] = Some(xc - delta);
                    progressed = true;
                }
                _ => {}
            }
        }
        if !progressed {
            break;
        }
    }
    // A spanning tree reaches every node.
    let coords: Vec<Rat> = coords.into_iter().map(|c| c.unwrap()).collect();
    Ok(ProjectivePoint::new(coords))
}

/// Reads the vertex expression off a point: T_i = argmax_j (x_j − v_{i,j}),
/// with i ∈ I iff i ∈ T_i and |T_i| ≥ 2, and C_i = T_i − {i}.
pub fn expression_of_point(
    v: &TropMatrix,
    x: &ProjectivePoint,
) -> Result<VertexExpr, TropicalError> {
    let k = v.k;
    let xs = x.coords();
    let mut c = vec![Subset::empty(k); k];
    let mut total = 0usize;
    for i in 0..k {
        let values: Vec<Rat> = (0..k).map(|j| xs[j] - v.entry(i, j)).collect();
        let best = *values.iter().max().unwrap();
        let t: Vec<usize> = (0..k).filter(|&j| values[j] == best).collect();
        if t.contains(&i) && t.len() >= 2 {
            c[i] = Subset::from_indices(k, &t).unwrap().remove(i);
            total += c[i].len();
        }
    }
    if total > k - 1 {
        return Err(TropicalError::NonGenericTie);
    }
    if total < k - 1 {
        return Err(TropicalError::NotAVertex);
    }
    VertexExpr::new(k, c).map_err(|_| TropicalError::NotAVertex)
}

/// Sufficient biconvexity certificate: with v_0 the coordinatewise min of
/// the generators, each v_i must lie strictly inside the cone E_i + v_0,
/// i.e. v_{i,j} − v0_j > v_{i,i} − v0_i for all j ≠ i.
pub fn cone_condition(v: &TropMatrix) -> bool {
    let k = v.k;
    let v0: Vec<Rat> = (0..k)
        .map(|j| (0..k).map(|i| v.entry(i, j)).min().unwrap())
        .collect();
    (0..k).all(|i| {
        let base = v.entry(i, i) - v0[i];
        (0..k).all(|j| j == i || v.entry(i, j) - v0[j] > base)
    })
}

/// Extracts the combinatorial type of tconv of the rows: enumerates all
/// valid vertex expressions, realizes each, and keeps those that lie in
/// the hull and round-trip through expression extraction.
pub fn realize_type(v: &TropMatrix) -> Result<PolytropeType, TropicalError> {
    if !is_trop_nonsingular(v) {
        return Err(TropicalError::Singular);
    }
    if !cone_condition(v) {
        return Err(TropicalError::NotBiconvex);
    }
    let k = v.k;
    let mut kept = Vec::new();
    for e in VertexExpr::enumerate_valid(k) {
        let x = realize_vertex(v, &e)?;
        if !tconv_member(v, &x) {
            continue;
        }
        match expression_of_point(v, &x) {
            Ok(back) if back == e => kept.push(e),
            Ok(_) => {}
            Err(TropicalError::NotAVertex) => {}
            Err(TropicalError::NonGenericTie) => return Err(TropicalError::NonGeneric),
            Err(other) => return Err(other),
        }
    }
    Ok(PolytropeType::from_vertices(k, kept)?)
}

/// Whether the segment from `a` to `b` points in the direction 1^{lambda}
/// modulo the all-ones line, with a positive coefficient.
pub fn is_direction(a: &ProjectivePoint, b: &ProjectivePoint, lambda: &Subset) -> bool {
    let k = a.coords().len();
    let d: Vec<Rat> = (0..k).map(|j| b.coords()[j] - a.coords()[j]).collect();
    let on: Vec<Rat> = lambda.iter().map(|j| d[j]).collect();
    let off: Vec<Rat> = lambda.complement().iter().map(|j| d[j]).collect();
    if on.is_empty() || off.is_empty() {
        return false;
    }
    on.iter().all(|x| *x == on[0]) && off.iter().all(|x| *x == off[0]) && on[0] > off[0]
}
