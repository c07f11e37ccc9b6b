//! Canonical serialization: JSON schemas for matroids, polytopes, vertex
//! expressions, types, forest specs, and subdivision reports; "p/q" rational
//! parsing; CSV/JSON matrix input; DOT export of dual graphs.
//!
//! All output is deterministic: fixed key order, sorted lists.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::biconvex::{ExprError, PolytropeType, TypeEdge, VertexExpr};
use crate::bipartite::{ForestSpec, Partition, SpecError};
use crate::matroid::{Matroid, MatroidError};
use crate::polytope::{BasePolytope, PolytopeError, Sense};
use crate::subdivision::{DualGraph, FacetStatus, SubdivisionReport};
use crate::subset::Subset;
use crate::tropical::{TropMatrix, TropicalError};
use crate::Rat;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Tropical(#[from] TropicalError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub rank: usize,
    pub bases: Vec<Vec<usize>>,
}

impl From<&Matroid> for MatroidJson {
    fn from(m: &Matroid) -> Self {
        let mut bases: Vec<Vec<usize>> = m.bases().map(|b| b.to_vec()).collect();
        bases.sort();
        MatroidJson {
            n: m.ground_size(),
            rank: m.rank(),
            bases,
        }
    }
}

impl TryFrom<&MatroidJson> for Matroid {
    type Error = IoError;
    fn try_from(j: &MatroidJson) -> Result<Self, IoError> {
        let subs: Result<Vec<Subset>, MatroidError> = j
            .bases
            .iter()
            .map(|b| Subset::from_indices(j.n, b))
            .collect();
        let m = Matroid::new(j.n, &subs?)?;
        if m.rank() != j.rank {
            return Err(IoError::Parse(format!(
                "declared rank {} but bases have size {}",
                j.rank,
                m.rank()
            )));
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityJson {
    pub support: Vec<usize>,
    pub bound: i64,
    pub sense: Sense,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EquationJson {
    pub support: Vec<usize>,
    pub bound: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub n: usize,
    pub rank: usize,
    pub vertices: Vec<Vec<u8>>,
    pub equations: Vec<EquationJson>,
    pub inequalities: Vec<InequalityJson>,
}

impl PolytopeJson {
    pub fn from_polytope(p: &BasePolytope) -> Result<Self, IoError> {
        let n = p.ambient_size();
        let hrep = p.h_representation()?;
        let mut vertices: Vec<Vec<u8>> = p
            .matroid()
            .bases()
            .map(|b| (0..n).map(|i| u8::from(b.contains(i))).collect())
            .collect();
        vertices.sort();
        Ok(PolytopeJson {
            n,
            rank: p.rank(),
            vertices,
            equations: hrep
                .equations
                .iter()
                .map(|(s, b)| EquationJson {
                    support: s.to_vec(),
                    bound: *b,
                })
                .collect(),
            inequalities: hrep
                .inequalities
                .iter()
                .map(|h| InequalityJson {
                    support: h.support.to_vec(),
                    bound: h.bound,
                    sense: h.sense,
                })
                .collect(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexExprJson {
    pub k: usize,
    #[serde(rename = "C")]
    pub c: Vec<Vec<usize>>,
}

impl From<&VertexExpr> for VertexExprJson {
    fn from(e: &VertexExpr) -> Self {
        VertexExprJson {
            k: e.k(),
            c: e.c_all().iter().map(|s| s.to_vec()).collect(),
        }
    }
}

impl TryFrom<&VertexExprJson> for VertexExpr {
    type Error = IoError;
    fn try_from(j: &VertexExprJson) -> Result<Self, IoError> {
        let c: Result<Vec<Subset>, MatroidError> =
            j.c.iter().map(|s| Subset::from_indices(j.k, s)).collect();
        Ok(VertexExpr::new(j.k, c?)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TypeJson {
    pub k: usize,
    /// Each vertex as its list of C-sets.
    pub vertices: Vec<Vec<Vec<usize>>>,
    /// Edges as [a, b, log_a, log_b].
    pub edges: Vec<(usize, usize, Vec<usize>, Vec<usize>)>,
}

impl From<&PolytropeType> for TypeJson {
    fn from(t: &PolytropeType) -> Self {
        TypeJson {
            k: t.k,
            vertices: t
                .vertices
                .iter()
                .map(|v| v.c_all().iter().map(|s| s.to_vec()).collect())
                .collect(),
            edges: t
                .edges
                .iter()
                .map(|e| (e.a, e.b, e.log_a.to_vec(), e.log_b.to_vec()))
                .collect(),
        }
    }
}

impl TryFrom<&TypeJson> for PolytropeType {
    type Error = IoError;
    fn try_from(j: &TypeJson) -> Result<Self, IoError> {
        let vertices: Result<Vec<VertexExpr>, IoError> = j
            .vertices
            .iter()
            .map(|c| {
                let sets: Result<Vec<Subset>, MatroidError> =
                    c.iter().map(|s| Subset::from_indices(j.k, s)).collect();
                Ok(VertexExpr::new(j.k, sets?)?)
            })
            .collect();
        let t = PolytropeType::from_vertices(j.k, vertices?)?;
        // Edges are recomputed; reject inconsistent input.
        let given: Vec<(usize, usize)> = j.edges.iter().map(|e| (e.0, e.1)).collect();
        let ours: Vec<(usize, usize)> = t.edges.iter().map(|e| (e.a, e.b)).collect();
        if given != ours {
            return Err(IoError::Parse("edge list does not match vertices".into()));
        }
        Ok(t)
    }
}

pub fn type_edge_json(e: &TypeEdge) -> (usize, usize, Vec<usize>, Vec<usize>) {
    (e.a, e.b, e.log_a.to_vec(), e.log_b.to_vec())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ForestJson {
    pub edges: Vec<(usize, usize)>,
    pub isolated: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl From<&ForestSpec> for ForestJson {
    fn from(f: &ForestSpec) -> Self {
        let touched: Vec<usize> = f.edges().iter().flat_map(|&(i, c)| [i, c]).collect();
        ForestJson {
            edges: f.edges().to_vec(),
            isolated: (0..f.k()).filter(|j| !touched.contains(j)).collect(),
            blocks: f.partition().blocks().iter().map(|b| b.to_vec()).collect(),
        }
    }
}

impl TryFrom<&ForestJson> for ForestSpec {
    type Error = IoError;
    fn try_from(j: &ForestJson) -> Result<Self, IoError> {
        let n = j.blocks.iter().map(|b| b.len()).sum();
        let blocks: Result<Vec<Subset>, MatroidError> = j
            .blocks
            .iter()
            .map(|b| Subset::from_indices(n, b))
            .collect();
        let partition = Partition::new(n, blocks?)?;
        Ok(ForestSpec::new(partition, j.edges.clone())?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub cells: usize,
    pub fitting_failures: Vec<(usize, usize)>,
    pub boundary_facets: usize,
    pub paired_facets: usize,
    pub unpaired_facets: usize,
    pub base_union_complete: bool,
    pub samples_passed: usize,
    pub samples_total: usize,
    pub common_cell: Option<MatroidJson>,
    pub common_cell_interior: bool,
    /// Dual graph edges as [cell, cell, shared-facet flat, bound].
    pub dual_edges: Vec<(usize, usize, Vec<usize>, i64)>,
    pub all_pass: bool,
}

impl From<&SubdivisionReport> for ReportJson {
    fn from(r: &SubdivisionReport) -> Self {
        let count = |status: fn(&FacetStatus) -> bool| {
            r.facets.iter().filter(|f| status(&f.status)).count()
        };
        let mut dual_edges: Vec<(usize, usize, Vec<usize>, i64)> = r
            .dual
            .edges
            .iter()
            .map(|e| (e.a, e.b, e.flat.to_vec(), e.bound))
            .collect();
        dual_edges.sort();
        ReportJson {
            cells: r.cell_count,
            fitting_failures: r.fitting_failures.clone(),
            boundary_facets: count(|s| matches!(s, FacetStatus::Boundary)),
            paired_facets: count(|s| matches!(s, FacetStatus::Paired(_))),
            unpaired_facets: count(|s| matches!(s, FacetStatus::Unpaired)),
            base_union_complete: r.base_union_complete,
            samples_passed: r.samples_passed,
            samples_total: r.samples_total,
            common_cell: r.common_cell.as_ref().map(MatroidJson::from),
            common_cell_interior: r.common_cell_interior,
            dual_edges,
            all_pass: r.all_pass(),
        }
    }
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, IoError> {
    let s = s.trim();
    let bad = || IoError::Parse(format!("bad rational: {s:?}"));
    match s.split_once('/') {
        None => s.parse::<i64>().map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

pub fn format_rat(r: &Rat) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// CSV matrix: one row per line, entries "p/q" separated by commas.
pub fn parse_matrix_csv(text: &str) -> Result<TropMatrix, IoError> {
    let rows: Result<Vec<Vec<Rat>>, IoError> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| line.split(',').map(parse_rat).collect())
        .collect();
    Ok(TropMatrix::new(rows?)?)
}

/// JSON matrix: array of arrays of "p/q" strings.
pub fn parse_matrix_json(text: &str) -> Result<TropMatrix, IoError> {
    let rows: Vec<Vec<String>> = serde_json::from_str(text)?;
    let rows: Result<Vec<Vec<Rat>>, IoError> = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rat(s)).collect())
        .collect();
    Ok(TropMatrix::new(rows?)?)
}

/// Accepts either format: JSON if the text starts with '[', CSV otherwise.
pub fn parse_matrix(text: &str) -> Result<TropMatrix, IoError> {
    if text.trim_start().starts_with('[') {
        parse_matrix_json(text)
    } else {
        parse_matrix_csv(text)
    }
}

pub fn matrix_to_json(v: &TropMatrix) -> Vec<Vec<String>> {
    (0..v.k())
        .map(|i| v.row(i).iter().map(format_rat).collect())
        .collect()
}

/// DOT rendering of a dual graph, shared-facet flats as edge labels.
pub fn dual_graph_dot(g: &DualGraph) -> String {
    let mut out = String::from("graph dual {\n");
    for v in 0..g.node_count {
        out.push_str(&format!("  {v};\n"));
    }
    let mut edges: Vec<(usize, usize, Vec<usize>, i64)> = g
        .edges
        .iter()
        .map(|e| (e.a, e.b, e.flat.to_vec(), e.bound))
        .collect();
    edges.sort();
    for (a, b, flat, bound) in edges {
        let label: Vec<String> = flat.iter().map(usize::to_string).collect();
        out.push_str(&format!(
            "  {a} -- {b} [label=\"x({}) = {bound}\"];\n",
            label.join(" ")
        ));
    }
    out.push_str("}\n");
    out
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String, IoError> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}
