//! Combinatorics of biconvex polytopes (polytropes): vertex expressions
//! v = v_1^{C_1}···v_k^{C_k}, their bipartite spanning trees, adjacency,
//! and the combinatorial log map. Everything here is symbolic; numeric
//! realization lives in the tropical module.

use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("invalid vertex expression: {0}")]
    Invalid(&'static str),
    #[error("expressions have different k")]
    KMismatch,
    #[error("edge not in the vertex's tree")]
    EdgeNotInTree,
    #[error("edge set is not a bipartite spanning tree")]
    NotATree,
    #[error("vertex set does not span a face")]
    NotAFace,
    #[error("operation requires a type-1 or generator vertex")]
    WrongKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Generator,
    Type0,
    Type1,
}

/// A polytrope vertex encoded by its branch sets: C_i lists the generators
/// whose max-plus hyperplane at i passes through the vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexExpr {
    k: usize,
    c: Vec<Subset>,
}

impl VertexExpr {
    pub fn new(k: usize, c: Vec<Subset>) -> Result<Self, ExprError> {
        let e = VertexExpr { k, c };
        e.validate()?;
        Ok(e)
    }

    /// The i-th generator: C_i = [k] − {i}, all other branch sets empty.
    pub fn generator(k: usize, i: usize) -> Self {
        let mut c = vec![Subset::empty(k); k];
        c[i] = Subset::singleton(k, i).complement();
        VertexExpr { k, c }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn c(&self, i: usize) -> Subset {
        self.c[i]
    }

    pub fn c_all(&self) -> &[Subset] {
        &self.c
    }

    /// I(v) = {i : C_i ≠ ∅}.
    pub fn i_set(&self) -> Subset {
        let mut out = Subset::empty(self.k);
        for i in 0..self.k {
            if !self.c[i].is_empty() {
                out = out.insert(i);
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), ExprError> {
        if self.k < 2 || self.c.len() != self.k {
            return Err(ExprError::Invalid("need k >= 2 branch sets"));
        }
        let total: usize = self.c.iter().map(|s| s.len()).sum();
        if total != self.k - 1 {
            return Err(ExprError::Invalid("branch sets must hold k-1 elements"));
        }
        let i_set = self.i_set();
        if !i_set.is_proper_nonempty() {
            return Err(ExprError::Invalid("I(v) must be non-empty and proper"));
        }
        let mut covered = Subset::empty(self.k);
        for i in i_set.iter() {
            if self.c[i].contains(i) {
                return Err(ExprError::Invalid("C_i may not contain i"));
            }
            if !self.c[i].is_disjoint_from(&i_set) {
                return Err(ExprError::Invalid("edges must cross the bipartition"));
            }
            covered = covered.union(&self.c[i]);
        }
        if covered != i_set.complement() {
            return Err(ExprError::Invalid(
                "branch sets must cover the complement of I",
            ));
        }
        if !self.tree_is_connected() {
            return Err(ExprError::Invalid("edge graph is not connected"));
        }
        if i_set.len() >= 2 {
            let mut cap = Subset::full(self.k);
            for i in i_set.iter() {
                cap = cap.intersection(&self.c[i]);
            }
            if cap.len() > 1 {
                return Err(ExprError::Invalid("branch sets share more than one node"));
            }
        }
        Ok(())
    }

    fn tree_is_connected(&self) -> bool {
        // k-1 distinct edges on k nodes: connected iff spanning tree.
        let mut seen = Subset::singleton(self.k, 0);
        loop {
            let mut grown = seen;
            for i in self.i_set().iter() {
                for c in self.c[i].iter() {
                    if grown.contains(i) || grown.contains(c) {
                        grown = grown.insert(i).insert(c);
                    }
                }
            }
            if grown == seen {
                return seen.is_full();
            }
            seen = grown;
        }
    }

    /// Exponent vector of μ(v) = x_1^{|C_1|}···x_k^{|C_k|}, degree k−1.
    pub fn monomial(&self) -> Vec<usize> {
        self.c.iter().map(|s| s.len()).collect()
    }

    pub fn kind(&self) -> VertexKind {
        let i_set = self.i_set();
        if i_set.len() == 1 {
            return VertexKind::Generator;
        }
        let mut cap = Subset::full(self.k);
        for i in i_set.iter() {
            cap = cap.intersection(&self.c[i]);
        }
        if cap.is_empty() {
            VertexKind::Type0
        } else {
            VertexKind::Type1
        }
    }

    /// ⋂_{i∈I} C_i (the node c* for type-1 vertices).
    pub fn cap(&self) -> Subset {
        let mut cap = Subset::full(self.k);
        for i in self.i_set().iter() {
            cap = cap.intersection(&self.c[i]);
        }
        cap
    }

    /// D_i*(v) = (C_i − ⋂C_ℓ) ∪ {i} for i ∈ I(v). The pieces are disjoint
    /// and cover [k] − ⋂C_ℓ. Undefined for type-0 vertices.
    pub fn d_star(&self) -> Result<Vec<(usize, Subset)>, ExprError> {
        if self.kind() == VertexKind::Type0 {
            return Err(ExprError::WrongKind);
        }
        let cap = self.cap();
        Ok(self
            .i_set()
            .iter()
            .map(|i| (i, self.c[i].difference(&cap).insert(i)))
            .collect())
    }

    /// D_i(v) = ([k] − C_i) ∪ {i} for i ∈ I(v).
    pub fn d_set(&self, i: usize) -> Subset {
        self.c[i].complement().insert(i)
    }

    /// The bipartite tree with parts (I, I^c) and an edge (i,c) per c ∈ C_i.
    pub fn tree(&self) -> BipartiteTree {
        let mut edges = Vec::with_capacity(self.k - 1);
        for i in self.i_set().iter() {
            for c in self.c[i].iter() {
                edges.push((i, c));
            }
        }
        edges.sort_unstable();
        BipartiteTree {
            k: self.k,
            i_side: self.i_set(),
            edges,
        }
    }

    /// All valid expressions for a given k: every choice of a non-empty
    /// proper I and a spanning tree of the complete bipartite graph across
    /// (I, I^c) satisfying the branch-set invariants. Over-counts the
    /// vertices of any single polytrope; the tropical layer filters.
    pub fn enumerate_valid(k: usize) -> Vec<VertexExpr> {
        let mut out = Vec::new();
        for i_set in Subset::all(k).filter(|s| s.is_proper_nonempty()) {
            let others = i_set.complement().to_vec();
            let pairs: Vec<(usize, usize)> = i_set
                .iter()
                .flat_map(|i| others.iter().map(move |&c| (i, c)))
                .collect();
            // |I|·|I^c| >= k-1 whenever I is proper non-empty.
            for chosen in Subset::all_of_size(pairs.len(), k - 1) {
                let mut c = vec![Subset::empty(k); k];
                for x in chosen.iter() {
                    let (i, cc) = pairs[x];
                    c[i] = c[i].insert(cc);
                }
                let e = VertexExpr { k, c };
                if e.validate().is_ok() && e.i_set() == i_set {
                    out.push(e);
                }
            }
        }
        out.sort();
        out
    }

    /// Λ^v of a tree edge (i,c): the node set of the component of
    /// G^v − (i,c) containing i.
    pub fn log_map(&self, edge: (usize, usize)) -> Result<Subset, ExprError> {
        let tree = self.tree();
        if !tree.edges.contains(&edge) {
            return Err(ExprError::EdgeNotInTree);
        }
        let mut seen = Subset::singleton(self.k, edge.0);
        loop {
            let mut grown = seen;
            for &(i, c) in &tree.edges {
                if (i, c) == edge {
                    continue;
                }
                if grown.contains(i) || grown.contains(c) {
                    grown = grown.insert(i).insert(c);
                }
            }
            if grown == seen {
                return Ok(seen);
            }
            seen = grown;
        }
    }

    /// Whether two expressions are adjacent vertices: their trees must agree
    /// after removing one edge from each. Returns the removed edges
    /// (oriented as stored in each tree).
    pub fn adjacent(
        &self,
        other: &VertexExpr,
    ) -> Result<Option<((usize, usize), (usize, usize))>, ExprError> {
        if self.k != other.k {
            return Err(ExprError::KMismatch);
        }
        if self == other {
            return Ok(None);
        }
        // Edges are compared oriented: (i,c) records which endpoint sits on
        // the I-side, so a tree reusing an edge with roles swapped does not
        // share it.
        let mine = self.tree();
        let theirs = other.tree();
        let only_a: Vec<(usize, usize)> = mine
            .edges
            .iter()
            .filter(|e| !theirs.edges.contains(e))
            .copied()
            .collect();
        let only_b: Vec<(usize, usize)> = theirs
            .edges
            .iter()
            .filter(|e| !mine.edges.contains(e))
            .copied()
            .collect();
        if only_a.len() == 1 && only_b.len() == 1 {
            Ok(Some((only_a[0], only_b[0])))
        } else {
            Ok(None)
        }
    }
}

/// A spanning tree of [k] with all edges crossing the parts (I, I^c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteTree {
    pub k: usize,
    pub i_side: Subset,
    /// Edges (i, c) with i ∈ I, c ∈ I^c, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteTree {
    pub fn new(
        k: usize,
        i_side: Subset,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<Self, ExprError> {
        edges.sort_unstable();
        edges.dedup();
        let t = BipartiteTree { k, i_side, edges };
        t.expr()?; // validates everything
        Ok(t)
    }

    /// The vertex expression read back from the tree.
    pub fn expr(&self) -> Result<VertexExpr, ExprError> {
        if self.k < 2 {
            return Err(ExprError::NotATree);
        }
        let mut c = vec![Subset::empty(self.k); self.k];
        for &(i, cc) in &self.edges {
            if i >= self.k || cc >= self.k || !self.i_side.contains(i) || self.i_side.contains(cc) {
                return Err(ExprError::NotATree);
            }
            c[i] = c[i].insert(cc);
        }
        let e = VertexExpr { k: self.k, c };
        e.validate().map_err(|_| ExprError::NotATree)?;
        if e.i_set() != self.i_side {
            return Err(ExprError::NotATree);
        }
        Ok(e)
    }
}

/// The expression of a face: componentwise intersection of its vertices'
/// branch sets, with dim = k−1−Σ|C_i(Q)|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceExpr {
    pub k: usize,
    pub c: Vec<Subset>,
    pub dim: usize,
}

/// Intersects the branch sets of the given vertices. The caller is
/// responsible for the vertices spanning a face; see
/// [`PolytropeType::face_expr`] for the checked variant.
pub fn face_expr_of(vertices: &[VertexExpr]) -> Result<FaceExpr, ExprError> {
    let first = vertices.first().ok_or(ExprError::NotAFace)?;
    let k = first.k;
    if vertices.iter().any(|v| v.k != k) {
        return Err(ExprError::KMismatch);
    }
    let mut c = first.c.clone();
    for v in &vertices[1..] {
        for i in 0..k {
            c[i] = c[i].intersection(&v.c[i]);
        }
    }
    let total: usize = c.iter().map(|s| s.len()).sum();
    Ok(FaceExpr {
        k,
        c,
        dim: k - 1 - total,
    })
}

/// An edge of the 1-skeleton with its two log directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeEdge {
    pub a: usize,
    pub b: usize,
    /// Λ^{v_a}(v_a v_b).
    pub log_a: Subset,
    /// Λ^{v_b}(v_a v_b).
    pub log_b: Subset,
}

/// A polytrope's combinatorial type: its vertex expressions and 1-skeleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytropeType {
    pub k: usize,
    pub vertices: Vec<VertexExpr>,
    pub edges: Vec<TypeEdge>,
}

/// Maximum vertex count C(2k−2, k−1).
pub fn max_vertex_count(k: usize) -> usize {
    binomial(2 * k - 2, k - 1)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out: usize = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) / (i + 1);
    }
    out
}

impl PolytropeType {
    /// Assembles a type from a vertex list: validates, sorts, and derives
    /// the adjacency with per-endpoint log directions.
    pub fn from_vertices(k: usize, vertices: Vec<VertexExpr>) -> Result<Self, ExprError> {
        let mut vertices = vertices;
        for v in &vertices {
            if v.k != k {
                return Err(ExprError::KMismatch);
            }
            v.validate()?;
        }
        vertices.sort();
        vertices.dedup();
        let mut edges = Vec::new();
        for a in 0..vertices.len() {
            for b in (a + 1)..vertices.len() {
                if let Some((fa, fb)) = vertices[a].adjacent(&vertices[b])? {
                    edges.push(TypeEdge {
                        a,
                        b,
                        log_a: vertices[a].log_map(fa)?,
                        log_b: vertices[b].log_map(fb)?,
                    });
                }
            }
        }
        Ok(PolytropeType { k, vertices, edges })
    }

    pub fn is_maximal(&self) -> bool {
        self.vertices.len() == max_vertex_count(self.k)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.a == v || e.b == v).count()
    }

    /// Checked face expression: the given vertices must be exactly the
    /// type's vertices containing the intersected expression.
    pub fn face_expr(&self, members: &[usize]) -> Result<FaceExpr, ExprError> {
        let chosen: Vec<VertexExpr> = members.iter().map(|&i| self.vertices[i].clone()).collect();
        let q = face_expr_of(&chosen)?;
        let closure: Vec<usize> = (0..self.vertices.len())
            .filter(|&w| (0..self.k).all(|i| q.c[i].is_subset_of(&self.vertices[w].c[i])))
            .collect();
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if closure != sorted {
            return Err(ExprError::NotAFace);
        }
        Ok(q)
    }

    /// All faces of the given dimension, each as (expression, member
    /// vertex indices). Faces of dim ℓ arise by removing ℓ tree edges
    /// from a vertex's expression.
    pub fn faces_of(&self, dim: usize) -> Vec<(FaceExpr, Vec<usize>)> {
        let mut out: Vec<(FaceExpr, Vec<usize>)> = Vec::new();
        if dim > self.k - 1 {
            return out;
        }
        for v in &self.vertices {
            let tree = v.tree();
            for removed in Subset::all_of_size(tree.edges.len(), dim) {
                let mut c = vec![Subset::empty(self.k); self.k];
                for (pos, &(i, cc)) in tree.edges.iter().enumerate() {
                    if !removed.contains(pos) {
                        c[i] = c[i].insert(cc);
                    }
                }
                let total: usize = c.iter().map(|s| s.len()).sum();
                let q = FaceExpr {
                    k: self.k,
                    c,
                    dim: self.k - 1 - total,
                };
                if out.iter().any(|(existing, _)| existing == &q) {
                    continue;
                }
                let members: Vec<usize> = (0..self.vertices.len())
                    .filter(|&w| (0..self.k).all(|i| q.c[i].is_subset_of(&self.vertices[w].c[i])))
                    .collect();
                out.push((q, members));
            }
        }
        out.sort_by(|(a, _), (b, _)| a.c.cmp(&b.c));
        out
    }

    /// Structural check from the neighbor proposition: on an edge vw with
    /// both ends non-generators, 1 < |Λ^v| < k−1 and |I(v)| ≥ 3 and v of
    /// type 1 force w to have type 0. Returns offending edge indices.
    pub fn type0_neighbor_check(&self) -> Vec<usize> {
        let mut violations = Vec::new();
        for (idx, e) in self.edges.iter().enumerate() {
            for (v, w, log) in [
                (&self.vertices[e.a], &self.vertices[e.b], e.log_a),
                (&self.vertices[e.b], &self.vertices[e.a], e.log_b),
            ] {
                if v.kind() == VertexKind::Generator || w.kind() == VertexKind::Generator {
                    continue;
                }
                if log.len() <= 1 || log.len() >= self.k - 1 {
                    continue;
                }
                if v.i_set().len() < 3 {
                    continue;
                }
                if v.kind() == VertexKind::Type1 && w.kind() != VertexKind::Type0 {
                    violations.push(idx);
                }
            }
        }
        violations
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expr(k: usize, c_lists: &[&[usize]]) -> VertexExpr {
        let c: Vec<Subset> = c_lists
            .iter()
            .map(|l| Subset::from_indices(k, l).unwrap())
            .collect();
        VertexExpr::new(k, c).unwrap()
    }

    #[test]
    fn validation() {
        // Generators are valid.
        for i in 0..4 {
            VertexExpr::generator(4, i).validate().unwrap();
        }
        // v_1^{{3}} v_2^{{3,4}} in 1-based is C_0={2}, C_1={2,3} here.
        let v = expr(4, &[&[2], &[2, 3], &[], &[]]);
        assert_eq!(v.i_set().to_vec(), vec![0, 1]);
        // Edge into the I side is rejected.
        let bad = VertexExpr::new(
            4,
            vec![
                Subset::from_indices(4, &[1]).unwrap(),
                Subset::from_indices(4, &[2, 3]).unwrap(),
                Subset::empty(4),
                Subset::empty(4),
            ],
        );
        assert!(matches!(bad, Err(ExprError::Invalid(_))));
        // Wrong total size.
        let short = VertexExpr::new(
            4,
            vec![
                Subset::from_indices(4, &[2]).unwrap(),
                Subset::empty(4),
                Subset::empty(4),
                Subset::empty(4),
            ],
        );
        assert!(short.is_err());
    }

    #[test]
    fn monomials_and_kinds() {
        let gen = VertexExpr::generator(4, 0);
        assert_eq!(gen.monomial(), vec![3, 0, 0, 0]);
        assert_eq!(gen.kind(), VertexKind::Generator);
        let v = expr(4, &[&[2], &[2, 3], &[], &[]]);
        assert_eq!(v.monomial(), vec![1, 2, 0, 0]);
        assert_eq!(v.kind(), VertexKind::Type1);
        assert_eq!(v.cap().to_vec(), vec![2]);
        // k=5 vertex with empty branch-set intersection.
        let t1 = expr(5, &[&[2, 3], &[2, 4], &[], &[], &[]]);
        assert_eq!(t1.kind(), VertexKind::Type1);
        let t0 = expr(5, &[&[3, 4], &[3], &[4], &[], &[]]);
        assert_eq!(t0.kind(), VertexKind::Type0);
    }

    #[test]
    fn d_star_partition() {
        let v = expr(4, &[&[2], &[2, 3], &[], &[]]);
        let d = v.d_star().unwrap();
        assert_eq!(d[0], (0, Subset::from_indices(4, &[0]).unwrap()));
        assert_eq!(d[1], (1, Subset::from_indices(4, &[1, 3]).unwrap()));
        // Pieces are disjoint and cover [k] − cap.
        let mut union = Subset::empty(4);
        for (_, piece) in &d {
            assert!(union.is_disjoint_from(piece));
            union = union.union(piece);
        }
        assert_eq!(union, v.cap().complement());
        // Type-0 has no c*.
        let t0 = expr(5, &[&[3, 4], &[3], &[4], &[], &[]]);
        assert_eq!(t0.d_star().unwrap_err(), ExprError::WrongKind);
    }

    #[test]
    fn tree_roundtrip() {
        let gen = VertexExpr::generator(3, 0);
        let t = gen.tree();
        assert_eq!(t.edges, vec![(0, 1), (0, 2)]);
        assert_eq!(t.expr().unwrap(), gen);
        for e in VertexExpr::enumerate_valid(4) {
            assert_eq!(e.tree().expr().unwrap(), e);
        }
        // Path 0-2-1 read back as an expression.
        let path = BipartiteTree::new(
            3,
            Subset::from_indices(3, &[0, 1]).unwrap(),
            vec![(0, 2), (1, 2)],
        )
        .unwrap();
        assert_eq!(path.expr().unwrap(), expr(3, &[&[2], &[2], &[]]));
    }

    #[test]
    fn enumeration_counts() {
        // 4 generators + 24 two-element I + 4 co-stars.
        assert_eq!(VertexExpr::enumerate_valid(4).len(), 32);
        assert_eq!(VertexExpr::enumerate_valid(3).len(), 6);
    }

    #[test]
    fn adjacency() {
        let v0 = VertexExpr::generator(3, 0);
        let w = expr(3, &[&[2], &[2], &[]]);
        let (f0, fw) = v0.adjacent(&w).unwrap().unwrap();
        assert_eq!(f0, (0, 1));
        assert_eq!(fw, (1, 2));
        // Removed edges share node 1, and indeed I differs.
        assert_ne!(v0.i_set(), w.i_set());
        // Identical undirected trees are not adjacent.
        let costar = expr(3, &[&[], &[0], &[0]]);
        assert_eq!(v0.adjacent(&costar).unwrap(), None);
        assert_eq!(v0.adjacent(&v0).unwrap(), None);
        // Different generators are not adjacent for k >= 3.
        let v1 = VertexExpr::generator(3, 1);
        assert_eq!(v0.adjacent(&v1).unwrap(), None);
    }

    #[test]
    fn log_maps() {
        let v0 = VertexExpr::generator(4, 0);
        assert_eq!(
            v0.log_map((0, 2)).unwrap(),
            Subset::from_indices(4, &[0, 1, 3]).unwrap()
        );
        // v = v_1^{{3}} v_2^{{3,4}}: direction sets {1}, {2,4}, {1,2,3}
        // in 1-based labels.
        let v = expr(4, &[&[2], &[2, 3], &[], &[]]);
        let mut logs: Vec<Vec<usize>> = v
            .tree()
            .edges
            .iter()
            .map(|&e| v.log_map(e).unwrap().to_vec())
            .collect();
        logs.sort();
        assert_eq!(logs, vec![vec![0], vec![0, 1, 2], vec![1, 3]]);
        assert_eq!(v.log_map((0, 3)).unwrap_err(), ExprError::EdgeNotInTree);
    }

    #[test]
    fn hexagon_type() {
        // All six k=3 expressions form the hexagon.
        let t = PolytropeType::from_vertices(3, VertexExpr::enumerate_valid(3)).unwrap();
        assert!(t.is_maximal());
        assert_eq!(t.edges.len(), 6);
        for v in 0..6 {
            assert_eq!(t.degree(v), 2);
        }
        // Log directions partition [k] on every edge.
        for e in &t.edges {
            assert!(e.log_a.is_disjoint_from(&e.log_b));
            assert!(e.log_a.union(&e.log_b).is_full());
        }
    }

    #[test]
    fn faces_and_expressions() {
        let t = PolytropeType::from_vertices(3, VertexExpr::enumerate_valid(3)).unwrap();
        // A single vertex is a 0-face.
        let q = t.face_expr(&[0]).unwrap();
        assert_eq!(q.dim, 0);
        // The whole polytrope is the unique top face.
        let top = t.faces_of(2);
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].1.len(), 6);
        // Six 1-faces (the hexagon's edges), each with two members.
        let edges = t.faces_of(1);
        assert_eq!(edges.len(), 6);
        assert!(edges.iter().all(|(q, m)| q.dim == 1 && m.len() == 2));
        // An edge's expression via the checked path.
        let e = &t.edges[0];
        let q = t.face_expr(&[e.a, e.b]).unwrap();
        assert_eq!(q.dim, 1);
        // Two non-adjacent vertices do not span a face.
        let non_edge: Vec<usize> = {
            let mut found = None;
            'outer: for a in 0..6 {
                for b in (a + 1)..6 {
                    if !t.edges.iter().any(|e| (e.a, e.b) == (a, b)) {
                        found = Some(vec![a, b]);
                        break 'outer;
                    }
                }
            }
            found.unwrap()
        };
        assert_eq!(t.face_expr(&non_edge).unwrap_err(), ExprError::NotAFace);
    }

    #[test]
    fn neighbor_check_vacuous_small_k() {
        let t = PolytropeType::from_vertices(3, VertexExpr::enumerate_valid(3)).unwrap();
        assert!(t.type0_neighbor_check().is_empty());
    }
}
