//! Matroids from bipartite forests: a forest on node set [k] together with
//! a partition of the ground set into blocks A_1,...,A_k (one per node)
//! determines a matroid whose bases are the k-subsets obeying the
//! node-neighborhood cardinality rule. Trees give inseparable matroids;
//! forests give direct sums; a singleton node contributes U(1, A_j).

use std::collections::HashSet;

use thiserror::Error;

use crate::matroid::{Matroid, MatroidError};
use crate::polytope::{HRep, HalfSpace};
use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("block {index} has fewer than 2 elements; every block needs >= 2 so the ground set has >= 2k elements")]
    BlockTooSmall { index: usize },
    #[error("blocks do not partition the ground set")]
    NotAPartition,
    #[error("edge set is not a bipartite forest")]
    NotAForest,
    #[error("node index out of range")]
    BadNode,
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A partition of [n] into k blocks, each of size at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    blocks: Vec<Subset>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Subset>) -> Result<Self, SpecError> {
        let mut seen = Subset::empty(n);
        for (i, b) in blocks.iter().enumerate() {
            if b.ground_size() != n || !seen.is_disjoint_from(b) {
                return Err(SpecError::NotAPartition);
            }
            if b.len() < 2 {
                return Err(SpecError::BlockTooSmall { index: i });
            }
            seen = seen.union(b);
        }
        if !seen.is_full() {
            return Err(SpecError::NotAPartition);
        }
        Ok(Partition { n, blocks })
    }

    /// Consecutive blocks of the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self, SpecError> {
        let n: usize = sizes.iter().sum();
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut at = 0;
        for &s in sizes {
            let idx: Vec<usize> = (at..at + s).collect();
            blocks.push(Subset::from_indices(n, &idx).unwrap());
            at += s;
        }
        Partition::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, i: usize) -> Subset {
        self.blocks[i]
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// A_J: the union of the blocks indexed by a node set.
    pub fn union_of(&self, nodes: &Subset) -> Subset {
        let mut out = Subset::empty(self.n);
        for j in nodes.iter() {
            out = out.union(&self.blocks[j]);
        }
        out
    }
}

/// A bipartite forest on the partition's node set. Edges are oriented
/// (i, c) with i on the I-side; nodes in no edge are isolated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestSpec {
    partition: Partition,
    edges: Vec<(usize, usize)>,
}

impl ForestSpec {
    pub fn new(partition: Partition, mut edges: Vec<(usize, usize)>) -> Result<Self, SpecError> {
        let k = partition.k();
        edges.sort_unstable();
        edges.dedup();
        let mut i_side = Subset::empty(k);
        let mut c_side = Subset::empty(k);
        for &(i, c) in &edges {
            if i >= k || c >= k {
                return Err(SpecError::BadNode);
            }
            i_side = i_side.insert(i);
            c_side = c_side.insert(c);
        }
        if !i_side.is_disjoint_from(&c_side) {
            return Err(SpecError::NotAForest);
        }
        // Acyclicity by union-find.
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(i, c) in &edges {
            let (ri, rc) = (find(&mut parent, i), find(&mut parent, c));
            if ri == rc {
                return Err(SpecError::NotAForest);
            }
            parent[ri] = rc;
        }
        Ok(ForestSpec { partition, edges })
    }

    /// A tree spec straight from sizes and edges; convenience for tests.
    pub fn from_sizes(sizes: &[usize], edges: &[(usize, usize)]) -> Result<Self, SpecError> {
        ForestSpec::new(Partition::from_sizes(sizes)?, edges.to_vec())
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn k(&self) -> usize {
        self.partition.k()
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn i_side(&self) -> Subset {
        let mut out = Subset::empty(self.k());
        for &(i, _) in &self.edges {
            out = out.insert(i);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.k()
    }

    /// Connected components as node sets (isolated nodes are singletons).
    pub fn components(&self) -> Vec<Subset> {
        let k = self.k();
        let mut comp: Vec<Subset> = (0..k).map(|j| Subset::singleton(k, j)).collect();
        let mut rep: Vec<usize> = (0..k).collect();
        for &(i, c) in &self.edges {
            let (ri, rc) = (rep[i], rep[c]);
            if ri != rc {
                let merged = comp[ri].union(&comp[rc]);
                for j in merged.iter() {
                    rep[j] = ri;
                }
                comp[ri] = merged;
            }
        }
        let mut out = Vec::new();
        for j in 0..k {
            if rep[j] == j {
                out.push(comp[j]);
            }
        }
        out
    }

    /// V_j: the closed neighborhood for j outside I, {j} for j in I.
    pub fn v_of(&self, j: usize) -> Subset {
        let k = self.k();
        if self.i_side().contains(j) {
            return Subset::singleton(k, j);
        }
        let mut out = Subset::singleton(k, j);
        for &(i, c) in &self.edges {
            if c == j {
                out = out.insert(i);
            }
        }
        out
    }

    /// Node set of the component of the forest minus (i,c) containing i.
    pub fn plus_side(&self, edge: (usize, usize)) -> Result<Subset, SpecError> {
        if !self.edges.contains(&edge) {
            return Err(SpecError::BadNode);
        }
        let k = self.k();
        let mut seen = Subset::singleton(k, edge.0);
        loop {
            let mut grown = seen;
            for &(i, c) in &self.edges {
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

    pub fn remove_edge(&self, edge: (usize, usize)) -> Result<ForestSpec, SpecError> {
        if !self.edges.contains(&edge) {
            return Err(SpecError::BadNode);
        }
        let edges: Vec<(usize, usize)> =
            self.edges.iter().copied().filter(|e| *e != edge).collect();
        Ok(ForestSpec {
            partition: self.partition.clone(),
            edges,
        })
    }

    /// The per-edge cardinality constraints |B ∩ A_{V(G_+)}| ≤ |V(G_+)|.
    fn edge_constraints(&self) -> Result<Vec<(Subset, usize)>, SpecError> {
        self.edges
            .iter()
            .map(|&e| {
                let plus = self.plus_side(e)?;
                Ok((self.partition.union_of(&plus), plus.len()))
            })
            .collect()
    }

    /// The matroid: all k-subsets passing the edge rule within each
    /// component, exchange-verified.
    pub fn matroid(&self) -> Result<Matroid, SpecError> {
        let constraints = self.edge_constraints()?;
        let equations: Vec<(Subset, usize)> = self
            .components()
            .iter()
            .map(|t| (self.partition.union_of(t), t.len()))
            .collect();
        let bases: Vec<Subset> = Subset::all_of_size(self.n(), self.k())
            .filter(|b| {
                constraints
                    .iter()
                    .all(|(flat, bound)| b.intersection(flat).len() <= *bound)
                    && equations
                        .iter()
                        .all(|(flat, size)| b.intersection(flat).len() == *size)
            })
            .collect();
        Ok(Matroid::new(self.n(), &bases)?)
    }

    /// All transversals: one element per block. Each is a basis.
    pub fn transversals(&self) -> Vec<Subset> {
        let mut out = vec![Subset::empty(self.n())];
        for b in self.partition.blocks() {
            let mut next = Vec::with_capacity(out.len() * b.len());
            for partial in &out {
                for e in b.iter() {
                    next.push(partial.insert(e));
                }
            }
            out = next;
        }
        out
    }

    /// Generative cross-check: start from a transversal and, for each
    /// I-side node, either keep its element or trade it for an unused
    /// element of a neighboring block. Must reproduce the filtered bases.
    pub fn generate_by_moves(&self) -> Vec<Subset> {
        let i_nodes: Vec<usize> = self.i_side().to_vec();
        let mut found: HashSet<u32> = HashSet::new();
        for b0 in self.transversals() {
            let picks: Vec<usize> = self
                .partition
                .blocks()
                .iter()
                .map(|a| b0.intersection(a).iter().next().unwrap())
                .collect();
            self.moves_from(&picks, &i_nodes, 0, b0, &mut found);
        }
        let mut masks: Vec<u32> = found.into_iter().collect();
        masks.sort_unstable();
        masks
            .into_iter()
            .map(|m| Subset::from_bits(self.n(), m))
            .collect()
    }

    fn moves_from(
        &self,
        picks: &[usize],
        i_nodes: &[usize],
        depth: usize,
        current: Subset,
        found: &mut HashSet<u32>,
    ) {
        if depth == i_nodes.len() {
            found.insert(current.bits());
            return;
        }
        let i = i_nodes[depth];
        // Keep the ball in bag i.
        self.moves_from(picks, i_nodes, depth + 1, current, found);
        // Or move it to a neighboring bag with a fresh label.
        let without = current.remove(picks[i]);
        for &(a, c) in &self.edges {
            if a != i {
                continue;
            }
            for label in self.partition.block(c).difference(&current).iter() {
                self.moves_from(picks, i_nodes, depth + 1, without.insert(label), found);
            }
        }
    }

    /// Non-degenerate flats of size > 1 (one per edge) and the node flats
    /// A_{V_j}, each with its rank.
    pub fn nondeg_flats(&self) -> Result<(Vec<(Subset, usize)>, Vec<(Subset, usize)>), SpecError> {
        let mut edge_flats = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            let plus = self.plus_side(e)?;
            edge_flats.push((self.partition.union_of(&plus), plus.len()));
        }
        let node_flats: Vec<(Subset, usize)> = (0..self.k())
            .map(|j| {
                let vj = self.v_of(j);
                (self.partition.union_of(&vj), vj.len())
            })
            .collect();
        Ok((edge_flats, node_flats))
    }

    /// H-description: per-component equations, the unit cube bounds, and
    /// one half-space per edge.
    pub fn h_rep(&self) -> Result<HRep, SpecError> {
        let n = self.n();
        let equations: Vec<(Subset, i64)> = self
            .components()
            .iter()
            .map(|t| (self.partition.union_of(t), t.len() as i64))
            .collect();
        let mut inequalities: Vec<HalfSpace> = Vec::new();
        for e in 0..n {
            inequalities.push(HalfSpace::ge(Subset::singleton(n, e), 0));
            inequalities.push(HalfSpace::le(Subset::singleton(n, e), 1));
        }
        for (flat, rank) in self.nondeg_flats()?.0 {
            inequalities.push(HalfSpace::le(flat, rank as i64));
        }
        Ok(HRep {
            equations,
            inequalities,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star4() -> ForestSpec {
        // Node 0 is the center; blocks of size 2 on 8 elements.
        ForestSpec::from_sizes(&[2, 2, 2, 2], &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::from_sizes(&[2, 2, 2]).is_ok());
        assert_eq!(
            Partition::from_sizes(&[1, 2, 2]).unwrap_err(),
            SpecError::BlockTooSmall { index: 0 }
        );
        let n = 4;
        let overlapping = vec![
            Subset::from_indices(n, &[0, 1]).unwrap(),
            Subset::from_indices(n, &[1, 2, 3]).unwrap(),
        ];
        assert_eq!(
            Partition::new(n, overlapping).unwrap_err(),
            SpecError::NotAPartition
        );
    }

    #[test]
    fn forest_validation() {
        assert!(ForestSpec::from_sizes(&[2, 2, 2], &[(0, 2), (1, 2)]).is_ok());
        // Node on both sides.
        assert_eq!(
            ForestSpec::from_sizes(&[2, 2, 2], &[(0, 1), (1, 2)]).unwrap_err(),
            SpecError::NotAForest
        );
        // Cycle.
        assert_eq!(
            ForestSpec::from_sizes(&[2, 2, 2, 2], &[(0, 1), (0, 2), (3, 1), (3, 2)]).unwrap_err(),
            SpecError::NotAForest
        );
    }

    #[test]
    fn star_matroid_golden() {
        let spec = star4();
        let m = spec.matroid().unwrap();
        // 16 transversals plus 12 sets missing the center block (one outer
        // block doubled). The naive closed-neighborhood reading of the rule
        // would also admit sets doubling two outer blocks, but those break
        // the exchange axiom; the per-edge constraints exclude them.
        assert_eq!(m.base_count(), 28);
        let center = spec.partition().block(0);
        assert_eq!(
            m.bases().filter(|b| b.is_disjoint_from(&center)).count(),
            12
        );
        assert_eq!(m.rank(), 4);
        assert!(m.is_inseparable());
        let a = |js: &[usize]| {
            spec.partition()
                .union_of(&Subset::from_indices(4, js).unwrap())
        };
        // Non-degenerate flats of size > 1: A_{134}, A_{124}, A_{123}, rank 3.
        let (edge_flats, node_flats) = spec.nondeg_flats().unwrap();
        let mut got: Vec<(Subset, usize)> = edge_flats.clone();
        got.sort();
        let mut want = vec![(a(&[0, 2, 3]), 3), (a(&[0, 1, 3]), 3), (a(&[0, 1, 2]), 3)];
        want.sort();
        assert_eq!(got, want);
        for (f, r) in &edge_flats {
            assert!(m.is_flat(f));
            assert_eq!(m.rank_of(f), *r);
            assert!(m.is_nondegenerate(f));
        }
        // Node flats: A_1 rank 1 and A_{1c} rank 2.
        let mut nf = node_flats.clone();
        nf.sort();
        let mut want_nodes = vec![
            (a(&[0]), 1),
            (a(&[0, 1]), 2),
            (a(&[0, 2]), 2),
            (a(&[0, 3]), 2),
        ];
        want_nodes.sort();
        assert_eq!(nf, want_nodes);
        for (f, r) in &node_flats {
            assert!(m.is_flat(f));
            assert_eq!(m.rank_of(f), *r);
        }
    }

    #[test]
    fn path_matroid() {
        // Path 1-3-2 in 1-based labels: center node 2 outside I.
        let spec = ForestSpec::from_sizes(&[2, 2, 2], &[(0, 2), (1, 2)]).unwrap();
        let m = spec.matroid().unwrap();
        assert_eq!(m.base_count(), 12);
        assert!(m.is_inseparable());
    }

    #[test]
    fn forest_is_direct_sum() {
        // Forest {(0,2)} plus isolated node 1.
        let spec = ForestSpec::from_sizes(&[2, 2, 2], &[(0, 2)]).unwrap();
        let m = spec.matroid().unwrap();
        assert_eq!(m.kappa(), 2);
        // Same bases as MA(tree on {0,2}) ⊕ U(1, A_2), checked blockwise.
        for b in m.bases() {
            assert_eq!(b.intersection(&spec.partition().block(1)).len(), 1);
        }
        // All-isolated forest: product of block choices.
        let m0 = ForestSpec::from_sizes(&[2, 2, 2], &[])
            .unwrap()
            .matroid()
            .unwrap();
        assert_eq!(m0.base_count(), 8);
        assert_eq!(m0.kappa(), 3);
    }

    #[test]
    fn transversals_are_bases() {
        let spec = star4();
        let m = spec.matroid().unwrap();
        let ts = spec.transversals();
        assert_eq!(ts.len(), 16);
        for t in ts {
            assert!(m.is_base(&t));
        }
    }

    #[test]
    fn ball_moves_match_filter() {
        for spec in [
            star4(),
            ForestSpec::from_sizes(&[2, 2, 2], &[(0, 2), (1, 2)]).unwrap(),
            ForestSpec::from_sizes(&[3, 2, 2], &[(0, 1), (0, 2)]).unwrap(),
            ForestSpec::from_sizes(&[2, 2, 2], &[(0, 2)]).unwrap(),
        ] {
            let filtered: Vec<Subset> = spec.matroid().unwrap().bases().collect();
            let generated = spec.generate_by_moves();
            assert_eq!(filtered, generated);
        }
    }

    #[test]
    fn edge_removal_identity() {
        let spec = star4();
        let m = spec.matroid().unwrap();
        for &e in spec.edges() {
            let plus = spec.plus_side(e).unwrap();
            let flat = spec.partition().union_of(&plus);
            let removed = spec.remove_edge(e).unwrap().matroid().unwrap();
            assert_eq!(m.decompose(&flat), removed);
        }
    }

    #[test]
    fn h_rep_solutions_match_bases() {
        for spec in [
            star4(),
            ForestSpec::from_sizes(&[2, 2, 2], &[(0, 2), (1, 2)]).unwrap(),
            ForestSpec::from_sizes(&[2, 3, 2], &[(0, 1), (0, 2)]).unwrap(),
            ForestSpec::from_sizes(&[2, 2, 2], &[(0, 2)]).unwrap(),
        ] {
            let h = spec.h_rep().unwrap();
            let m = spec.matroid().unwrap();
            let solutions: Vec<u32> = Subset::all_of_size(spec.n(), spec.k())
                .filter(|s| h.admits_mask(s.bits()))
                .map(|s| s.bits())
                .collect();
            let bases: Vec<u32> = m.bases().map(|b| b.bits()).collect();
            assert_eq!(solutions, bases);
        }
    }

    #[test]
    fn pigeonhole_bounds() {
        let spec = star4();
        let m = spec.matroid().unwrap();
        let i_blocks = spec.i_side();
        for b in m.bases() {
            for i in i_blocks.iter() {
                assert!(b.intersection(&spec.partition().block(i)).len() <= 1);
            }
            for c in i_blocks.complement().iter() {
                assert!(!b.intersection(&spec.partition().block(c)).is_empty());
            }
        }
    }
}
