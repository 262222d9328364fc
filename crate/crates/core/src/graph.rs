//! Labeled simple graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is stored as one `u32` neighbor mask per vertex. Every operation
//! returns a new graph; the receiver is never modified.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequence::{DecrementRecord, DegreeSequence};

pub const MAX_VERTICES: usize = 31;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u32>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "graph",
                n,
                cap: MAX_VERTICES,
            });
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v || g.has_edge(u, v) {
                return Err(Error::InvalidEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(k: usize) -> Result<Self> {
        let mut g = Self::empty(k)?;
        for u in 0..k {
            g.adj[u] = full_mask(k) & !(1 << u);
        }
        Ok(g)
    }

    /// The cycle 0-1-...-(k-1)-0. Requires `k >= 3`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Domain(format!(
                "cycle needs at least 3 vertices, got {k}"
            )));
        }
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Self::from_edges(k, &edges)
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_edges(a + b, &edges)
    }

    /// Triangles {0,1,2} and {3,4,5} joined by the matching 0-3, 1-4, 2-5.
    pub fn prism() -> Self {
        Self::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .expect("prism is well formed")
    }

    /// Builds a graph from raw neighbor masks. The caller guarantees symmetry
    /// and the absence of self-loops.
    pub(crate) fn from_masks(adj: Vec<u32>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|u| adj[u] & (1 << u) == 0));
        debug_assert!(
            (0..adj.len()).all(|u| (0..adj.len()).all(|v| (adj[u] >> v & 1) == (adj[v] >> u & 1)))
        );
        SimpleGraph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|m| m.count_ones() as usize).collect()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degrees())
    }

    /// Vertices ordered by non-increasing degree, ties broken by lowest label.
    /// Position `p` in this order is the vertex whose degree is the `p`-th term
    /// of [`Self::degree_sequence`].
    pub fn rank_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        order
    }

    /// Removes edges `ab` and `cd`, inserts `ac` and `bd`.
    pub fn two_switch(&self, ab: (usize, usize), cd: (usize, usize)) -> Result<SimpleGraph> {
        let ((a, b), (c, d)) = (ab, cd);
        for v in [a, b, c, d] {
            self.check_vertex(v)?;
        }
        if [a, b, c, d]
            .iter()
            .enumerate()
            .any(|(i, x)| [a, b, c, d][..i].contains(x))
        {
            return Err(Error::RejectedSwitch(format!(
                "endpoints {a}, {b}, {c}, {d} are not pairwise distinct"
            )));
        }
        for (u, v) in [ab, cd] {
            if !self.has_edge(u, v) {
                return Err(Error::RejectedSwitch(format!(
                    "{{{u}, {v}}} is not an edge"
                )));
            }
        }
        for (u, v) in [(a, c), (b, d)] {
            if self.has_edge(u, v) {
                return Err(Error::RejectedSwitch(format!(
                    "{{{u}, {v}}} is already an edge"
                )));
            }
        }
        let mut g = self.clone();
        g.remove_edge(a, b);
        g.remove_edge(c, d);
        g.add_edge(a, c);
        g.add_edge(b, d);
        Ok(g)
    }

    /// Removes `u z1`, `u z2` and `w x`; inserts `u w`, `z1 z2` and `u x`.
    ///
    /// Calling it again as `triple_switch(u, (w, x), (z1, z2))` undoes it.
    pub fn triple_switch(
        &self,
        u: usize,
        (z1, z2): (usize, usize),
        (w, x): (usize, usize),
    ) -> Result<SimpleGraph> {
        for v in [u, z1, z2, w, x] {
            self.check_vertex(v)?;
        }
        let removed = [(u, z1), (u, z2), (w, x)];
        let inserted = [(u, w), (z1, z2), (u, x)];
        for (p, q) in removed.iter().chain(&inserted) {
            if p == q {
                return Err(Error::RejectedSwitch(format!(
                    "degenerate pair {{{p}, {q}}}"
                )));
            }
        }
        if z1 == z2 || w == x || w == u || x == u {
            return Err(Error::RejectedSwitch("repeated vertex in switch".into()));
        }
        for &(p, q) in &removed {
            if !self.has_edge(p, q) {
                return Err(Error::RejectedSwitch(format!(
                    "{{{p}, {q}}} is not an edge"
                )));
            }
        }
        for &(p, q) in &inserted {
            if self.has_edge(p, q) {
                return Err(Error::RejectedSwitch(format!(
                    "{{{p}, {q}}} is already an edge"
                )));
            }
        }
        let mut g = self.clone();
        for &(p, q) in &removed {
            g.remove_edge(p, q);
        }
        for &(p, q) in &inserted {
            g.add_edge(p, q);
        }
        Ok(g)
    }

    /// Deletes `v`; survivors keep their relative order. The record lists the
    /// degree ranks (in the reduced graph) of the former neighbors of `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<(SimpleGraph, DecrementRecord)> {
        self.check_vertex(v)?;
        let low = (1u32 << v) - 1;
        let adj: Vec<u32> = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let m = self.adj[u];
                (m & low) | ((m >> 1) & !low)
            })
            .collect();
        let reduced = SimpleGraph::from_masks(adj);
        let former: Vec<usize> = self
            .neighbors(v)
            .map(|u| if u > v { u - 1 } else { u })
            .collect();
        let order = reduced.rank_order();
        let mut positions: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(_, w)| former.contains(w))
            .map(|(p, _)| p)
            .collect();
        positions.sort_unstable();
        let record = DecrementRecord::new(positions, self.degree(v));
        Ok((reduced, record))
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "graph",
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(SimpleGraph::from_masks(adj))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u32; self.n];
        for u in 0..self.n {
            adj[perm[u]] = bits(self.adj[u]).fold(0, |m, v| m | 1 << perm[v]);
        }
        SimpleGraph::from_masks(adj)
    }

    /// Graph with one extra vertex `n` adjacent to `targets`.
    pub fn with_new_vertex(&self, targets: &[usize]) -> Result<SimpleGraph> {
        let mut g = Self::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for &t in targets {
            self.check_vertex(t)?;
            if g.has_edge(t, self.n) {
                return Err(Error::InvalidEdge(t, self.n));
            }
            g.add_edge(t, self.n);
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, {:?})", self.n, self.edges())
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    /// Parses the edge-list format: a header `n m` followed by `m` lines `u v`.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "expected {m} edges, found {}",
                edges.len()
            )));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line `{extra}`")));
        }
        SimpleGraph::from_edges(n, &edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad integer `{t}` in line `{line}`")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got `{line}`"))),
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the set bit positions of `mask` in ascending order.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(terms: &[usize]) -> DegreeSequence {
        DegreeSequence::new(terms.to_vec()).unwrap()
    }

    #[test]
    fn degree_sequences_of_small_graphs() {
        assert_eq!(
            SimpleGraph::complete(4).unwrap().degree_sequence(),
            seq(&[3, 3, 3, 3])
        );
        assert_eq!(
            SimpleGraph::empty(3).unwrap().degree_sequence(),
            seq(&[0, 0, 0])
        );
        let g = SimpleGraph::prism();
        assert_eq!(g.degree_sequence().sigma(), 2 * g.edge_count());
    }

    #[test]
    fn two_switch_on_c4() {
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let g = c4.two_switch((0, 1), (2, 3)).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(g.degree_sequence(), seq(&[2, 2, 2, 2]));
    }

    #[test]
    fn two_switch_rejects_non_edges() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let err = g.two_switch((0, 3), (1, 2)).unwrap_err();
        assert!(
            matches!(err, Error::RejectedSwitch(ref m) if m.contains("{0, 3}")),
            "{err}"
        );
        assert!(g.two_switch((0, 1), (1, 2)).is_err());
    }

    #[test]
    fn two_switch_rejects_existing_target_edge() {
        let k4 = SimpleGraph::complete(4).unwrap();
        assert!(matches!(
            k4.two_switch((0, 1), (2, 3)),
            Err(Error::RejectedSwitch(_))
        ));
    }

    #[test]
    fn triple_switch_round_trip() {
        // u=0 with neighbors 1,2; edge 3-4; u not adjacent to 3 or 4; 1 not adjacent to 2.
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (3, 4), (1, 4), (2, 4)]).unwrap();
        let h = g.triple_switch(0, (1, 2), (3, 4)).unwrap();
        assert!(h.has_edge(0, 3) && h.has_edge(1, 2) && h.has_edge(0, 4));
        assert!(!h.has_edge(0, 1) && !h.has_edge(0, 2) && !h.has_edge(3, 4));
        assert_eq!(h.degree_sequence(), g.degree_sequence());
        assert_eq!(h.triple_switch(0, (3, 4), (1, 2)).unwrap(), g);
    }

    #[test]
    fn triple_switch_rejects_present_insertions() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (3, 4), (1, 2)]).unwrap();
        assert!(matches!(
            g.triple_switch(0, (1, 2), (3, 4)),
            Err(Error::RejectedSwitch(_))
        ));
    }

    #[test]
    fn delete_vertex_of_k4() {
        let (g, rec) = SimpleGraph::complete(4).unwrap().delete_vertex(0).unwrap();
        assert_eq!(g, SimpleGraph::complete(3).unwrap());
        assert_eq!(rec.positions(), &[0, 1, 2]);
        assert_eq!(rec.deleted_degree(), 3);
    }

    #[test]
    fn delete_isolated_vertex() {
        let g = SimpleGraph::complete(3)
            .unwrap()
            .disjoint_union(&SimpleGraph::empty(1).unwrap())
            .unwrap();
        let (h, rec) = g.delete_vertex(3).unwrap();
        assert_eq!(h, SimpleGraph::complete(3).unwrap());
        assert!(rec.positions().is_empty());
    }

    #[test]
    fn delete_vertex_compacts_labels() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 3), (2, 3)]).unwrap();
        let (h, _) = g.delete_vertex(1).unwrap();
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    fn disjoint_unions() {
        let k4 = SimpleGraph::complete(4).unwrap();
        let two = k4.disjoint_union(&k4).unwrap();
        assert_eq!((two.n(), two.edge_count()), (8, 12));
        assert_eq!(two.degree_sequence(), seq(&[3; 8]));
        assert_eq!(
            k4.disjoint_union(&SimpleGraph::empty(0).unwrap()).unwrap(),
            k4
        );
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(
            k3.disjoint_union(&k3).unwrap().degree_sequence(),
            seq(&[2; 6])
        );
    }

    #[test]
    fn size_cap() {
        assert!(SimpleGraph::empty(31).is_ok());
        assert!(matches!(
            SimpleGraph::empty(32),
            Err(Error::SizeLimit { .. })
        ));
        let big = SimpleGraph::empty(20).unwrap();
        assert!(big.disjoint_union(&big).is_err());
    }

    #[test]
    fn edge_list_format() {
        let g = SimpleGraph::from_edges(4, &[(3, 2), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.to_edge_list(), "4 3\n0 1\n0 2\n2 3\n");
        assert_eq!(g.to_edge_list().parse::<SimpleGraph>().unwrap(), g);
        assert!("3 1\n0 0\n".parse::<SimpleGraph>().is_err());
        assert!("3 2\n0 1\n".parse::<SimpleGraph>().is_err());
        assert!("3 1\n0 5\n".parse::<SimpleGraph>().is_err());
        assert!("3 1\n0 1\n1 2\n".parse::<SimpleGraph>().is_err());
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let h = g.relabel(&[3, 2, 1, 0]);
        assert_eq!(h.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn rank_order_breaks_ties_by_label() {
        let g = SimpleGraph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.rank_order(), vec![3, 0, 1, 2]);
    }
}
