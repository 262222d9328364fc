//! Isomorphism keys for graphs on at most nine vertices.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const CANON_MAX_VERTICES: usize = 9;

/// Two graphs get the same key iff they are isomorphic.
///
/// `bits` is the upper triangle of the adjacency matrix read column by column
/// ((0,1), (0,2), (1,2), (0,3), ...), first pair most significant, maximized
/// over all relabelings. Among graphs with the same edge count this picks the
/// relabeling whose sorted edge list is lexicographically least.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: usize,
    bits: u64,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> SimpleGraph {
        let total = self.n * self.n.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (total - 1 - idx) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        SimpleGraph::from_edges(self.n, &edges).expect("key encodes a simple graph")
    }
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalKey> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "canonical form",
            n,
            cap: CANON_MAX_VERTICES,
        });
    }
    let mut search = Search {
        g,
        order: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        best: None,
    };
    search.run(0);
    let best = search.best.expect("at least one permutation exists");
    let mut bits = 0u64;
    for (k, &col) in best.iter().enumerate() {
        bits = (bits << k) | col as u64;
    }
    Ok(CanonicalKey { n, bits })
}

struct Search<'a> {
    g: &'a SimpleGraph,
    order: Vec<usize>,
    /// `cols[k]`: adjacency of the vertex at position `k` to positions `0..k`,
    /// position 0 most significant.
    cols: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl Search<'_> {
    fn run(&mut self, used: u32) {
        let n = self.g.n();
        let k = self.order.len();
        if k == n {
            if self.compare_prefix(n) == std::cmp::Ordering::Greater || self.best.is_none() {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let col = self
                .order
                .iter()
                .fold(0u16, |acc, &h| (acc << 1) | self.g.has_edge(h, v) as u16);
            self.order.push(v);
            self.cols.push(col);
            if self.compare_prefix(k + 1) != std::cmp::Ordering::Less {
                self.run(used | 1 << v);
            }
            self.order.pop();
            self.cols.pop();
        }
    }

    fn compare_prefix(&self, len: usize) -> std::cmp::Ordering {
        match &self.best {
            None => std::cmp::Ordering::Greater,
            Some(best) => self.cols[..len].cmp(&best[..len]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycles_agree() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let other = SimpleGraph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&other).unwrap()
        );
    }

    #[test]
    fn different_graphs_differ() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        let k3k1 = SimpleGraph::complete(3)
            .unwrap()
            .disjoint_union(&SimpleGraph::empty(1).unwrap())
            .unwrap();
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&k3k1).unwrap());
        let k33 = SimpleGraph::complete_bipartite(3, 3).unwrap();
        assert_ne!(
            canonical_form(&k33).unwrap(),
            canonical_form(&SimpleGraph::prism()).unwrap()
        );
    }

    #[test]
    fn representative_is_isomorphic() {
        let g = SimpleGraph::from_edges(6, &[(5, 0), (0, 3), (3, 1), (2, 4)]).unwrap();
        let key = canonical_form(&g).unwrap();
        let rep = key.to_graph();
        assert_eq!(rep.edge_count(), 4);
        assert_eq!(canonical_form(&rep).unwrap(), key);
        // Least sorted edge list: the path goes on the smallest labels.
        assert_eq!(rep.edges()[0], (0, 1));
    }

    #[test]
    fn size_limit() {
        assert!(canonical_form(&SimpleGraph::empty(9).unwrap()).is_ok());
        assert!(matches!(
            canonical_form(&SimpleGraph::empty(10).unwrap()),
            Err(Error::SizeLimit { .. })
        ));
    }
}
