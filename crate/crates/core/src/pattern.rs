//! Target graphs and (non-induced) subgraph containment.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, SimpleGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    K4MinusE,
    Complete(usize),
    Cycle(usize),
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    graph: SimpleGraph,
    kind: PatternKind,
}

impl Pattern {
    /// K4 without the edge {2, 3}: vertices 0 and 1 are the shared spine of
    /// the two triangles.
    pub fn k4_minus_e() -> Self {
        let graph = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
            .expect("K4-e is well formed");
        Pattern {
            graph,
            kind: PatternKind::K4MinusE,
        }
    }

    pub fn complete(k: usize) -> Result<Self> {
        Ok(Pattern {
            graph: SimpleGraph::complete(k)?,
            kind: PatternKind::Complete(k),
        })
    }

    pub fn cycle(k: usize) -> Result<Self> {
        Ok(Pattern {
            graph: SimpleGraph::cycle(k)?,
            kind: PatternKind::Cycle(k),
        })
    }

    pub fn k4() -> Self {
        Self::complete(4).expect("K4 is well formed")
    }

    pub fn c4() -> Self {
        Self::cycle(4).expect("C4 is well formed")
    }

    pub fn custom(graph: SimpleGraph) -> Self {
        Pattern {
            graph,
            kind: PatternKind::Custom,
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Selector name as accepted by [`FromStr`]: `k4e`, `k5`, `c4`, ...
    pub fn name(&self) -> String {
        match self.kind {
            PatternKind::K4MinusE => "k4e".into(),
            PatternKind::Complete(k) => format!("k{k}"),
            PatternKind::Cycle(k) => format!("c{k}"),
            PatternKind::Custom => "custom".into(),
        }
    }

    pub fn is_k4_minus_e(&self) -> bool {
        self.kind == PatternKind::K4MinusE
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "k4e" || s == "k4-e" {
            return Ok(Pattern::k4_minus_e());
        }
        let size = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::Parse(format!("unknown pattern `{s}`")))
        };
        if let Some(rest) = s.strip_prefix('k') {
            let k = size(rest)?;
            if k == 0 {
                return Err(Error::Parse("K_0 is not a pattern".into()));
            }
            Pattern::complete(k)
        } else if let Some(rest) = s.strip_prefix('c') {
            Pattern::cycle(size(rest)?)
        } else {
            Err(Error::Parse(format!("unknown pattern `{s}`")))
        }
    }
}

/// `map[a]` is the host vertex assigned to pattern vertex `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Injective, in range, and every pattern edge lands on a host edge.
    pub fn is_valid(&self, pattern: &Pattern, host: &SimpleGraph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let mut seen = 0u32;
        for &v in &self.map {
            if seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        pattern
            .graph
            .edges()
            .into_iter()
            .all(|(a, b)| host.has_edge(self.map[a], self.map[b]))
    }

    /// Rewrites host labels through `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Embedding {
        Embedding {
            map: self.map.iter().map(|&v| perm[v]).collect(),
        }
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .map
            .iter()
            .enumerate()
            .map(|(a, v)| format!("{a}->{v}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// First embedding of `pattern` into `host` in lexicographic order of the
/// host labels assigned to pattern vertices 0, 1, 2, ...
pub fn contains_pattern(host: &SimpleGraph, pattern: &Pattern) -> Option<Embedding> {
    let k = pattern.n();
    if k > host.n() || pattern.graph.edge_count() > host.edge_count() {
        return None;
    }
    let mut map = vec![usize::MAX; k];
    if search(host, &pattern.graph, 0, 0, &mut map) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn search(
    host: &SimpleGraph,
    pat: &SimpleGraph,
    next: usize,
    used: u32,
    map: &mut [usize],
) -> bool {
    if next == pat.n() {
        return true;
    }
    let mut candidates = full_mask(host.n()) & !used;
    let back = pat.neighbor_mask(next) & full_mask(next);
    for q in bits(back) {
        candidates &= host.neighbor_mask(map[q]);
    }
    let need = pat.degree(next);
    for v in bits(candidates) {
        if host.degree(v) < need {
            continue;
        }
        map[next] = v;
        if search(host, pat, next + 1, used | 1 << v, map) {
            return true;
        }
    }
    map[next] = usize::MAX;
    false
}
