//! Degree sequences: graphicality, Havel–Hakimi realization, enumeration of
//! graphical sequences, and the bookkeeping that lets a vertex deleted from a
//! realization be put back onto a different realization of the reduced
//! sequence.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A non-increasing sequence of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeSequence {
    terms: Vec<usize>,
}

impl DegreeSequence {
    /// Rejects sequences that are not non-increasing.
    pub fn new(terms: Vec<usize>) -> Result<Self> {
        if let Some(w) = terms.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "sequence must be non-increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(DegreeSequence { terms })
    }

    pub fn from_unsorted(mut terms: Vec<usize>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { terms }
    }

    /// `(value; count)` shorthand, e.g. `repeated(3, 6)` is `(3^6)`.
    pub fn repeated(value: usize, count: usize) -> Self {
        DegreeSequence {
            terms: vec![value; count],
        }
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sigma(&self) -> usize {
        self.terms.iter().sum()
    }

    pub fn min_term(&self) -> Option<usize> {
        self.terms.last().copied()
    }

    pub fn is_graphical(&self) -> bool {
        erdos_gallai(&self.terms)
    }

    /// Compact form, e.g. `4^1,3^5,1^1`.
    pub fn to_compact(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.terms.len() {
            let v = self.terms[i];
            let run = self.terms[i..].iter().take_while(|&&t| t == v).count();
            parts.push(format!("{v}^{run}"));
            i += run;
        }
        parts.join(",")
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Accepts `d1,d2,...` and `v^m` terms (mixed freely); the expansion must be
    /// non-increasing.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DegreeSequence::default());
        }
        let mut terms = Vec::new();
        for raw in s.split(',') {
            let tok = raw.trim();
            let num = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad term `{tok}` in `{s}`")))
            };
            match tok.split_once('^') {
                Some((v, m)) => {
                    let (v, m) = (num(v)?, num(m)?);
                    if m == 0 {
                        return Err(Error::Parse(format!("zero multiplicity in `{tok}`")));
                    }
                    terms.extend(std::iter::repeat_n(v, m));
                }
                None => terms.push(num(tok)?),
            }
        }
        DegreeSequence::new(terms)
    }
}

/// Erdős–Gallai test on a non-increasing slice.
pub(crate) fn erdos_gallai(d: &[usize]) -> bool {
    debug_assert!(d.windows(2).all(|w| w[0] >= w[1]));
    let n = d.len();
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    if n > 0 && d[0] >= n {
        return false;
    }
    let mut left = 0;
    for k in 1..=n {
        left += d[k - 1];
        let right: usize = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if left > right {
            return false;
        }
    }
    true
}

/// Greedy realization: repeatedly joins the vertex of largest residual degree
/// to the next largest ones, ties broken by lowest index. Vertex `i` of the
/// result has degree `d_i`.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<SimpleGraph> {
    if !seq.is_graphical() {
        return Err(Error::NotGraphical(seq.to_string()));
    }
    let n = seq.len();
    let mut g = SimpleGraph::empty(n)?;
    let mut residual = seq.terms().to_vec();
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&v| residual[v] > 0).collect();
        if order.is_empty() {
            break;
        }
        order.sort_by_key(|&v| std::cmp::Reverse(residual[v]));
        let v = order[0];
        let need = residual[v];
        if order.len() <= need {
            return Err(Error::NotGraphical(seq.to_string()));
        }
        for &w in &order[1..=need] {
            g.add_edge(v, w);
            residual[w] -= 1;
        }
        residual[v] = 0;
    }
    Ok(g)
}

/// All graphical sequences of length `n` whose sum lies in the given range.
/// Ordered by decreasing sum, then in decreasing lexicographic order.
pub fn enumerate_graphical(
    n: usize,
    sigma_min: usize,
    sigma_max: usize,
) -> impl Iterator<Item = DegreeSequence> {
    let top = sigma_max.min(n * n.saturating_sub(1));
    let levels: Vec<usize> = if sigma_min > top {
        Vec::new()
    } else {
        (sigma_min..=top).rev().filter(|s| s % 2 == 0).collect()
    };
    levels
        .into_iter()
        .flat_map(move |s| graphical_with_sigma(n, s))
}

/// Graphical sequences of length `n` with sum exactly `sigma`, in decreasing
/// lexicographic order. One σ-slice of [`enumerate_graphical`].
pub fn graphical_with_sigma(n: usize, sigma: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if sigma % 2 == 1 {
        return out;
    }
    let max_term = n.saturating_sub(1);
    let mut prefix = Vec::with_capacity(n);
    partitions_into(n, sigma, max_term, &mut prefix, &mut |terms| {
        if erdos_gallai(terms) {
            out.push(DegreeSequence {
                terms: terms.to_vec(),
            });
        }
    });
    out
}

fn partitions_into(
    slots: usize,
    remaining: usize,
    cap: usize,
    prefix: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if slots == 0 {
        if remaining == 0 {
            emit(prefix);
        }
        return;
    }
    if remaining > slots * cap {
        return;
    }
    // Smallest feasible first term: the rest can hold at most (slots-1)*t.
    let hi = cap.min(remaining);
    let lo = remaining.div_ceil(slots);
    for t in (lo..=hi).rev() {
        prefix.push(t);
        partitions_into(slots - 1, remaining - t, t, prefix, emit);
        prefix.pop();
    }
}

/// Ties a vertex deletion to the reduced sequence: `positions` are the ranks
/// (indices into the non-increasing reduced sequence) that lost one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecrementRecord {
    positions: Vec<usize>,
    deleted_degree: usize,
}

impl DecrementRecord {
    pub(crate) fn new(positions: Vec<usize>, deleted_degree: usize) -> Self {
        debug_assert_eq!(positions.len(), deleted_degree);
        DecrementRecord {
            positions,
            deleted_degree,
        }
    }

    pub fn try_new(mut positions: Vec<usize>, deleted_degree: usize) -> Result<Self> {
        positions.sort_unstable();
        if positions.len() != deleted_degree {
            return Err(Error::Reattach(format!(
                "{} positions recorded for a vertex of degree {deleted_degree}",
                positions.len()
            )));
        }
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Reattach("duplicate position in record".into()));
        }
        Ok(DecrementRecord {
            positions,
            deleted_degree,
        })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn deleted_degree(&self) -> usize {
        self.deleted_degree
    }
}

/// Deletes a minimum-degree vertex of `g` (the highest-labelled one among
/// ties) and returns the reduced sequence with its decrement record.
pub fn delete_min_vertex_sequence(
    seq: &DegreeSequence,
    g: &SimpleGraph,
) -> Result<(DegreeSequence, DecrementRecord)> {
    if g.degree_sequence() != *seq {
        return Err(Error::Domain(format!("graph does not realize ({seq})")));
    }
    let v = min_degree_vertex(g)
        .ok_or_else(|| Error::Domain("cannot delete from the empty graph".into()))?;
    let (reduced, record) = g.delete_vertex(v)?;
    Ok((reduced.degree_sequence(), record))
}

pub(crate) fn min_degree_vertex(g: &SimpleGraph) -> Option<usize> {
    (0..g.n()).rev().min_by_key(|&v| g.degree(v))
}

/// Adds a vertex (labelled `g.n()`) adjacent to the vertices holding the
/// recorded degree ranks of `g`.
pub fn reattach(g: &SimpleGraph, record: &DecrementRecord) -> Result<SimpleGraph> {
    let n = g.n();
    if record.positions.len() != record.deleted_degree {
        return Err(Error::Reattach("record size does not match degree".into()));
    }
    if let Some(&p) = record.positions.iter().find(|&&p| p >= n) {
        return Err(Error::Reattach(format!(
            "position {p} out of range for {n} vertices"
        )));
    }
    let order = g.rank_order();
    let mut targets: Vec<usize> = Vec::with_capacity(record.deleted_degree);
    for &p in &record.positions {
        let mut t = order[p];
        // Rank collisions cannot occur for distinct positions, but a duplicated
        // position advances to the next vertex of equal degree.
        let mut q = p;
        while targets.contains(&t) {
            q += 1;
            if q >= n || g.degree(order[q]) != g.degree(order[p]) {
                return Err(Error::Reattach(format!("no free vertex at rank {p}")));
            }
            t = order[q];
        }
        targets.push(t);
    }
    g.with_new_vertex(&targets)
}
