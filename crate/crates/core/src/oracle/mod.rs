//! Ground truth by exhaustion.
//!
//! Every NO answer produced here is backed by a complete enumeration of the
//! labeled realizations of the sequence; nothing is sampled.

mod report;

use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;
use std::time::Instant;

use rayon::prelude::*;

pub use report::ThresholdReport;

use crate::canon::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{bits, SimpleGraph};
use crate::pattern::{contains_pattern, Embedding, Pattern};
use crate::sequence::{erdos_gallai, graphical_with_sigma, DegreeSequence};
use crate::theorem::theorem_formula;

pub const DEFAULT_CAP: usize = 10;

/// Hard limit for [`Oracle::ex_number`] and [`Oracle::forcible_threshold`].
pub const EX_MAX_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Clone, Debug)]
pub struct PotentialVerdict {
    pub verdict: Verdict,
    pub witness: Option<(SimpleGraph, Embedding)>,
    /// Labeled realizations visited before the answer was settled. For NO this
    /// is the full realization count.
    pub realizations_examined: u64,
}

impl PotentialVerdict {
    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

#[derive(Clone, Debug)]
pub struct Oracle {
    cap: usize,
    workers: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: DEFAULT_CAP,
            workers: 1,
        }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Oracle { cap, workers: 1 }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    fn check_cap(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::SizeLimit {
                what,
                n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Calls `visit` on every labeled realization of `seq` in which vertex `i`
    /// has degree `d_i`, until it breaks. Returns the number of graphs visited.
    pub fn visit_realizations<F>(&self, seq: &DegreeSequence, mut visit: F) -> Result<u64>
    where
        F: FnMut(&SimpleGraph) -> ControlFlow<()>,
    {
        self.check_cap("realization enumeration", seq.len())?;
        if !seq.is_graphical() {
            return Err(Error::NotGraphical(seq.to_string()));
        }
        let mut walker = Walker {
            graph: SimpleGraph::empty(seq.len())?,
            residual: seq.terms().to_vec(),
            visited: 0,
            scratch: Vec::with_capacity(seq.len()),
        };
        let _ = walker.vertex(0, &mut visit);
        Ok(walker.visited)
    }

    pub fn enumerate_realizations(&self, seq: &DegreeSequence) -> Result<Vec<SimpleGraph>> {
        let mut out = Vec::new();
        self.visit_realizations(seq, |g| {
            out.push(g.clone());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// Every labeled graph reachable from `start` by 2-switches.
    pub fn two_switch_closure(&self, start: &SimpleGraph) -> Result<HashSet<SimpleGraph>> {
        self.check_cap("two-switch closure", start.n())?;
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start.clone());
        while let Some(g) = queue.pop_front() {
            let edges = g.edges();
            for (i, &ab) in edges.iter().enumerate() {
                for &(c, d) in &edges[i + 1..] {
                    for cd in [(c, d), (d, c)] {
                        if let Ok(h) = g.two_switch(ab, cd) {
                            if seen.insert(h.clone()) {
                                queue.push_back(h);
                            }
                        }
                    }
                }
            }
        }
        Ok(seen)
    }

    /// YES with the first witness found, or NO after every realization was
    /// checked.
    pub fn is_potentially(
        &self,
        seq: &DegreeSequence,
        pattern: &Pattern,
    ) -> Result<PotentialVerdict> {
        let mut witness = None;
        let examined = self.visit_realizations(seq, |g| match contains_pattern(g, pattern) {
            Some(emb) => {
                witness = Some((g.clone(), emb));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        })?;
        Ok(PotentialVerdict {
            verdict: if witness.is_some() {
                Verdict::Yes
            } else {
                Verdict::No
            },
            witness,
            realizations_examined: examined,
        })
    }

    pub fn is_forcibly(&self, seq: &DegreeSequence, pattern: &Pattern) -> Result<bool> {
        let mut all = true;
        self.visit_realizations(seq, |g| {
            if contains_pattern(g, pattern).is_some() {
                ControlFlow::Continue(())
            } else {
                all = false;
                ControlFlow::Break(())
            }
        })?;
        Ok(all)
    }

    /// Smallest even `m` such that every graphical `n`-sequence with sum at
    /// least `m` is potentially `pattern` graphical.
    ///
    /// Levels are scanned from the top sum downward; the scan stops at the
    /// first level holding a sequence that is not potentially `pattern`, and
    /// all such sequences at that level are reported as extremal.
    pub fn sigma_threshold(&self, pattern: &Pattern, n: usize) -> Result<ThresholdReport> {
        if pattern.n() > n {
            return Err(Error::NoThreshold {
                pattern: pattern.name(),
                n,
            });
        }
        self.check_cap("threshold computation", n)?;
        let started = Instant::now();
        let mut examined = 0u64;
        let mut found: Option<(usize, Vec<DegreeSequence>)> = None;
        for sigma in (0..=n * (n - 1)).rev().filter(|s| s % 2 == 0) {
            let level = graphical_with_sigma(n, sigma);
            examined += level.len() as u64;
            let verdicts = self.decide_level(&level, |s| {
                self.is_potentially(s, pattern).map(|v| v.is_yes())
            })?;
            let failing: Vec<DegreeSequence> = level
                .into_iter()
                .zip(verdicts)
                .filter(|(_, yes)| !yes)
                .map(|(s, _)| s)
                .collect();
            if !failing.is_empty() {
                found = Some((sigma, failing));
                break;
            }
        }
        let (computed_sigma, extremal_sequences, all_potential) = match found {
            Some((sigma, failing)) => (sigma + 2, failing, false),
            // Only an edgeless pattern gets here: (0^n) is potentially H too.
            None => (0, Vec::new(), true),
        };
        let formula_sigma = if pattern.is_k4_minus_e() && n >= 4 {
            theorem_formula(n).ok()
        } else {
            None
        };
        Ok(ThresholdReport {
            pattern: pattern.name(),
            n,
            computed_sigma,
            formula_sigma,
            agrees: formula_sigma.is_none_or(|f| f == computed_sigma),
            extremal_sequences,
            sequences_examined: examined,
            elapsed_ms: started.elapsed().as_millis() as u64,
            all_potential,
        })
    }

    /// Largest edge count of an `n`-vertex graph with no `pattern` subgraph.
    ///
    /// Pattern-free graphs are grown one vertex at a time and deduplicated by
    /// canonical form; being pattern-free is inherited by induced subgraphs,
    /// so every class on `k + 1` vertices arises from one on `k`.
    pub fn ex_number(&self, n: usize, pattern: &Pattern) -> Result<usize> {
        if n > EX_MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "ex number",
                n,
                cap: EX_MAX_VERTICES,
            });
        }
        let mut classes: HashSet<CanonicalKey> = HashSet::new();
        classes.insert(canonical_form(&SimpleGraph::empty(0)?)?);
        for k in 0..n {
            let parents: Vec<SimpleGraph> = classes.iter().map(CanonicalKey::to_graph).collect();
            let grown: Vec<Vec<CanonicalKey>> = self.in_pool(|| {
                parents
                    .par_iter()
                    .map(|g| {
                        let mut keys = Vec::new();
                        for mask in 0u32..(1 << k) {
                            let targets: Vec<usize> = bits(mask).collect();
                            let h = g.with_new_vertex(&targets).expect("within size limit");
                            if contains_pattern(&h, pattern).is_none() {
                                keys.push(canonical_form(&h).expect("within canonical limit"));
                            }
                        }
                        keys
                    })
                    .collect()
            });
            classes = grown.into_iter().flatten().collect();
        }
        Ok(classes
            .iter()
            .map(|k| k.bits().count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    /// Smallest even `m` such that every graphical `n`-sequence with sum at
    /// least `m` is forcibly `pattern` graphical. Computed from realizations,
    /// independently of [`Self::ex_number`].
    pub fn forcible_threshold(&self, pattern: &Pattern, n: usize) -> Result<usize> {
        if n > EX_MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "forcible threshold",
                n,
                cap: EX_MAX_VERTICES,
            });
        }
        for sigma in (0..=n * n.saturating_sub(1)).rev().filter(|s| s % 2 == 0) {
            let level = graphical_with_sigma(n, sigma);
            let verdicts = self.decide_level(&level, |s| self.is_forcibly(s, pattern))?;
            if verdicts.iter().any(|forced| !forced) {
                return Ok(sigma + 2);
            }
        }
        Ok(0)
    }

    /// Evaluates `decide` on every sequence of one σ-slice. Output order
    /// matches input order whatever the worker count.
    fn decide_level<F>(&self, level: &[DegreeSequence], decide: F) -> Result<Vec<bool>>
    where
        F: Fn(&DegreeSequence) -> Result<bool> + Sync,
    {
        if self.workers <= 1 {
            return level.iter().map(&decide).collect();
        }
        self.in_pool(|| level.par_iter().map(&decide).collect())
    }

    pub(crate) fn in_pool<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
        {
            Ok(pool) => pool.install(job),
            Err(_) => job(),
        }
    }
}

/// Row-by-row backtracking over adjacency. After vertex `i` picks its
/// neighbors among later vertices, the residual degrees of the later vertices
/// must form a graphical sequence on their own, so no branch is a dead end.
struct Walker {
    graph: SimpleGraph,
    residual: Vec<usize>,
    visited: u64,
    scratch: Vec<usize>,
}

impl Walker {
    fn vertex<F>(&mut self, i: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&SimpleGraph) -> ControlFlow<()>,
    {
        let n = self.graph.n();
        if i == n {
            self.visited += 1;
            return visit(&self.graph);
        }
        let need = self.residual[i];
        let candidates: Vec<usize> = (i + 1..n).filter(|&j| self.residual[j] > 0).collect();
        if candidates.len() < need {
            return ControlFlow::Continue(());
        }
        self.residual[i] = 0;
        let flow = self.pick(i, &candidates, 0, need, visit);
        self.residual[i] = need;
        flow
    }

    fn pick<F>(
        &mut self,
        i: usize,
        candidates: &[usize],
        from: usize,
        need: usize,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&SimpleGraph) -> ControlFlow<()>,
    {
        if need == 0 {
            if !self.rest_is_graphical(i + 1) {
                return ControlFlow::Continue(());
            }
            return self.vertex(i + 1, visit);
        }
        for idx in from..candidates.len() {
            if candidates.len() - idx < need {
                break;
            }
            let j = candidates[idx];
            self.graph.add_edge(i, j);
            self.residual[j] -= 1;
            let flow = self.pick(i, candidates, idx + 1, need - 1, visit);
            self.residual[j] += 1;
            self.graph.remove_edge(i, j);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn rest_is_graphical(&mut self, from: usize) -> bool {
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.residual[from..]);
        self.scratch.sort_unstable_by(|a, b| b.cmp(a));
        erdos_gallai(&self.scratch)
    }
}
