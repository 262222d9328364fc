//! Constructive decision of "potentially K4-e graphical".
//!
//! The engine follows an induction on the number of terms. It starts from the
//! Havel–Hakimi realization, splits on the degree sum, and shrinks the problem
//! by deleting one minimum-degree vertex, or two adjacent degree-2 vertices
//! once edge interchanges have made them adjacent. It then lifts the witness
//! found for the smaller sequence back up with [`reattach`]. Small and
//! exceptional sequences are settled by fixed graphs. Dense sequences of
//! larger order are handed to the oracle's K4 search.
//!
//! Every witness is checked before it is returned. Any branch that cannot make
//! progress falls back to the exhaustive oracle, so the engine never answers
//! wrongly; it records the fallback in the trace instead.

mod fixtures;
mod trace;

pub use fixtures::{cubic_six, Fixture, F1_EDGE_LIST, F2A_EDGE_LIST, F2B_EDGE_LIST};
pub use trace::{Action, CaseLabel, CaseTrace, TraceStep};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::oracle::Oracle;
use crate::pattern::{contains_pattern, Embedding, Pattern};
use crate::sequence::{havel_hakimi_realize, min_degree_vertex, reattach, DegreeSequence};

/// The K4-e threshold: 20 for `n = 6`, otherwise `3n - 1` (odd) or `3n - 2`
/// (even).
pub fn theorem_formula(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "threshold formula needs n >= 4, got {n}"
        )));
    }
    Ok(if n == 6 { 20 } else { inductive_threshold(n) })
}

/// `2 * floor((3n - 1) / 2)`: the sum from which every sequence except (3^6)
/// is potentially K4-e. Differs from [`theorem_formula`] only at `n = 6`.
pub fn inductive_threshold(n: usize) -> usize {
    2 * ((3 * n).saturating_sub(1) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutcomeKind {
    Realized,
    Exceptional,
    BelowThreshold,
}

#[derive(Clone, Debug)]
pub struct TheoremOutcome {
    pub kind: OutcomeKind,
    /// For `Realized`: a realization in which vertex `i` has degree `d_i`,
    /// and a K4-e inside it.
    pub witness: Option<(SimpleGraph, Embedding)>,
    pub trace: CaseTrace,
}

/// An edge interchange applied during normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Switch {
    Two {
        ab: (usize, usize),
        cd: (usize, usize),
    },
    Triple {
        u: usize,
        pair: (usize, usize),
        wx: (usize, usize),
    },
}

impl Switch {
    fn action(&self) -> Action {
        match self {
            Switch::Two { .. } => Action::TwoSwitch,
            Switch::Triple { .. } => Action::TripleSwitch,
        }
    }

    fn detail(&self) -> String {
        match self {
            Switch::Two {
                ab: (a, b),
                cd: (c, d),
            } => {
                format!("remove={a}-{b},{c}-{d} insert={a}-{c},{b}-{d}")
            }
            Switch::Triple {
                u,
                pair: (z1, z2),
                wx: (w, x),
            } => format!("remove={u}-{z1},{u}-{z2},{w}-{x} insert={u}-{w},{z1}-{z2},{u}-{x}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Normalized {
    /// A realization of the same sequence in which the two vertices are adjacent.
    Edge { graph: SimpleGraph, switch: Switch },
    /// The input graph already contains a K4-e.
    Found(Embedding),
}

/// Makes the degree-2 vertices `u` and `v` adjacent by one edge interchange,
/// or finds a K4-e on the way.
///
/// With `x, y` the neighbors of `u` and `z1, z2` those of `v`:
/// * `v ~ x, y`: a K4-e if `x ~ y`, else swap `xv, yu` for `xy, uv`;
/// * `v !~ x`: swap `v z, u x` for `x z, uv` when some `z` is not adjacent to
///   `x`; otherwise a K4-e if `z1 ~ z2`, else trade `v z1, v z2, u x` for
///   `uv, z1 z2, v x`;
/// * `v !~ y`: symmetric.
pub fn normalize_make_edge(g: &SimpleGraph, u: usize, v: usize) -> Result<Normalized> {
    if u >= g.n() || v >= g.n() || u == v {
        return Err(Error::Domain(format!(
            "vertices {u}, {v} are not two distinct vertices of the graph"
        )));
    }
    if g.degree(u) != 2 || g.degree(v) != 2 {
        return Err(Error::Domain(format!(
            "vertices {u}, {v} must both have degree 2"
        )));
    }
    if g.has_edge(u, v) {
        return Err(Error::Domain(format!("{{{u}, {v}}} is already an edge")));
    }
    let k4e = Pattern::k4_minus_e();
    let found = |map: Vec<usize>| {
        let emb = Embedding::new(map);
        debug_assert!(emb.is_valid(&k4e, g));
        Ok(Normalized::Found(emb))
    };
    let nu: Vec<usize> = g.neighbors(u).collect();
    let (x, y) = (nu[0], nu[1]);

    if g.has_edge(v, x) && g.has_edge(v, y) {
        if g.has_edge(x, y) {
            return found(vec![x, y, u, v]);
        }
        let switch = Switch::Two {
            ab: (x, v),
            cd: (y, u),
        };
        let graph = g.two_switch((x, v), (y, u))?;
        return Ok(Normalized::Edge { graph, switch });
    }

    let nv: Vec<usize> = g.neighbors(v).collect();
    let (z1, z2) = (nv[0], nv[1]);
    for a in [x, y] {
        if g.has_edge(v, a) {
            continue;
        }
        for z in [z1, z2] {
            if !g.has_edge(a, z) {
                let switch = Switch::Two {
                    ab: (z, v),
                    cd: (a, u),
                };
                let graph = g.two_switch((z, v), (a, u))?;
                return Ok(Normalized::Edge { graph, switch });
            }
        }
        if g.has_edge(z1, z2) {
            return found(vec![z1, z2, a, v]);
        }
        let switch = Switch::Triple {
            u: v,
            pair: (z1, z2),
            wx: (u, a),
        };
        return match g.triple_switch(v, (z1, z2), (u, a)) {
            Ok(graph) => Ok(Normalized::Edge { graph, switch }),
            Err(e) => Err(Error::NormalizationStuck(e.to_string())),
        };
    }
    Err(Error::NormalizationStuck(format!(
        "no interchange applies to vertices {u} and {v}"
    )))
}

/// Decides with a default oracle (cap 10) for fallbacks and delegations.
pub fn potentially_k4e_constructive(seq: &DegreeSequence) -> Result<TheoremOutcome> {
    ConstructiveEngine::default().decide(seq)
}

#[derive(Clone, Debug, Default)]
pub struct ConstructiveEngine {
    oracle: Oracle,
}

enum Solved {
    Realized(SimpleGraph, Embedding),
    Exceptional,
}

/// A branch that could not finish; the reason goes into the trace.
struct Stuck(String);

type Step = std::result::Result<Solved, Stuck>;

impl ConstructiveEngine {
    pub fn new(oracle: Oracle) -> Self {
        ConstructiveEngine { oracle }
    }

    pub fn oracle(&self) -> &Oracle {
        &self.oracle
    }

    pub fn decide(&self, seq: &DegreeSequence) -> Result<TheoremOutcome> {
        let n = seq.len();
        if n < 4 {
            return Err(Error::Domain(format!(
                "the constructive engine needs n >= 4, got {n}"
            )));
        }
        if !seq.is_graphical() {
            return Err(Error::NotGraphical(seq.to_string()));
        }
        let mut trace = CaseTrace::default();
        if seq.sigma() < inductive_threshold(n) {
            trace.push(TraceStep::new(
                CaseLabel::BelowThreshold,
                n,
                seq.sigma(),
                Action::None,
            ));
            return Ok(TheoremOutcome {
                kind: OutcomeKind::BelowThreshold,
                witness: None,
                trace,
            });
        }
        match self.solve(seq, &mut trace)? {
            Solved::Exceptional => Ok(TheoremOutcome {
                kind: OutcomeKind::Exceptional,
                witness: None,
                trace,
            }),
            Solved::Realized(g, emb) => {
                // Put degree d_i on vertex i.
                let order = g.rank_order();
                let mut perm = vec![0; g.n()];
                for (pos, &v) in order.iter().enumerate() {
                    perm[v] = pos;
                }
                let g = g.relabel(&perm);
                let emb = emb.relabel(&perm);
                if g.degrees() != seq.terms() || !emb.is_valid(&Pattern::k4_minus_e(), &g) {
                    return Err(Error::Domain(format!(
                        "internal witness for ({seq}) failed validation"
                    )));
                }
                Ok(TheoremOutcome {
                    kind: OutcomeKind::Realized,
                    witness: Some((g, emb)),
                    trace,
                })
            }
        }
    }

    /// Solves one level of the induction. `seq.sigma()` is at least the
    /// inductive threshold for `seq.len()`.
    fn solve(&self, seq: &DegreeSequence, trace: &mut CaseTrace) -> Result<Solved> {
        let n = seq.len();
        let sigma = seq.sigma();
        let attempt = if n <= 5 {
            self.base(seq, trace)
        } else if *seq == DegreeSequence::repeated(3, 6) {
            trace.push(TraceStep::new(
                CaseLabel::Exception36,
                n,
                sigma,
                Action::Exceptional,
            ));
            Ok(Solved::Exceptional)
        } else if n.is_multiple_of(2) {
            self.even(seq, trace)?
        } else {
            self.odd(seq, trace)?
        };
        let solved = match attempt {
            Ok(Solved::Realized(g, emb)) if is_witness(seq, &g, &emb) => Solved::Realized(g, emb),
            Ok(Solved::Realized(..)) => {
                return self.fall_back(seq, "witness failed validation", trace)
            }
            Ok(Solved::Exceptional) => Solved::Exceptional,
            Err(Stuck(reason)) => return self.fall_back(seq, &reason, trace),
        };
        Ok(solved)
    }

    fn base(&self, seq: &DegreeSequence, trace: &mut CaseTrace) -> Step {
        let n = seq.len();
        let case = if n == 4 {
            CaseLabel::BaseN4
        } else {
            CaseLabel::BaseN5
        };
        trace.push(TraceStep::new(case, n, seq.sigma(), Action::Search));
        let g = havel_hakimi_realize(seq).map_err(|e| Stuck(e.to_string()))?;
        match contains_pattern(&g, &Pattern::k4_minus_e()) {
            Some(emb) => Ok(Solved::Realized(g, emb)),
            None => Err(Stuck(format!("no K4-e in the base realization of ({seq})"))),
        }
    }

    fn even(&self, seq: &DegreeSequence, trace: &mut CaseTrace) -> Result<Step> {
        let n = seq.len();
        let sigma = seq.sigma();
        let dn = seq.min_term().unwrap_or(0);
        let g = havel_hakimi_realize(seq)?;

        if sigma == 3 * n - 2 {
            let case = CaseLabel::EvenCase1;
            if dn <= 1 {
                return self.delete_and_recurse(case, seq, &g, trace);
            }
            let t = seq.terms();
            if dn != 2 || t[n - 2] != 2 {
                return Ok(Err(Stuck(format!("expected two trailing 2s in ({seq})"))));
            }
            let (u, v) = (n - 1, n - 2);
            let g = if g.has_edge(u, v) {
                g
            } else {
                match normalize_make_edge(&g, u, v) {
                    Ok(Normalized::Found(emb)) => {
                        trace.push(TraceStep::new(case, n, sigma, Action::Found));
                        return Ok(Ok(Solved::Realized(g, emb)));
                    }
                    Ok(Normalized::Edge { graph, switch }) => {
                        trace.push(
                            TraceStep::new(case, n, sigma, switch.action()).detail(switch.detail()),
                        );
                        graph
                    }
                    Err(e) => return Ok(Err(Stuck(e.to_string()))),
                }
            };
            return self.delete_pair_and_recurse(case, seq, &g, u, v, trace);
        }

        if sigma == 3 * n {
            let case = CaseLabel::EvenCase2;
            if dn <= 2 {
                return self.delete_and_recurse(case, seq, &g, trace);
            }
            // All terms are 3; n = 6 was settled by the caller.
            let k4 = SimpleGraph::complete(4)?;
            let (base, copies, label) = if n.is_multiple_of(4) {
                (
                    SimpleGraph::empty(0)?,
                    n / 4,
                    format!("witness={}K4", n / 4),
                )
            } else {
                let p = (n - 2) / 4;
                (cubic_six(), p - 1, format!("witness=K33+{}K4", p - 1))
            };
            let mut witness = base;
            for _ in 0..copies {
                witness = witness.disjoint_union(&k4)?;
            }
            trace.push(TraceStep::new(case, n, sigma, Action::Construction).detail(label));
            return Ok(found_in(witness));
        }

        if sigma <= 4 * n - 2 {
            return self.delete_and_recurse(CaseLabel::EvenCase3, seq, &g, trace);
        }

        let case = CaseLabel::EvenCase4;
        if n >= 8 {
            return self.delegate_k4(case, seq, trace);
        }
        // n = 6 from here on.
        if sigma <= 5 * n - 2 {
            return self.delete_and_recurse(case, seq, &g, trace);
        }
        trace.push(TraceStep::new(case, n, sigma, Action::Construction).detail("witness=K6"));
        Ok(found_in(SimpleGraph::complete(n)?))
    }

    fn odd(&self, seq: &DegreeSequence, trace: &mut CaseTrace) -> Result<Step> {
        let n = seq.len();
        let sigma = seq.sigma();
        let dn = seq.min_term().unwrap_or(0);

        if sigma == 3 * n - 1 {
            let case = CaseLabel::OddCase1;
            if let Some(step) = fixture_step(case, seq, trace) {
                return Ok(step);
            }
            if dn > 2 {
                return Ok(Err(Stuck(format!(
                    "sum 3n-1 with minimum term {dn} > 2 in ({seq})"
                ))));
            }
            let g = havel_hakimi_realize(seq)?;
            return self.delete_and_recurse(case, seq, &g, trace);
        }

        if sigma <= 4 * n - 2 {
            let case = CaseLabel::OddCase2;
            if let Some(step) = fixture_step(case, seq, trace) {
                return Ok(step);
            }
            let g = havel_hakimi_realize(seq)?;
            return self.delete_and_recurse(case, seq, &g, trace);
        }

        let case = CaseLabel::OddCase3;
        if n == 7 && sigma < 5 * n {
            let g = havel_hakimi_realize(seq)?;
            return self.delete_and_recurse(case, seq, &g, trace);
        }
        self.delegate_k4(case, seq, trace)
    }

    fn delete_and_recurse(
        &self,
        case: CaseLabel,
        seq: &DegreeSequence,
        g: &SimpleGraph,
        trace: &mut CaseTrace,
    ) -> Result<Step> {
        let v = min_degree_vertex(g).expect("n >= 4");
        trace.push(
            TraceStep::new(case, seq.len(), seq.sigma(), Action::DeleteVertex)
                .vertex(v)
                .removed(g.degree(v)),
        );
        let (reduced, record) = g.delete_vertex(v)?;
        match self.solve(&reduced.degree_sequence(), trace)? {
            Solved::Realized(sub, emb) => Ok(Ok(Solved::Realized(reattach(&sub, &record)?, emb))),
            Solved::Exceptional => Ok(Err(Stuck(format!(
                "reduced sequence of ({seq}) is exceptional"
            )))),
        }
    }

    /// Deletes the adjacent degree-2 vertices `u` then `v` (`u` is the last
    /// label, so `v` keeps its label in between) and lifts the witness back
    /// through both records.
    fn delete_pair_and_recurse(
        &self,
        case: CaseLabel,
        seq: &DegreeSequence,
        g: &SimpleGraph,
        u: usize,
        v: usize,
        trace: &mut CaseTrace,
    ) -> Result<Step> {
        debug_assert!(g.has_edge(u, v) && u == g.n() - 1 && v == u - 1);
        trace.push(
            TraceStep::new(case, seq.len(), seq.sigma(), Action::DeletePair)
                .vertex(u)
                .removed(g.degree(u) + g.degree(v) - 1)
                .detail(format!("w={v}")),
        );
        let (mid, first) = g.delete_vertex(u)?;
        let (reduced, second) = mid.delete_vertex(v)?;
        match self.solve(&reduced.degree_sequence(), trace)? {
            Solved::Realized(sub, emb) => {
                let lifted = reattach(&reattach(&sub, &second)?, &first)?;
                Ok(Ok(Solved::Realized(lifted, emb)))
            }
            Solved::Exceptional => Ok(Err(Stuck(format!(
                "pair-reduced sequence of ({seq}) is exceptional"
            )))),
        }
    }

    /// Dense sequences: any realization with a K4 also holds a K4-e.
    fn delegate_k4(
        &self,
        case: CaseLabel,
        seq: &DegreeSequence,
        trace: &mut CaseTrace,
    ) -> Result<Step> {
        trace.push(
            TraceStep::new(case, seq.len(), seq.sigma(), Action::Delegate).detail("pattern=k4"),
        );
        let verdict = self.oracle.is_potentially(seq, &Pattern::k4())?;
        match verdict.witness {
            Some((g, _)) => Ok(found_in(g)),
            None => Ok(Err(Stuck(format!("({seq}) is not potentially K4")))),
        }
    }

    fn fall_back(
        &self,
        seq: &DegreeSequence,
        reason: &str,
        trace: &mut CaseTrace,
    ) -> Result<Solved> {
        trace.push(
            TraceStep::new(
                CaseLabel::DelegateOracle,
                seq.len(),
                seq.sigma(),
                Action::Delegate,
            )
            .detail(format!("pattern=k4e reason=\"{reason}\"")),
        );
        let verdict = self.oracle.is_potentially(seq, &Pattern::k4_minus_e())?;
        match verdict.witness {
            Some((g, emb)) => Ok(Solved::Realized(g, emb)),
            None if *seq == DegreeSequence::repeated(3, 6) => Ok(Solved::Exceptional),
            None => Err(Error::Counterexample(seq.to_string())),
        }
    }
}

fn fixture_step(case: CaseLabel, seq: &DegreeSequence, trace: &mut CaseTrace) -> Option<Step> {
    let fixture = Fixture::for_sequence(seq)?;
    trace.push(
        TraceStep::new(case, seq.len(), seq.sigma(), Action::Fixture)
            .detail(format!("fixture={}", fixture.name())),
    );
    Some(found_in(fixture.graph()))
}

fn found_in(g: SimpleGraph) -> Step {
    match contains_pattern(&g, &Pattern::k4_minus_e()) {
        Some(emb) => Ok(Solved::Realized(g, emb)),
        None => Err(Stuck("constructed graph has no K4-e".into())),
    }
}

fn is_witness(seq: &DegreeSequence, g: &SimpleGraph, emb: &Embedding) -> bool {
    g.degree_sequence() == *seq && emb.is_valid(&Pattern::k4_minus_e(), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    fn s(lit: &str) -> DegreeSequence {
        lit.parse().unwrap()
    }

    fn realized(lit: &str) -> TheoremOutcome {
        let out = potentially_k4e_constructive(&s(lit)).unwrap();
        assert_eq!(
            out.kind,
            OutcomeKind::Realized,
            "{lit}: {}",
            out.trace.to_text()
        );
        out
    }

    #[test]
    fn formula_values() {
        assert_eq!(theorem_formula(7).unwrap(), 20);
        assert_eq!(theorem_formula(8).unwrap(), 22);
        assert_eq!(theorem_formula(6).unwrap(), 20);
        assert_eq!(theorem_formula(4).unwrap(), 10);
        assert_eq!(theorem_formula(5).unwrap(), 14);
        assert!(matches!(theorem_formula(3), Err(Error::Domain(_))));
        assert_eq!(inductive_threshold(6), 16);
    }

    #[test]
    fn cubic_six_is_exceptional() {
        let out = potentially_k4e_constructive(&s("3^6")).unwrap();
        assert_eq!(out.kind, OutcomeKind::Exceptional);
        assert!(out.witness.is_none());
        assert_eq!(out.trace.last().unwrap().case, CaseLabel::Exception36);
    }

    #[test]
    fn seven_vertex_f1_sequence_uses_fixture() {
        let out = realized("4^1,3^5,1^1");
        let (g, _) = out.witness.unwrap();
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&Fixture::F1.graph()).unwrap()
        );
        let last = out.trace.last().unwrap();
        assert_eq!(
            (last.case, last.action),
            (CaseLabel::OddCase1, Action::Fixture)
        );
    }

    #[test]
    fn seven_vertex_f2_sequences_use_fixtures() {
        for f in [Fixture::F2a, Fixture::F2b] {
            let out = realized(&f.sequence().to_string());
            assert_eq!(
                out.trace.last().unwrap().detail.as_deref(),
                Some(format!("fixture={}", f.name()).as_str())
            );
        }
    }

    #[test]
    fn cubic_constructions() {
        let out = realized("3^8");
        let (g, _) = out.witness.unwrap();
        let two_k4 = SimpleGraph::complete(4)
            .unwrap()
            .disjoint_union(&SimpleGraph::complete(4).unwrap())
            .unwrap();
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&two_k4).unwrap()
        );

        let out = realized("3^10");
        let (g, _) = out.witness.unwrap();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(
            out.trace.last().unwrap().detail.as_deref(),
            Some("witness=K33+1K4")
        );
        let k33 = cubic_six();
        let k4 = SimpleGraph::complete(4).unwrap();
        let expected = k33.disjoint_union(&k4).unwrap();
        // Isomorphism check on 10 vertices: compare component structure.
        assert_eq!(g.degree_sequence(), expected.degree_sequence());
        assert!(contains_pattern(&g, &Pattern::complete(4).unwrap()).is_some());
    }

    #[test]
    fn below_threshold() {
        let out = potentially_k4e_constructive(&s("2,2,2,2")).unwrap();
        assert_eq!(out.kind, OutcomeKind::BelowThreshold);
        assert_eq!(out.trace.steps.len(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            potentially_k4e_constructive(&s("3,3,1")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            potentially_k4e_constructive(&s("3,3,3,1")),
            Err(Error::NotGraphical(_))
        ));
    }

    #[test]
    fn complete_six() {
        let out = realized("5^6");
        assert_eq!(
            out.trace.last().unwrap().detail.as_deref(),
            Some("witness=K6")
        );
    }

    #[test]
    fn even_case_one_normalizes() {
        // sigma = 3n - 2 with two trailing 2s.
        let out = realized("3,3,3,3,2,2");
        assert!(
            !out.trace.contains_case(CaseLabel::DelegateOracle),
            "{}",
            out.trace.to_text()
        );
    }

    #[test]
    fn normalize_single_switch_on_c4() {
        let g = SimpleGraph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        match normalize_make_edge(&g, 0, 1).unwrap() {
            Normalized::Edge { graph, switch } => {
                assert!(graph.has_edge(0, 1));
                assert_eq!(graph.degree_sequence(), g.degree_sequence());
                assert!(matches!(switch, Switch::Two { .. }));
            }
            Normalized::Found(_) => panic!("C4 has no K4-e"),
        }
    }

    #[test]
    fn normalize_two_triangles() {
        let k3 = SimpleGraph::complete(3).unwrap();
        let g = k3.disjoint_union(&k3).unwrap();
        match normalize_make_edge(&g, 0, 3).unwrap() {
            Normalized::Edge { graph, .. } => {
                assert!(graph.has_edge(0, 3));
                assert_eq!(graph.degrees(), vec![2; 6]);
            }
            Normalized::Found(_) => panic!("2K3 has no K4-e"),
        }
    }

    #[test]
    fn normalize_triple_switch() {
        // u=0 ~ x=1, y=2; v=3 ~ z1=4, z2=5; x ~ z1, z2; z1 !~ z2; v !~ x.
        let g =
            SimpleGraph::from_edges(6, &[(0, 1), (0, 2), (3, 4), (3, 5), (1, 4), (1, 5)]).unwrap();
        match normalize_make_edge(&g, 0, 3).unwrap() {
            Normalized::Edge { graph, switch } => {
                assert!(matches!(switch, Switch::Triple { .. }));
                assert!(graph.has_edge(0, 3) && graph.has_edge(4, 5) && graph.has_edge(3, 1));
                assert_eq!(graph.degrees(), g.degrees());
            }
            Normalized::Found(_) => panic!("no K4-e here"),
        }
    }

    #[test]
    fn normalize_reports_k4e() {
        // u=0, v=1 both adjacent to 2 and 3, and 2 ~ 3.
        let g = SimpleGraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        match normalize_make_edge(&g, 0, 1).unwrap() {
            Normalized::Found(emb) => assert!(emb.is_valid(&Pattern::k4_minus_e(), &g)),
            Normalized::Edge { .. } => panic!("expected a K4-e"),
        }
    }

    #[test]
    fn normalize_preconditions() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert!(matches!(
            normalize_make_edge(&c4, 0, 1),
            Err(Error::Domain(_))
        ));
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(
            normalize_make_edge(&star, 0, 1),
            Err(Error::Domain(_))
        ));
    }
}
