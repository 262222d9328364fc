//! Hand-checked realizations used as base cases.
//!
//! Vertices 0..=3 are the top row T1..T4 of the pictures, 4..=6 the bottom row
//! B1..B3.

use crate::graph::SimpleGraph;
use crate::sequence::DegreeSequence;

/// Realizes (4^1, 3^5, 1^1).
pub const F1_EDGE_LIST: &str = "7 10\n0 1\n0 4\n0 5\n1 2\n1 4\n1 6\n2 3\n2 6\n4 5\n5 6\n";

/// Realizes (4^2, 3^4, 2^1): F1 plus B3T4.
pub const F2A_EDGE_LIST: &str = "7 11\n0 1\n0 4\n0 5\n1 2\n1 4\n1 6\n2 3\n2 6\n3 6\n4 5\n5 6\n";

/// Realizes (4^3, 3^4).
pub const F2B_EDGE_LIST: &str =
    "7 12\n0 1\n0 3\n0 4\n0 5\n1 2\n1 4\n2 3\n2 6\n3 6\n4 5\n4 6\n5 6\n";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    F1,
    F2a,
    F2b,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::F1, Fixture::F2a, Fixture::F2b];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::F1 => "F1",
            Fixture::F2a => "F2a",
            Fixture::F2b => "F2b",
        }
    }

    pub fn edge_list(self) -> &'static str {
        match self {
            Fixture::F1 => F1_EDGE_LIST,
            Fixture::F2a => F2A_EDGE_LIST,
            Fixture::F2b => F2B_EDGE_LIST,
        }
    }

    pub fn graph(self) -> SimpleGraph {
        self.edge_list()
            .parse()
            .expect("fixture edge lists are well formed")
    }

    /// The sequence this fixture is meant to realize.
    pub fn sequence(self) -> DegreeSequence {
        let lit = match self {
            Fixture::F1 => "4^1,3^5,1^1",
            Fixture::F2a => "4^2,3^4,2^1",
            Fixture::F2b => "4^3,3^4",
        };
        lit.parse().expect("fixture sequences are well formed")
    }

    pub fn for_sequence(seq: &DegreeSequence) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.sequence() == *seq)
    }
}

/// The fixed realization of (3^6) used in the (3^(4p+2)) construction.
pub fn cubic_six() -> SimpleGraph {
    SimpleGraph::complete_bipartite(3, 3).expect("K3,3 is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{contains_pattern, Pattern};

    #[test]
    fn fixtures_realize_their_sequences() {
        let expected = ["4,3,3,3,3,3,1", "4,4,3,3,3,3,2", "4,4,4,3,3,3,3"];
        for (f, want) in Fixture::ALL.into_iter().zip(expected) {
            let g = f.graph();
            assert_eq!(g.degree_sequence().to_string(), want, "{}", f.name());
            assert_eq!(g.degree_sequence(), f.sequence());
            assert!(
                contains_pattern(&g, &Pattern::k4_minus_e()).is_some(),
                "{}",
                f.name()
            );
            assert_eq!(g.to_edge_list(), f.edge_list());
        }
    }

    #[test]
    fn fixture_lookup() {
        assert_eq!(
            Fixture::for_sequence(&"4,3,3,3,3,3,1".parse().unwrap()),
            Some(Fixture::F1)
        );
        assert_eq!(Fixture::for_sequence(&"3^6".parse().unwrap()), None);
    }

    #[test]
    fn cubic_six_lacks_k4e() {
        let g = cubic_six();
        assert_eq!(g.degrees(), vec![3; 6]);
        assert!(contains_pattern(&g, &Pattern::k4_minus_e()).is_none());
    }
}
