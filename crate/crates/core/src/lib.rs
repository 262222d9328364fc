//! Potentially K4-e graphical sequences.
//!
//! Graphs and degree sequences, an exhaustive oracle for "some realization
//! contains H" questions and the thresholds built on them, and a constructive
//! engine that produces a K4-e witness for any sequence above the threshold.

pub mod canon;
pub mod cli;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod pattern;
pub mod sequence;
pub mod theorem;

pub use canon::{canonical_form, CanonicalKey};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use oracle::{Oracle, PotentialVerdict, ThresholdReport, Verdict};
pub use pattern::{contains_pattern, Embedding, Pattern, PatternKind};
pub use sequence::{havel_hakimi_realize, reattach, DecrementRecord, DegreeSequence};
pub use theorem::{
    inductive_threshold, potentially_k4e_constructive, theorem_formula, ConstructiveEngine,
    OutcomeKind, TheoremOutcome,
};
