use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

/// Outcome of an exhaustive threshold computation for one pattern and order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub pattern: String,
    pub n: usize,
    pub computed_sigma: usize,
    pub formula_sigma: Option<usize>,
    pub agrees: bool,
    /// Graphical sequences with sum `computed_sigma - 2` that are not
    /// potentially the pattern.
    #[serde(with = "plain_sequences")]
    pub extremal_sequences: Vec<DegreeSequence>,
    pub sequences_examined: u64,
    pub elapsed_ms: u64,
    /// Set when every graphical sequence of this length was potentially the
    /// pattern, so `computed_sigma` is the degenerate value 0.
    #[serde(skip)]
    pub all_potential: bool,
}

impl ThresholdReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// `key=value` lines; extremal sequences in plain format joined by `;`.
    pub fn to_record(&self) -> String {
        let mut out = String::new();
        let formula = self
            .formula_sigma
            .map_or_else(|| "none".to_string(), |f| f.to_string());
        let extremal: Vec<String> = self
            .extremal_sequences
            .iter()
            .map(ToString::to_string)
            .collect();
        let _ = writeln!(out, "pattern={}", self.pattern);
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "computed_sigma={}", self.computed_sigma);
        let _ = writeln!(out, "formula_sigma={formula}");
        let _ = writeln!(out, "agrees={}", self.agrees);
        let _ = writeln!(out, "extremal_sequences={}", extremal.join(";"));
        let _ = writeln!(out, "sequences_examined={}", self.sequences_examined);
        let _ = writeln!(out, "elapsed_ms={}", self.elapsed_ms);
        if self.all_potential {
            let _ = writeln!(out, "all_potential=true");
        }
        out
    }
}

mod plain_sequences {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::sequence::DegreeSequence;

    pub fn serialize<S: Serializer>(seqs: &[DegreeSequence], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(seqs.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<DegreeSequence>, D::Error> {
        let raw = Vec::<String>::deserialize(de)?;
        raw.iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}
