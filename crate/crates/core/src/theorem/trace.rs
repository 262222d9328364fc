use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    BaseN4,
    BaseN5,
    EvenCase1,
    EvenCase2,
    EvenCase3,
    EvenCase4,
    OddCase1,
    OddCase2,
    OddCase3,
    Exception36,
    DelegateOracle,
    BelowThreshold,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::BaseN4 => "BASE_N4",
            CaseLabel::BaseN5 => "BASE_N5",
            CaseLabel::EvenCase1 => "EVEN_CASE1",
            CaseLabel::EvenCase2 => "EVEN_CASE2",
            CaseLabel::EvenCase3 => "EVEN_CASE3",
            CaseLabel::EvenCase4 => "EVEN_CASE4",
            CaseLabel::OddCase1 => "ODD_CASE1",
            CaseLabel::OddCase2 => "ODD_CASE2",
            CaseLabel::OddCase3 => "ODD_CASE3",
            CaseLabel::Exception36 => "EXCEPTION_3_6",
            CaseLabel::DelegateOracle => "DELEGATE_ORACLE",
            CaseLabel::BelowThreshold => "BELOW_THRESHOLD",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    DeleteVertex,
    DeletePair,
    TwoSwitch,
    TripleSwitch,
    Fixture,
    Construction,
    Delegate,
    /// Direct containment check on a realization (base orders).
    Search,
    /// A K4-e turned up while normalizing; no further reduction needed.
    Found,
    Exceptional,
    None,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::DeleteVertex => "delete-vertex",
            Action::DeletePair => "delete-pair",
            Action::TwoSwitch => "two-switch",
            Action::TripleSwitch => "triple-switch",
            Action::Fixture => "fixture",
            Action::Construction => "construction",
            Action::Delegate => "delegate",
            Action::Search => "search",
            Action::Found => "found",
            Action::Exceptional => "exceptional",
            Action::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub case: CaseLabel,
    pub n: usize,
    pub sigma: usize,
    pub action: Action,
    /// Deleted vertex, for deletion steps.
    pub vertex: Option<usize>,
    /// Edges removed by a deletion; sigma drops by twice this.
    pub removed_edges: Option<usize>,
    /// Extra `key=value` tokens.
    pub detail: Option<String>,
}

impl TraceStep {
    pub(crate) fn new(case: CaseLabel, n: usize, sigma: usize, action: Action) -> Self {
        TraceStep {
            case,
            n,
            sigma,
            action,
            vertex: None,
            removed_edges: None,
            detail: None,
        }
    }

    pub(crate) fn vertex(mut self, v: usize) -> Self {
        self.vertex = Some(v);
        self
    }

    pub(crate) fn removed(mut self, edges: usize) -> Self {
        self.removed_edges = Some(edges);
        self
    }

    pub(crate) fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "case={} n={} sigma={} action={}",
            self.case, self.n, self.sigma, self.action
        )?;
        if let Some(v) = self.vertex {
            write!(f, " v={v}")?;
        }
        if let Some(r) = self.removed_edges {
            write!(f, " removed={r}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseTrace {
    pub steps: Vec<TraceStep>,
}

impl CaseTrace {
    pub(crate) fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn last(&self) -> Option<&TraceStep> {
        self.steps.last()
    }

    pub fn contains_case(&self, case: CaseLabel) -> bool {
        self.steps.iter().any(|s| s.case == case)
    }

    /// One step per line.
    pub fn to_text(&self) -> String {
        self.steps.iter().map(|s| format!("{s}\n")).collect()
    }
}
