//! Command-line surface: `check`, `potential`, `sigma`, `verify`.
//!
//! Exit codes: `check` 0 graphical / 1 not / 2 usage; `potential` 0 YES /
//! 1 NO or EXCEPTIONAL / 2 error or engine disagreement; `sigma` 0 agreement
//! or no formula / 1 disagreement / 2 error; `verify` 0 all rows agree /
//! 1 otherwise / 2 error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{Oracle, ThresholdReport, DEFAULT_CAP};
use crate::pattern::Pattern;
use crate::sequence::{graphical_with_sigma, DegreeSequence};
use crate::theorem::{inductive_threshold, CaseLabel, ConstructiveEngine, OutcomeKind};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "potential-sigma",
    version,
    about = "Potentially K4-e graphical sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether a sequence is graphical.
    Check {
        /// `3,3,2,2` or `3^2,2^2`.
        sequence: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether some realization contains the pattern.
    Potential {
        sequence: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Engine::Oracle)]
        engine: Engine,
        /// Print the constructive engine's case trace.
        #[arg(long)]
        trace: bool,
    },
    /// Compute sigma(pattern, n) by exhaustion.
    Sigma {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check thresholds and cross-validate both engines over a range of n.
    Verify {
        /// `6`, `4..9` or `4..=9`; both ends inclusive.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP, env = "POTENTIAL_SIGMA_CAP")]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Artifact path; CSV when `--format csv` or the name ends in `.csv`,
        /// JSON otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Lower sum bound for the cross-validation sweep.
        #[arg(long)]
        sigma_min: Option<usize>,
        #[arg(long)]
        sigma_max: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// `k4e`, `k4`, `c4`, `k<k>` or `c<k>`.
    #[arg(long, default_value = "k4e", conflicts_with = "pattern_file")]
    pattern: String,
    /// Pattern given as an edge list.
    #[arg(long)]
    pattern_file: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_CAP, env = "POTENTIAL_SIGMA_CAP")]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Oracle,
    Constructive,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Validated settings shared by the subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub pattern: Pattern,
    pub engine: Engine,
    pub n: RangeInclusive<usize>,
    pub sigma_min: Option<usize>,
    pub sigma_max: Option<usize>,
    pub cap: usize,
    pub format: Format,
    pub trace: bool,
    pub workers: usize,
}

impl RunConfig {
    pub fn new(pattern: Pattern, n: RangeInclusive<usize>) -> Self {
        RunConfig {
            pattern,
            engine: Engine::Oracle,
            n,
            sigma_min: None,
            sigma_max: None,
            cap: DEFAULT_CAP,
            format: Format::Text,
            trace: false,
            workers: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::Domain("workers must be at least 1".into()));
        }
        if self.n.end() > &self.cap {
            return Err(Error::SizeLimit {
                what: "requested order",
                n: *self.n.end(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn oracle(&self) -> Oracle {
        Oracle::new(self.cap).with_workers(self.workers)
    }
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad bound {t:?}: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

fn load_pattern(common: &Common) -> Result<Pattern> {
    match &common.pattern_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Ok(Pattern::custom(text.parse()?))
        }
        None => common.pattern.parse(),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    match command {
        Command::Check { sequence, format } => cmd_check(&sequence, format, out),
        Command::Potential {
            sequence,
            common,
            engine,
            trace,
        } => {
            let seq: DegreeSequence = sequence.parse()?;
            let mut cfg = RunConfig::new(load_pattern(&common)?, seq.len()..=seq.len());
            cfg.engine = engine;
            cfg.cap = common.cap;
            cfg.format = common.format;
            cfg.trace = trace;
            cmd_potential(&seq, &cfg, out, err)
        }
        Command::Sigma {
            common,
            n,
            workers,
            out: path,
        } => {
            let mut cfg = RunConfig::new(load_pattern(&common)?, n..=n);
            cfg.cap = common.cap;
            cfg.format = common.format;
            cfg.workers = workers;
            cmd_sigma(&cfg, path.as_deref(), out)
        }
        Command::Verify {
            n,
            cap,
            format,
            workers,
            out: path,
            sigma_min,
            sigma_max,
        } => {
            let mut cfg = RunConfig::new(Pattern::k4_minus_e(), n);
            cfg.engine = Engine::Both;
            cfg.cap = cap;
            cfg.format = format;
            cfg.workers = workers;
            cfg.sigma_min = sigma_min;
            cfg.sigma_max = sigma_max;
            cmd_verify(&cfg, path.as_deref(), out, err)
        }
    }
}

#[derive(Serialize)]
struct CheckReport {
    sequence: String,
    graphical: bool,
    sigma: usize,
    n: usize,
}

pub fn cmd_check(literal: &str, format: Format, out: &mut dyn Write) -> Result<u8> {
    let seq: DegreeSequence = literal.parse()?;
    let report = CheckReport {
        sequence: seq.to_string(),
        graphical: seq.is_graphical(),
        sigma: seq.sigma(),
        n: seq.len(),
    };
    match format {
        Format::Json => emit(out, &json(&report))?,
        Format::Csv => emit(
            out,
            &format!(
                "sequence,graphical,sigma,n\n\"{}\",{},{},{}\n",
                report.sequence, report.graphical, report.sigma, report.n
            ),
        )?,
        Format::Text => emit(
            out,
            &format!(
                "graphical={} sigma={} n={}\n",
                yes_no(report.graphical),
                report.sigma,
                report.n
            ),
        )?,
    }
    Ok(if report.graphical {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

/// Verdict labels printed by `potential`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Answer {
    Yes,
    No,
    Exceptional,
    BelowThreshold,
}

impl Answer {
    fn label(self) -> &'static str {
        match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
            Answer::Exceptional => "EXCEPTIONAL",
            Answer::BelowThreshold => "BELOW_THRESHOLD",
        }
    }

    /// NO and EXCEPTIONAL mean the same thing: no realization holds the pattern.
    fn positive(self) -> Option<bool> {
        match self {
            Answer::Yes => Some(true),
            Answer::No | Answer::Exceptional => Some(false),
            Answer::BelowThreshold => None,
        }
    }
}

pub fn cmd_potential(
    seq: &DegreeSequence,
    cfg: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    // The cap bounds exhaustive search only; the constructive engine checks
    // it itself if a dense case has to be handed to the oracle.
    if cfg.engine == Engine::Constructive {
        RunConfig {
            n: 0..=0,
            ..cfg.clone()
        }
        .validate()?;
    } else {
        cfg.validate()?;
    }
    if !seq.is_graphical() {
        return Err(Error::NotGraphical(seq.to_string()));
    }
    if cfg.engine != Engine::Oracle && !cfg.pattern.is_k4_minus_e() {
        return Err(Error::Domain(format!(
            "the constructive engine only handles k4e, not {}",
            cfg.pattern.name()
        )));
    }
    if cfg.format == Format::Csv {
        return Err(Error::Domain("potential reports are text or json".into()));
    }
    let mut report = PotentialReport {
        sequence: seq.to_string(),
        pattern: cfg.pattern.name(),
        verdicts: Vec::new(),
        witness: None,
        embedding: None,
        trace: Vec::new(),
    };
    let mut answers = Vec::new();
    let mut witness = None;

    if cfg.engine != Engine::Constructive {
        let verdict = cfg.oracle().is_potentially(seq, &cfg.pattern)?;
        let answer = if verdict.is_yes() {
            Answer::Yes
        } else {
            Answer::No
        };
        report.verdicts.push(EngineVerdict {
            engine: "oracle",
            verdict: answer.label(),
            realizations_examined: Some(verdict.realizations_examined),
        });
        answers.push(answer);
        witness = verdict.witness;
    }
    if cfg.engine != Engine::Oracle {
        let outcome = ConstructiveEngine::new(cfg.oracle()).decide(seq)?;
        let answer = match outcome.kind {
            OutcomeKind::Realized => Answer::Yes,
            OutcomeKind::Exceptional => Answer::Exceptional,
            OutcomeKind::BelowThreshold => Answer::BelowThreshold,
        };
        report.verdicts.push(EngineVerdict {
            engine: "constructive",
            verdict: answer.label(),
            realizations_examined: None,
        });
        if cfg.trace {
            report.trace = outcome
                .trace
                .steps
                .iter()
                .map(ToString::to_string)
                .collect();
        }
        answers.push(answer);
        if outcome.witness.is_some() {
            witness = outcome.witness;
        }
    }

    let decided: Vec<bool> = answers.iter().filter_map(|a| a.positive()).collect();
    let agree = !decided.windows(2).any(|w| w[0] != w[1]);
    let yes = decided.first().copied();
    if let Some((g, emb)) = witness.filter(|_| agree && yes == Some(true)) {
        report.witness = Some(g.to_edge_list());
        report.embedding = Some(emb.map().to_vec());
    }
    emit(
        out,
        &report.render(
            cfg.format,
            cfg.engine == Engine::Both && decided.len() == 2 && agree,
        ),
    )?;

    if !agree {
        let labels: Vec<&str> = answers.iter().map(|a| a.label()).collect();
        let _ = writeln!(
            err,
            "error: engines disagree on ({seq}): {}",
            labels.join(" vs ")
        );
        return Ok(EXIT_ERROR);
    }
    match yes {
        Some(true) => Ok(EXIT_OK),
        Some(false) => Ok(EXIT_NEGATIVE),
        None => {
            let _ = writeln!(
                err,
                "error: sum {} is below {}, where the constructive engine makes no claim; use --engine oracle",
                seq.sigma(),
                inductive_threshold(seq.len())
            );
            Ok(EXIT_ERROR)
        }
    }
}

#[derive(Serialize)]
struct EngineVerdict {
    engine: &'static str,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    realizations_examined: Option<u64>,
}

#[derive(Serialize)]
struct PotentialReport {
    sequence: String,
    pattern: String,
    verdicts: Vec<EngineVerdict>,
    /// Edge-list text.
    witness: Option<String>,
    embedding: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    trace: Vec<String>,
}

impl PotentialReport {
    fn render(&self, format: Format, agreed: bool) -> String {
        if format == Format::Json {
            return json(self);
        }
        let mut text = String::new();
        for v in &self.verdicts {
            let _ = write!(text, "engine={} verdict={}", v.engine, v.verdict);
            if let Some(r) = v.realizations_examined {
                let _ = write!(text, " realizations_examined={r}");
            }
            text.push('\n');
            if v.engine == "constructive" && !self.trace.is_empty() {
                text.push_str("trace:\n");
                for line in &self.trace {
                    let _ = writeln!(text, "{line}");
                }
            }
        }
        if agreed {
            text.push_str("engines agree\n");
        }
        if let (Some(w), Some(map)) = (&self.witness, &self.embedding) {
            text.push_str("witness:\n");
            text.push_str(w);
            let pairs: Vec<String> = map
                .iter()
                .enumerate()
                .map(|(i, v)| format!("{i}->{v}"))
                .collect();
            let _ = writeln!(text, "embedding: {}", pairs.join(" "));
        }
        text
    }
}

pub fn cmd_sigma(cfg: &RunConfig, path: Option<&Path>, out: &mut dyn Write) -> Result<u8> {
    cfg.validate()?;
    let n = *cfg.n.start();
    let report = cfg.oracle().sigma_threshold(&cfg.pattern, n)?;
    let rendered = match cfg.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => csv_table(std::slice::from_ref(&report)),
        Format::Text => {
            let mut line = format!(
                "pattern={} n={} computed={}",
                report.pattern, report.n, report.computed_sigma
            );
            if let Some(f) = report.formula_sigma {
                let _ = write!(line, " formula={f} agrees={}", report.agrees);
            }
            let _ = writeln!(
                line,
                " extremal=[{}] examined={} elapsed_ms={}",
                compact_list(&report.extremal_sequences),
                report.sequences_examined,
                report.elapsed_ms
            );
            line
        }
    };
    emit(out, &rendered)?;
    if let Some(path) = path {
        let artifact = if wants_csv(cfg.format, path) {
            csv_table(std::slice::from_ref(&report))
        } else {
            report.to_json() + "\n"
        };
        write_file(path, &artifact)?;
    }
    Ok(if report.agrees {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

/// One row of `verify`: the exhaustive threshold plus the engine sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyRow {
    #[serde(flatten)]
    pub report: ThresholdReport,
    /// Sequences on which both engines ran.
    pub cross_checked: u64,
    /// Sequences where the engines gave different answers or the constructive
    /// engine failed.
    #[serde(serialize_with = "plain")]
    pub disagreements: Vec<DegreeSequence>,
    /// Sequences in the sweep that are not potentially K4-e.
    #[serde(serialize_with = "plain")]
    pub exceptional: Vec<DegreeSequence>,
    /// Sequences where the constructive engine had to ask the oracle for a
    /// K4-e directly because its case ladder got stuck.
    pub oracle_fallbacks: u64,
}

impl VerifyRow {
    pub fn ok(&self) -> bool {
        self.report.agrees && self.disagreements.is_empty()
    }
}

fn plain<S: serde::Serializer>(
    seqs: &[DegreeSequence],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(seqs.iter().map(ToString::to_string))
}

/// Computes one row. The sweep covers graphical sequences with sum from
/// `max(sigma_min, inductive_threshold(n))` up to `sigma_max`; by default that
/// is every sequence the constructive engine makes a claim about.
pub fn verify_row(cfg: &RunConfig, n: usize) -> Result<VerifyRow> {
    let oracle = cfg.oracle();
    let report = oracle.sigma_threshold(&Pattern::k4_minus_e(), n)?;
    let engine = ConstructiveEngine::new(Oracle::new(cfg.cap));
    let lo = cfg.sigma_min.unwrap_or(0).max(inductive_threshold(n));
    let hi = cfg.sigma_max.unwrap_or(n * (n - 1)).min(n * (n - 1));
    let sweep: Vec<DegreeSequence> = (lo..=hi)
        .rev()
        .filter(|s| s % 2 == 0)
        .flat_map(|s| graphical_with_sigma(n, s))
        .collect();
    let k4e = Pattern::k4_minus_e();
    let results: Vec<Result<(bool, bool, bool)>> = oracle.in_pool(|| {
        sweep
            .par_iter()
            .map(|seq| {
                let yes = oracle.is_potentially(seq, &k4e)?.is_yes();
                let (agree, fell_back) = match engine.decide(seq) {
                    Ok(o) => {
                        let agree = match o.kind {
                            OutcomeKind::Realized => yes && independent_check(seq, &o.witness),
                            OutcomeKind::Exceptional => !yes,
                            OutcomeKind::BelowThreshold => false,
                        };
                        (agree, o.trace.contains_case(CaseLabel::DelegateOracle))
                    }
                    Err(_) => (false, false),
                };
                Ok((yes, agree, fell_back))
            })
            .collect()
    });
    let mut disagreements = Vec::new();
    let mut exceptional = Vec::new();
    let mut oracle_fallbacks = 0;
    for (seq, r) in sweep.iter().zip(results) {
        let (yes, agree, fell_back) = r?;
        oracle_fallbacks += u64::from(fell_back);
        if !yes {
            exceptional.push(seq.clone());
        }
        if !agree {
            disagreements.push(seq.clone());
        }
    }
    Ok(VerifyRow {
        report,
        cross_checked: sweep.len() as u64,
        disagreements,
        exceptional,
        oracle_fallbacks,
    })
}

fn independent_check(
    seq: &DegreeSequence,
    witness: &Option<(crate::graph::SimpleGraph, crate::pattern::Embedding)>,
) -> bool {
    let Some((g, emb)) = witness else {
        return false;
    };
    let k4e = Pattern::k4_minus_e();
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees == seq.terms() && emb.is_valid(&k4e, g)
}

pub fn cmd_verify(
    cfg: &RunConfig,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    cfg.validate()?;
    if *cfg.n.start() < 4 {
        return Err(Error::Domain(format!(
            "verify needs n >= 4, got {}",
            cfg.n.start()
        )));
    }
    let mut rows = Vec::new();
    for n in cfg.n.clone() {
        rows.push(verify_row(cfg, n)?);
    }
    let reports: Vec<ThresholdReport> = rows
        .iter()
        .map(|r| ThresholdReport {
            agrees: r.ok(),
            ..r.report.clone()
        })
        .collect();
    let rendered = match cfg.format {
        Format::Json => json(&rows),
        Format::Csv => csv_table(&reports),
        Format::Text => verify_table(&rows),
    };
    emit(out, &rendered)?;
    if let Some(path) = path {
        let artifact = if wants_csv(cfg.format, path) {
            csv_table(&reports)
        } else {
            json(&rows)
        };
        write_file(path, &artifact)?;
    }
    for row in rows.iter().filter(|r| !r.ok()) {
        if !row.report.agrees {
            let _ = writeln!(
                err,
                "n={}: computed {} but formula {}",
                row.report.n,
                row.report.computed_sigma,
                row.report
                    .formula_sigma
                    .map_or("none".into(), |f| f.to_string())
            );
        }
        for seq in &row.disagreements {
            let _ = writeln!(err, "n={}: counterexample ({seq})", row.report.n);
        }
    }
    Ok(if rows.iter().all(VerifyRow::ok) {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn verify_table(rows: &[VerifyRow]) -> String {
    let mut s = String::from("   n  computed  formula  agrees  checked  fallbacks  exceptional\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{:>4}  {:>8}  {:>7}  {:>6}  {:>7}  {:>9}  [{}]",
            r.report.n,
            r.report.computed_sigma,
            r.report.formula_sigma.map_or("-".into(), |f| f.to_string()),
            if r.ok() { "yes" } else { "NO" },
            r.cross_checked,
            r.oracle_fallbacks,
            compact_list(&r.exceptional)
        );
    }
    s
}

pub fn csv_table(reports: &[ThresholdReport]) -> String {
    let mut s =
        String::from("n,pattern,computed_sigma,formula_sigma,agrees,n_extremal,elapsed_ms\n");
    for r in reports {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            r.n,
            r.pattern,
            r.computed_sigma,
            r.formula_sigma.map_or(String::new(), |f| f.to_string()),
            r.agrees,
            r.extremal_sequences.len(),
            r.elapsed_ms
        );
    }
    s
}

fn compact_list(seqs: &[DegreeSequence]) -> String {
    seqs.iter()
        .map(|s| s.to_compact())
        .collect::<Vec<_>>()
        .join(" ")
}

fn wants_csv(format: Format, path: &Path) -> bool {
    format == Format::Csv || path.extension().is_some_and(|e| e == "csv")
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Domain(format!("writing output: {e}")))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))
}
