//! C ABI over `potential_sigma`.
//!
//! Objects cross the boundary as opaque handles that the caller frees with the
//! matching `*_free` function. Every fallible call returns a [`PsStatus`]; on
//! failure [`ps_last_error_message`] describes the error. Strings returned by
//! the library are owned by the caller and released with [`ps_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use potential_sigma::oracle::DEFAULT_CAP;
use potential_sigma::{
    theorem_formula, ConstructiveEngine, DegreeSequence, Embedding, Error, Oracle, OutcomeKind,
    Pattern, SimpleGraph, ThresholdReport,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotGraphical = 4,
    SizeLimit = 5,
    Domain = 6,
    NoThreshold = 7,
    /// The engines contradicted each other or an internal check failed.
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsEngine {
    Oracle = 0,
    Constructive = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsVerdict {
    Yes = 0,
    No = 1,
    Exceptional = 2,
    BelowThreshold = 3,
}

/// Opaque degree sequence.
pub struct PsSequence {
    inner: DegreeSequence,
}

/// Opaque answer to a "potentially K4-e" query.
pub struct PsOutcome {
    verdict: PsVerdict,
    witness: Option<(SimpleGraph, Embedding)>,
    trace: String,
}

/// Opaque threshold report.
pub struct PsReport {
    inner: ThresholdReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> PsStatus {
    match err {
        Error::Parse(_) => PsStatus::Parse,
        Error::NotGraphical(_) => PsStatus::NotGraphical,
        Error::SizeLimit { .. } => PsStatus::SizeLimit,
        Error::NoThreshold { .. } => PsStatus::NoThreshold,
        Error::Counterexample(_) | Error::Reattach(_) | Error::NormalizationStuck(_) => {
            PsStatus::Internal
        }
        _ => PsStatus::Domain,
    }
}

/// Runs `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (PsStatus, String)>) -> PsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside potential_sigma");
            PsStatus::Panic
        }
    }
}

fn lib(err: Error) -> (PsStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (PsStatus, String) {
    (PsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (PsStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| (PsStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn effective_cap(cap: usize) -> usize {
    if cap == 0 {
        DEFAULT_CAP
    } else {
        cap
    }
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn ps_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn ps_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `3,3,2,2` or `3^2,2^2` into a new handle stored in `*out`.
///
/// # Safety
/// `literal` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ps_sequence_parse(
    literal: *const c_char,
    out: *mut *mut PsSequence,
) -> PsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(literal, "literal")?;
        let inner: DegreeSequence = text.parse().map_err(lib)?;
        *out = Box::into_raw(Box::new(PsSequence { inner }));
        Ok(())
    })
}

/// # Safety
/// `seq` must be null or a handle from [`ps_sequence_parse`].
#[no_mangle]
pub unsafe extern "C" fn ps_sequence_free(seq: *mut PsSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Number of terms; 0 for null.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_sequence_len(seq: *const PsSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.inner.len())
}

/// Sum of the terms; 0 for null.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_sequence_sigma(seq: *const PsSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.inner.sigma())
}

/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_sequence_is_graphical(seq: *const PsSequence) -> bool {
    seq.as_ref().is_some_and(|s| s.inner.is_graphical())
}

/// Plain comma-separated form; free with [`ps_string_free`].
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_sequence_to_string(seq: *const PsSequence) -> *mut c_char {
    seq.as_ref()
        .map_or(ptr::null_mut(), |s| owned_string(s.inner.to_string()))
}

/// Decides whether some realization of `seq` contains K4-e. `cap` bounds the
/// order handed to exhaustive search; 0 means the default.
///
/// # Safety
/// `seq` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ps_potential_k4e(
    seq: *const PsSequence,
    engine: PsEngine,
    cap: usize,
    out: *mut *mut PsOutcome,
) -> PsStatus {
    guard(|| {
        let seq = &seq.as_ref().ok_or_else(|| null("seq"))?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let oracle = Oracle::new(effective_cap(cap));
        let outcome = match engine {
            PsEngine::Oracle => {
                if !seq.is_graphical() {
                    return Err(lib(Error::NotGraphical(seq.to_string())));
                }
                let v = oracle
                    .is_potentially(seq, &Pattern::k4_minus_e())
                    .map_err(lib)?;
                PsOutcome {
                    verdict: if v.is_yes() {
                        PsVerdict::Yes
                    } else {
                        PsVerdict::No
                    },
                    witness: v.witness,
                    trace: String::new(),
                }
            }
            PsEngine::Constructive => {
                let o = ConstructiveEngine::new(oracle).decide(seq).map_err(lib)?;
                PsOutcome {
                    verdict: match o.kind {
                        OutcomeKind::Realized => PsVerdict::Yes,
                        OutcomeKind::Exceptional => PsVerdict::Exceptional,
                        OutcomeKind::BelowThreshold => PsVerdict::BelowThreshold,
                    },
                    witness: o.witness,
                    trace: o.trace.to_text(),
                }
            }
        };
        *out = Box::into_raw(Box::new(outcome));
        Ok(())
    })
}

/// # Safety
/// `outcome` must be null or a handle from [`ps_potential_k4e`].
#[no_mangle]
pub unsafe extern "C" fn ps_outcome_free(outcome: *mut PsOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome));
    }
}

/// # Safety
/// `outcome` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_outcome_verdict(outcome: *const PsOutcome) -> PsVerdict {
    outcome.as_ref().map_or(PsVerdict::No, |o| o.verdict)
}

/// Witness in edge-list format, or null when there is none. Free with
/// [`ps_string_free`].
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_outcome_witness_edge_list(outcome: *const PsOutcome) -> *mut c_char {
    match outcome.as_ref().and_then(|o| o.witness.as_ref()) {
        Some((g, _)) => owned_string(g.to_edge_list()),
        None => ptr::null_mut(),
    }
}

/// Writes the images of the four K4-e vertices into `map[0..4]`. The pattern
/// has edges 01, 02, 03, 12, 13.
///
/// # Safety
/// `outcome` must be a live handle and `map` point to four writable values.
#[no_mangle]
pub unsafe extern "C" fn ps_outcome_embedding(
    outcome: *const PsOutcome,
    map: *mut usize,
) -> PsStatus {
    guard(|| {
        let o = outcome.as_ref().ok_or_else(|| null("outcome"))?;
        if map.is_null() {
            return Err(null("map"));
        }
        let (_, emb) = o
            .witness
            .as_ref()
            .ok_or_else(|| (PsStatus::Domain, "outcome has no witness".to_string()))?;
        for (i, &v) in emb.map().iter().enumerate() {
            *map.add(i) = v;
        }
        Ok(())
    })
}

/// Case trace of the constructive engine, one step per line; empty for the
/// oracle. Free with [`ps_string_free`].
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_outcome_trace(outcome: *const PsOutcome) -> *mut c_char {
    outcome
        .as_ref()
        .map_or(ptr::null_mut(), |o| owned_string(o.trace.clone()))
}

/// Computes sigma(pattern, n) by exhaustion. `pattern` is `k4e`, `k4`, `c4`,
/// `k<k>` or `c<k>`; `cap` 0 means the default; `workers` 0 means 1.
///
/// # Safety
/// `pattern` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ps_sigma_threshold(
    pattern: *const c_char,
    n: usize,
    cap: usize,
    workers: usize,
    out: *mut *mut PsReport,
) -> PsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let pattern: Pattern = read_str(pattern, "pattern")?.parse().map_err(lib)?;
        let oracle = Oracle::new(effective_cap(cap)).with_workers(workers.max(1));
        let inner = oracle.sigma_threshold(&pattern, n).map_err(lib)?;
        *out = Box::into_raw(Box::new(PsReport { inner }));
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a handle from [`ps_sigma_threshold`].
#[no_mangle]
pub unsafe extern "C" fn ps_report_free(report: *mut PsReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_report_computed_sigma(report: *const PsReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.computed_sigma)
}

/// Whether the computed value matches the closed formula (true when no
/// formula applies).
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_report_agrees(report: *const PsReport) -> bool {
    report.as_ref().is_some_and(|r| r.inner.agrees)
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_report_extremal_count(report: *const PsReport) -> usize {
    report
        .as_ref()
        .map_or(0, |r| r.inner.extremal_sequences.len())
}

/// Pretty JSON; free with [`ps_string_free`].
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ps_report_to_json(report: *const PsReport) -> *mut c_char {
    report
        .as_ref()
        .map_or(ptr::null_mut(), |r| owned_string(r.inner.to_json()))
}

/// The K4-e threshold for `n >= 4`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ps_theorem_formula(n: usize, out: *mut usize) -> PsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = theorem_formula(n).map_err(lib)?;
        Ok(())
    })
}
