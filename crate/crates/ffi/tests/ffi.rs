use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use potential_sigma_ffi::*;

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ps_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ps_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn parse(lit: &str) -> *mut PsSequence {
    let c = CString::new(lit).unwrap();
    let mut seq = ptr::null_mut();
    assert_eq!(
        unsafe { ps_sequence_parse(c.as_ptr(), &mut seq) },
        PsStatus::Ok
    );
    seq
}

#[test]
fn sequence_handle() {
    let seq = parse("4^7,0^1");
    unsafe {
        assert_eq!(ps_sequence_len(seq), 8);
        assert_eq!(ps_sequence_sigma(seq), 28);
        assert!(ps_sequence_is_graphical(seq));
        assert_eq!(take_string(ps_sequence_to_string(seq)), "4,4,4,4,4,4,4,0");
        ps_sequence_free(seq);
    }
}

#[test]
fn parse_errors_set_message() {
    let c = CString::new("3,x").unwrap();
    let mut seq = ptr::null_mut();
    assert_eq!(
        unsafe { ps_sequence_parse(c.as_ptr(), &mut seq) },
        PsStatus::Parse
    );
    assert!(seq.is_null());
    assert!(last_error().contains("3,x"));
    assert_eq!(
        unsafe { ps_sequence_parse(ptr::null(), &mut seq) },
        PsStatus::NullPointer
    );
    assert_eq!(
        unsafe { ps_sequence_parse(c.as_ptr(), ptr::null_mut()) },
        PsStatus::NullPointer
    );
}

#[test]
fn constructive_outcome() {
    let seq = parse("4^1,3^5,1^1");
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            ps_potential_k4e(seq, PsEngine::Constructive, 0, &mut out),
            PsStatus::Ok
        );
        assert_eq!(ps_outcome_verdict(out), PsVerdict::Yes);
        let edges = take_string(ps_outcome_witness_edge_list(out));
        assert!(edges.starts_with("7 10\n"));
        let mut map = [0usize; 4];
        assert_eq!(ps_outcome_embedding(out, map.as_mut_ptr()), PsStatus::Ok);
        let g: potential_sigma::SimpleGraph = edges.parse().unwrap();
        for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
            assert!(g.has_edge(map[a], map[b]));
        }
        assert!(take_string(ps_outcome_trace(out)).ends_with("action=fixture fixture=F1\n"));
        ps_outcome_free(out);
        ps_sequence_free(seq);
    }
}

#[test]
fn exceptional_and_oracle_outcomes() {
    let seq = parse("3^6");
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            ps_potential_k4e(seq, PsEngine::Constructive, 0, &mut out),
            PsStatus::Ok
        );
        assert_eq!(ps_outcome_verdict(out), PsVerdict::Exceptional);
        assert!(ps_outcome_witness_edge_list(out).is_null());
        let mut map = [0usize; 4];
        assert_eq!(
            ps_outcome_embedding(out, map.as_mut_ptr()),
            PsStatus::Domain
        );
        ps_outcome_free(out);

        assert_eq!(
            ps_potential_k4e(seq, PsEngine::Oracle, 0, &mut out),
            PsStatus::Ok
        );
        assert_eq!(ps_outcome_verdict(out), PsVerdict::No);
        assert_eq!(take_string(ps_outcome_trace(out)), "");
        ps_outcome_free(out);
        ps_sequence_free(seq);
    }
}

#[test]
fn potential_errors() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = parse("3,3,1");
        assert_eq!(
            ps_potential_k4e(bad, PsEngine::Oracle, 0, &mut out),
            PsStatus::NotGraphical
        );
        ps_sequence_free(bad);
        let big = parse("3^12");
        assert_eq!(
            ps_potential_k4e(big, PsEngine::Oracle, 10, &mut out),
            PsStatus::SizeLimit
        );
        assert!(last_error().contains("size limit"));
        ps_sequence_free(big);
        assert_eq!(
            ps_potential_k4e(ptr::null(), PsEngine::Oracle, 0, &mut out),
            PsStatus::NullPointer
        );
        let small = parse("3,3,2");
        assert_eq!(
            ps_potential_k4e(small, PsEngine::Constructive, 0, &mut out),
            PsStatus::Domain
        );
        ps_sequence_free(small);
    }
}

#[test]
fn threshold_report() {
    let pattern = CString::new("k4e").unwrap();
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(
            ps_sigma_threshold(pattern.as_ptr(), 6, 0, 2, &mut report),
            PsStatus::Ok
        );
        assert_eq!(ps_report_computed_sigma(report), 20);
        assert!(ps_report_agrees(report));
        assert_eq!(ps_report_extremal_count(report), 1);
        let json = take_string(ps_report_to_json(report));
        let parsed = potential_sigma::ThresholdReport::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
        ps_report_free(report);

        let k5 = CString::new("k5").unwrap();
        assert_eq!(
            ps_sigma_threshold(k5.as_ptr(), 4, 0, 1, &mut report),
            PsStatus::NoThreshold
        );
        let junk = CString::new("petersen").unwrap();
        assert_eq!(
            ps_sigma_threshold(junk.as_ptr(), 6, 0, 1, &mut report),
            PsStatus::Parse
        );
    }
}

#[test]
fn formula() {
    let mut v = 0;
    unsafe {
        assert_eq!(ps_theorem_formula(6, &mut v), PsStatus::Ok);
        assert_eq!(v, 20);
        assert_eq!(ps_theorem_formula(9, &mut v), PsStatus::Ok);
        assert_eq!(v, 26);
        assert_eq!(ps_theorem_formula(3, &mut v), PsStatus::Domain);
        assert_eq!(
            ps_theorem_formula(5, ptr::null_mut()),
            PsStatus::NullPointer
        );
    }
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        ps_sequence_free(ptr::null_mut());
        ps_outcome_free(ptr::null_mut());
        ps_report_free(ptr::null_mut());
        ps_string_free(ptr::null_mut());
        assert_eq!(ps_sequence_len(ptr::null()), 0);
        assert!(ps_outcome_witness_edge_list(ptr::null()).is_null());
    }
}

/// Builds a small C program against the generated header and the static
/// library. Skipped when no C compiler is on the path.
#[test]
fn c_program_links_against_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    let header = std::fs::read_to_string(header_dir.join("potential_sigma.h")).unwrap();
    for name in [
        "ps_sequence_parse",
        "ps_potential_k4e",
        "ps_sigma_threshold",
        "ps_last_error_message",
        "PS_STATUS_OK",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("cc not found; skipping C build");
        return;
    }
    // target/<profile>/deps/ffi-<hash> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let staticlib = profile_dir.join("libpotential_sigma_ffi.a");
    if !staticlib.exists() {
        eprintln!("{} not built; skipping C build", staticlib.display());
        return;
    }
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("ffi_smoke.c");
    let bin = tmp.join("ffi_smoke");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "potential_sigma.h"

int main(void) {
    PsSequence *seq = NULL;
    PsOutcome *out = NULL;
    if (ps_sequence_parse("3^8", &seq) != PS_STATUS_OK) return 10;
    if (ps_potential_k4e(seq, PS_ENGINE_CONSTRUCTIVE, 0, &out) != PS_STATUS_OK) return 11;
    if (ps_outcome_verdict(out) != PS_VERDICT_YES) return 12;
    char *edges = ps_outcome_witness_edge_list(out);
    printf("%s", edges);
    ps_string_free(edges);
    ps_outcome_free(out);
    ps_sequence_free(seq);
    if (ps_sequence_parse("3,x", &seq) != PS_STATUS_PARSE) return 13;
    printf("error: %s\n", ps_last_error_message());
    return 0;
}
"#,
    )
    .unwrap();
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&header_dir)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C build failed");
    let run = Command::new(&bin).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    let text = String::from_utf8(run.stdout).unwrap();
    assert!(text.starts_with("8 12\n"), "{text}");
    assert!(text.contains("error: parse error"));
}
