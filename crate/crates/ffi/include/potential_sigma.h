#ifndef POTENTIAL_SIGMA_H
#define POTENTIAL_SIGMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PsEngine {
  PS_ENGINE_ORACLE = 0,
  PS_ENGINE_CONSTRUCTIVE = 1,
} PsEngine;

/**
 * Result code of every fallible call.
 */
typedef enum PsStatus {
  PS_STATUS_OK = 0,
  PS_STATUS_NULL_POINTER = 1,
  PS_STATUS_INVALID_UTF8 = 2,
  PS_STATUS_PARSE = 3,
  PS_STATUS_NOT_GRAPHICAL = 4,
  PS_STATUS_SIZE_LIMIT = 5,
  PS_STATUS_DOMAIN = 6,
  PS_STATUS_NO_THRESHOLD = 7,
  /**
   * The engines contradicted each other or an internal check failed.
   */
  PS_STATUS_INTERNAL = 8,
  PS_STATUS_PANIC = 9,
} PsStatus;

typedef enum PsVerdict {
  PS_VERDICT_YES = 0,
  PS_VERDICT_NO = 1,
  PS_VERDICT_EXCEPTIONAL = 2,
  PS_VERDICT_BELOW_THRESHOLD = 3,
} PsVerdict;

/**
 * Opaque answer to a "potentially K4-e" query.
 */
typedef struct PsOutcome PsOutcome;

/**
 * Opaque threshold report.
 */
typedef struct PsReport PsReport;

/**
 * Opaque degree sequence.
 */
typedef struct PsSequence PsSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *ps_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void ps_string_free(char *s);

/**
 * Parses `3,3,2,2` or `3^2,2^2` into a new handle stored in `*out`.
 *
 * # Safety
 * `literal` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PsStatus ps_sequence_parse(const char *literal, struct PsSequence **out);

/**
 * # Safety
 * `seq` must be null or a handle from [`ps_sequence_parse`].
 */
void ps_sequence_free(struct PsSequence *seq);

/**
 * Number of terms; 0 for null.
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
uintptr_t ps_sequence_len(const struct PsSequence *seq);

/**
 * Sum of the terms; 0 for null.
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
uintptr_t ps_sequence_sigma(const struct PsSequence *seq);

/**
 * # Safety
 * `seq` must be null or a live handle.
 */
bool ps_sequence_is_graphical(const struct PsSequence *seq);

/**
 * Plain comma-separated form; free with [`ps_string_free`].
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
char *ps_sequence_to_string(const struct PsSequence *seq);

/**
 * Decides whether some realization of `seq` contains K4-e. `cap` bounds the
 * order handed to exhaustive search; 0 means the default.
 *
 * # Safety
 * `seq` must be a live handle and `out` a valid pointer.
 */
enum PsStatus ps_potential_k4e(const struct PsSequence *seq,
                               enum PsEngine engine,
                               uintptr_t cap,
                               struct PsOutcome **out);

/**
 * # Safety
 * `outcome` must be null or a handle from [`ps_potential_k4e`].
 */
void ps_outcome_free(struct PsOutcome *outcome);

/**
 * # Safety
 * `outcome` must be a live handle.
 */
enum PsVerdict ps_outcome_verdict(const struct PsOutcome *outcome);

/**
 * Witness in edge-list format, or null when there is none. Free with
 * [`ps_string_free`].
 *
 * # Safety
 * `outcome` must be null or a live handle.
 */
char *ps_outcome_witness_edge_list(const struct PsOutcome *outcome);

/**
 * Writes the images of the four K4-e vertices into `map[0..4]`. The pattern
 * has edges 01, 02, 03, 12, 13.
 *
 * # Safety
 * `outcome` must be a live handle and `map` point to four writable values.
 */
enum PsStatus ps_outcome_embedding(const struct PsOutcome *outcome, uintptr_t *map);

/**
 * Case trace of the constructive engine, one step per line; empty for the
 * oracle. Free with [`ps_string_free`].
 *
 * # Safety
 * `outcome` must be null or a live handle.
 */
char *ps_outcome_trace(const struct PsOutcome *outcome);

/**
 * Computes sigma(pattern, n) by exhaustion. `pattern` is `k4e`, `k4`, `c4`,
 * `k<k>` or `c<k>`; `cap` 0 means the default; `workers` 0 means 1.
 *
 * # Safety
 * `pattern` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PsStatus ps_sigma_threshold(const char *pattern,
                                 uintptr_t n,
                                 uintptr_t cap,
                                 uintptr_t workers,
                                 struct PsReport **out);

/**
 * # Safety
 * `report` must be null or a handle from [`ps_sigma_threshold`].
 */
void ps_report_free(struct PsReport *report);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
uintptr_t ps_report_computed_sigma(const struct PsReport *report);

/**
 * Whether the computed value matches the closed formula (true when no
 * formula applies).
 *
 * # Safety
 * `report` must be null or a live handle.
 */
bool ps_report_agrees(const struct PsReport *report);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
uintptr_t ps_report_extremal_count(const struct PsReport *report);

/**
 * Pretty JSON; free with [`ps_string_free`].
 *
 * # Safety
 * `report` must be null or a live handle.
 */
char *ps_report_to_json(const struct PsReport *report);

/**
 * The K4-e threshold for `n >= 4`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PsStatus ps_theorem_formula(uintptr_t n, uintptr_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* POTENTIAL_SIGMA_H */
