/*
 * cqorbits - exact enumeration of Borel orbit counts on complete quadrics.
 *
 * C interface to the engine. All handles are opaque; every function that can
 * fail returns a cq_status and leaves a message retrievable through
 * cq_engine_last_error. Large integers cross the boundary as decimal
 * strings, structured results as JSON documents; strings returned through
 * out-parameters are heap-allocated and must be released with
 * cq_string_free.
 */
#ifndef CQORBITS_H
#define CQORBITS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cq_engine cq_engine;

typedef enum cq_status {
    CQ_OK = 0,
    CQ_ERROR_INVALID_ARGUMENT = 1, /* bad n, unknown name, contract violation */
    CQ_ERROR_CUTOFF_EXCEEDED = 2,  /* request exceeds a configured scan cutoff */
    CQ_ERROR_OUT_OF_MEMORY = 3,
    CQ_ERROR_INTERNAL = 4          /* an internal cross-check disagreed */
} cq_status;

const char* cq_version(void);
const char* cq_status_name(cq_status status);

/* Returns NULL only on allocation failure. */
cq_engine* cq_engine_new(void);
void cq_engine_free(cq_engine* engine);

/*
 * Keys: "perm_cutoff" (full-permutation-scan bound, default 9),
 *       "box_cutoff"  (tableau-filling bound, default 10),
 *       "jobs"        (worker threads, default 1).
 * Values must be positive.
 */
cq_status cq_engine_configure(cq_engine* engine, const char* key, long long value);

/* Message from the most recent failing call on this engine ("" if none).
 * Valid until the next call on the same engine. */
const char* cq_engine_last_error(const cq_engine* engine);

void cq_string_free(char* s);

/*
 * Orbit count for n >= 1 by the named route: "compositions", "skew",
 * "hermite" or "descents". The result is a decimal string.
 */
cq_status cq_count(cq_engine* engine, unsigned n, const char* method, char** out_value);

/*
 * Enumerator polynomial for the given subset of [n-1]. JSON object with the
 * subset, ascending "coefficients" (decimal strings), a display string, the
 * value at 1 and the unimodality flag.
 */
cq_status cq_b_poly(cq_engine* engine, unsigned n, const unsigned* members,
                    size_t members_len, char** out_json);

/*
 * Enumerator polynomials for every subset of [n-1], ordered by size then
 * lexicographically. For n = 5 the report also carries the audit against
 * the published reference table.
 */
cq_status cq_table_report(cq_engine* engine, unsigned n, char** out_json);

/* Unimodality scan over every subset of [n-1]; counterexamples reported
 * verbatim, never asserted away. */
cq_status cq_conjecture_report(cq_engine* engine, unsigned n, char** out_json);

/*
 * Cross-verification suite. Passing lo = hi = 0 runs every check over its
 * full default range; otherwise scan ranges are clamped to [lo, hi].
 * A failing check makes the report's "overall" field "fail"; the call
 * itself still returns CQ_OK.
 */
cq_status cq_verify_report(cq_engine* engine, unsigned lo, unsigned hi, char** out_json);

/*
 * First `count` terms of a named sequence as decimal strings. Names:
 * "borel_orbits", "ordered_bell", "involutions", "fibonacci",
 * "equivariant_orbits", "special_subset_counts".
 */
cq_status cq_sequence_report(cq_engine* engine, const char* name, unsigned count,
                             char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CQORBITS_H */
