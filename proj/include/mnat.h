/*
 * mnat — discrete functions on the integer lattice under exchange
 * axioms: axiom checkers with violation certificates, steepest-descent
 * and candidate-set-reduction minimizers, theorem verifiers, and a
 * counterexample catalog.
 *
 * C interface of the shared library. All functions return a status
 * code; results are handed back through out-parameters. Strings
 * returned through char** are heap-allocated and must be released with
 * mnat_string_free. Handles are opaque and must be released with
 * mnat_function_free.
 *
 * Structured results (certificates, traces, verdicts) are JSON
 * documents; their schemas ship under schemas/ in the source tree.
 */

#ifndef MNAT_H
#define MNAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define MNAT_API_VERSION_MAJOR 1
#define MNAT_API_VERSION_MINOR 0

typedef enum mnat_status {
  MNAT_OK = 0,
  MNAT_ERR_INVALID_ARGUMENT = 1, /* bad handle, name, or option value */
  MNAT_ERR_PARSE = 2,            /* malformed function file / JSON */
  MNAT_ERR_DIMENSION = 3,        /* point length vs ambient dimension */
  MNAT_ERR_EMPTY_DOMAIN = 4,
  MNAT_ERR_NOT_IN_DOMAIN = 5,    /* start point outside the domain */
  MNAT_ERR_PRECONDITION = 6,     /* strict-mode axiom check failed */
  MNAT_ERR_DIAGNOSTIC = 7,       /* algorithm detected inconsistent state */
  MNAT_ERR_IO = 8,
  MNAT_ERR_UNKNOWN_NAME = 9,     /* unknown axiom/theorem/gallery id */
  MNAT_ERR_INTERNAL = 10
} mnat_status;

/* Stable name for a status code ("ok", "parse-error", ...). */
const char* mnat_status_name(mnat_status status);

void mnat_string_free(char* s);

/* An immutable tabulated function Z^n -> Q u {+inf}. */
typedef struct mnat_function mnat_function;

/*
 * Function file format (JSON):
 *   {"dim": n, "points": [{"x": [int, ...], "f": number-or-"p/q"}, ...]}
 * Points are listed exactly once; unlisted points are +infinity.
 */
mnat_status mnat_function_parse_json(const char* text, mnat_function** out,
                                     char** error_message);
mnat_status mnat_function_load_file(const char* path, mnat_function** out,
                                    char** error_message);
mnat_status mnat_function_emit_json(const mnat_function* f, char** json_out);
void mnat_function_free(mnat_function* f);

int32_t mnat_function_dim(const mnat_function* f);
int64_t mnat_function_table_size(const mnat_function* f);

typedef struct mnat_check_options {
  int exhaustive; /* collect all violations instead of the first */
  int threads;    /* 0 = single-threaded; verdicts never depend on this */
} mnat_check_options;

/*
 * Axiom ids: "ssqm-nat", "mnat-exc", "m-exc", "ssqm", "ssqm-nat-prj",
 * "mnat-set", "descent-lemma". "mnat-set" checks the set exchange axiom
 * on the effective domain. *pass_out is 1/0; *report_json_out carries
 * the AxiomReport document (for "ssqm-nat-prj", one report per part).
 */
mnat_status mnat_check_axiom(const mnat_function* f, const char* axiom,
                             const mnat_check_options* options,
                             int* pass_out, char** report_json_out,
                             char** error_message);

typedef struct mnat_minimize_options {
  int strict; /* -1 auto (strict up to 10^4 points), 0 fast, 1 strict */
  int audit;  /* cross-check shrink steps against the brute-force argmin */
  int trace;  /* include the full step log in the result document */
} mnat_minimize_options;

/*
 * Algorithms: "basic", "modified", "domain-reduction". "basic" and
 * "modified" require a start point of length start_len == dim;
 * "domain-reduction" ignores it (pass NULL, 0). "modified" shrinks the
 * componentwise bounding box of the effective domain.
 *
 * On MNAT_OK, *result_json_out holds {"algorithm", "minimizer", "value",
 * "iterations", optional "trace"}. On MNAT_ERR_PRECONDITION the failed
 * axiom report is returned in *result_json_out instead.
 */
mnat_status mnat_minimize(const mnat_function* f, const char* algorithm,
                          const int64_t* start, int32_t start_len,
                          const mnat_minimize_options* options,
                          char** result_json_out, char** error_message);

typedef struct mnat_verify_options {
  int64_t alpha;      /* proximity scale, >= 2; 0 = default 2 */
  const char* regime; /* proximity: "mnat" (default) or "m" */
  const char* variant; /* directional sweeps: restrict to one variant */
} mnat_verify_options;

/*
 * Theorem ids: "min-cut-weak", "min-cut-strong", "min-cut-directional",
 * "statement-A", "geodesic", "proximity", "local-global",
 * "projection-bridge". Runs the verifier over every applicable context
 * in f; *verdicts_json_out is a JSON array of TheoremVerdict documents,
 * *all_hold_out is 1 iff no verdict fails (hypothesis-not-met does not
 * count as failing).
 */
mnat_status mnat_verify(const mnat_function* f, const char* theorem,
                        const mnat_verify_options* options,
                        int* all_hold_out, char** verdicts_json_out,
                        char** error_message);

/*
 * Catalog entries: "example-2-1", "example-2-2", "example-2-4" (uses k),
 * "example-4-1", "example-4-2", "example-4-1-neg".
 */
mnat_status mnat_gallery_build(const char* name, int64_t k,
                               mnat_function** out, char** error_message);
mnat_status mnat_gallery_names(char** json_out);

/*
 * Replays every embedded expectation of every catalog entry. *ok_out is
 * 1 iff all match; *report_json_out lists one line item per expectation.
 */
mnat_status mnat_gallery_audit(int* ok_out, char** report_json_out,
                               char** error_message);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MNAT_H */
