/* wcpieces - combinatorics of G-stable pieces in wonderful compactifications.
 *
 * C interface over the C++ core: opaque handles, integer status codes,
 * results returned as JSON text.  Strings returned through out-parameters are
 * heap-allocated; release them with wcp_string_free.  Functions are
 * thread-safe; the per-thread message of the last error is available via
 * wcp_last_error.
 */
#ifndef WCPIECES_H
#define WCPIECES_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wcp_root_system wcp_root_system;

typedef enum {
  WCP_OK = 0,
  WCP_ERR_INVALID_ARG = 1,    /* unparseable input, precondition violation */
  WCP_ERR_BOUND_EXCEEDED = 2, /* enumeration refused, see wcp_last_error */
  WCP_ERR_UNCOVERED_CASE = 3, /* no transcribed case data for (type, i) */
  WCP_ERR_INTERNAL = 4
} wcp_status;

const char* wcp_version(void);

/* Message of the most recent error on this thread ("" when none). */
const char* wcp_last_error(void);

void wcp_string_free(char* s);

/* --- root systems ------------------------------------------------------- */

/* type: "A3", "B2", ..., "G2".  The handle is immutable and safe to share
 * across threads. */
wcp_status wcp_root_system_create(const char* type, wcp_root_system** out);
void wcp_root_system_destroy(wcp_root_system* rs);

int wcp_rank(const wcp_root_system* rs);
int wcp_positive_root_count(const wcp_root_system* rs);
/* Entry <alpha^vee_i, alpha_j> of the Cartan matrix, 1-based. */
int wcp_cartan_entry(const wcp_root_system* rs, int i, int j);

/* --- pieces and counts --------------------------------------------------- */

/* JSON array of {"J": [...], "w": "<word>"}; with_chain adds "terminal" and
 * "chain".  bound limits every enumeration (0 keeps the default 10^6). */
wcp_status wcp_pieces_json(const wcp_root_system* rs, int with_chain, uint64_t bound, char** out);

/* Chain of one label: J as "1,3" ("-" empty), w as "2 1 3 2". */
wcp_status wcp_beta_chain_json(const wcp_root_system* rs, const char* J, const char* w,
                               char** out);

/* {"coeffs": [...], "str": "..."} */
wcp_status wcp_count_group_json(const wcp_root_system* rs, uint64_t bound, char** out);
wcp_status wcp_count_boundary_json(const wcp_root_system* rs, uint64_t bound, char** out);
wcp_status wcp_count_piece_json(const wcp_root_system* rs, const char* J, const char* w,
                                uint64_t bound, char** out);

/* JSON array of boundary piece labels. */
wcp_status wcp_boundary_json(const wcp_root_system* rs, uint64_t bound, char** out);

/* --- closure ------------------------------------------------------------ */

/* Labels "J|x|w", e.g. "1|2|-": subset, x-word, w-word, "-" for empty.
 * Result: {"contains": bool, "witness": {"u": "...", "v": "..."}?}. */
wcp_status wcp_closure_contains_json(const wcp_root_system* rs, const char* a, const char* b,
                                     uint64_t bound, char** out);

/* Closure of the Coxeter piece (I-{i}, w). */
wcp_status wcp_coxeter_piece_closure_json(const wcp_root_system* rs, int i, const char* w,
                                          uint64_t bound, char** out);

/* --- Coxeter machinery --------------------------------------------------- */

wcp_status wcp_coxeter_list_json(const wcp_root_system* rs, char** out);
/* {"layers": [[...]], "wJ": "<word>"} for J = I - {i}. */
wcp_status wcp_coxeter_wj_json(const wcp_root_system* rs, int i, char** out);
/* Word over I-{i} conjugating c to c2 (space-separated letters). */
wcp_status wcp_conjugating_word_json(const wcp_root_system* rs, const char* c, const char* c2,
                                     int i, char** out);
/* Report replaying the layer chain of (I-{i}, w^J) against its closed forms. */
wcp_status wcp_check_layer_chain_json(const wcp_root_system* rs, int i, char** out);

/* --- transcribed case data ---------------------------------------------- */

/* The structured-text fixture of the case (type, i). */
wcp_status wcp_case_fixture(const wcp_root_system* rs, int i, char** out);
/* Report of checks (a)-(e) for the case (type, i). */
wcp_status wcp_case_report_json(const wcp_root_system* rs, int i, char** out);

/* --- verification suites -------------------------------------------------- */

/* suite: counts | chains | coxeter | lemma32 | section3 | all.
 * type: "F4" or NULL for the default roster (filtered by max_rank).
 * Writes a JSON array of reports and sets *all_pass to 0/1. */
wcp_status wcp_verify_json(const char* suite, const char* type, int max_rank, uint64_t bound,
                           int jobs, char** out, int* all_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WCPIECES_H */
