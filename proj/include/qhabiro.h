/*
 * qhabiro: exact Habiro-ring-valued quantum invariants of -1/b surgeries on
 * knots, behind a C interface.
 *
 * Conventions:
 *   - Every function returns a qh_status; QH_OK is 0. On any failure the
 *     thread-local message from qh_last_error() describes the problem.
 *   - Output objects are opaque handles freed with the matching *_free.
 *   - Structured values cross the boundary as JSON strings (documented in the
 *     README); strings returned through char** must be released with
 *     qh_string_free.
 */
#ifndef QHABIRO_H
#define QHABIRO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qh_status {
    QH_OK = 0,
    QH_ERR_INVALID_ARGUMENT = 1,
    QH_ERR_PARSE = 2,
    QH_ERR_NOT_DIVISIBLE = 3,
    QH_ERR_OFFSET_MISMATCH = 4,
    QH_ERR_LEVEL = 5,
    QH_ERR_EVEN_ORDER = 6,
    QH_ERR_ORACLE = 7,
    QH_ERR_REWRITE = 8,
    QH_ERR_IO = 9,
    QH_ERR_INTERNAL = 10
} qh_status;

typedef struct qh_oracle qh_oracle;
typedef struct qh_result qh_result;

const char* qh_version(void);
/* Thread-local message for the most recent failure in this thread. */
const char* qh_last_error(void);
void qh_string_free(char* s);

/* ---- knot oracles ---- */
qh_status qh_oracle_builtin(const char* name, qh_oracle** out);
qh_status qh_oracle_load(const char* path, qh_oracle** out);
/* Builtin name or file path, resolved like the CLI --knot argument. */
qh_status qh_oracle_resolve(const char* name_or_path, qh_oracle** out);
void qh_oracle_free(qh_oracle* o);
qh_status qh_oracle_name(const qh_oracle* o, char** out);
qh_status qh_oracle_digest(const qh_oracle* o, char** out);
/* -1 means unbounded. */
qh_status qh_oracle_max_index(const qh_oracle* o, long* out);
/* J_K(P'_k) as LaurentPoly JSON. */
qh_status qh_oracle_coeff_json(const qh_oracle* o, long k, char** out);
/* Forward sum J_K(V_n) (used by knot-import round trips). */
qh_status qh_oracle_colored_jones_json(const qh_oracle* o, long n, char** out);

/* ---- invariants and descendants ---- */
qh_status qh_invariant(const qh_oracle* o, long b, long level, qh_result** out);
qh_status qh_descendant(const qh_oracle* o, long b, const long* shifts, size_t nshifts,
                        long level, qh_result** out);
qh_status qh_colored_invariant(const qh_oracle* o, long b, long m, long level, qh_result** out);
/* phi(K^(m)) of the m-th parallel of the surgery core. */
qh_status qh_cable(const qh_oracle* o, long b, long m, long level, qh_result** out);

void qh_result_free(qh_result* r);
qh_status qh_result_project(const qh_result* r, long level, qh_result** out);
/* Result record {"knot","b","shifts","m","level","value"}; deterministic. */
qh_status qh_result_json(const qh_result* r, char** out);
qh_status qh_result_equal(const qh_result* a, const qh_result* b, int* out);
/* Evaluate at the canonical fourth root of an odd-order root of unity. */
qh_status qh_result_eval_root_json(const qh_result* r, long order, char** out);

/* Direct truncated summation in Z[zeta_N] (the (N-1)/3 cut-off). */
qh_status qh_wrt_at_root_json(const qh_oracle* o, long b, long m, long order, char** out);

/* Descendant decomposition of the V_m-colored invariant (b = 1 or 2). */
qh_status qh_decompose_json(const qh_oracle* o, long b, long m, long level, char** out);

/* ---- verification and rank experiments ---- */
/* params_json: {"level":25,"orders":[3,5,7,9,11],"range":10,"knot":"4_1"},
 * every key optional; pass NULL or "" for defaults. *passed set to 0/1. */
qh_status qh_verify_suite(const char* suite, const char* params_json, char** report_json,
                          int* passed);

/* family: "descendants" (grid {-param..param}^b) or "cables" (m <= param). */
qh_status qh_rank_report_json(const qh_oracle* o, long b, const char* family, long param,
                              long degree, long level_lo, long level_hi, char** out);

/* ---- experimental: multi-component diagonal surgery data ---- */
qh_status qh_multi_invariant_json(const char* path, const long* shifts, size_t nshifts,
                                  long level, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QHABIRO_H */
