/* C interface to the q-series identity verifier.
 *
 * Every entry point either returns QPART_OK / QPART_MISMATCH together with a
 * result handle, or an error status with *out left null and a message
 * available from qpart_last_error(). Result handles own their text and JSON
 * renderings and must be released with qpart_result_free().
 */
#ifndef QPART_H
#define QPART_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpart_status {
    QPART_OK = 0,        /* computed, all checks passed */
    QPART_MISMATCH = 1,  /* computed, a mathematical check failed */
    QPART_ERR_USAGE = 2, /* bad argument */
    QPART_ERR_OVERFLOW = 3,
    QPART_ERR_INTERNAL = 4
} qpart_status;

typedef struct qpart_result qpart_result;

/* case_id: "i".."vi", "all", "mock9" or "rank". order >= 0, capped by
 * qpart_max_order(). */
qpart_status qpart_verify(const char* case_id, int order, qpart_result** out);

/* name: "franklin", "sigma-odd", "paths" or "sigma-even". max_n in [0, 60].
 * seed selects the illustrative orbit included in the text report. */
qpart_status qpart_involution(const char* name, int max_n, unsigned seed, qpart_result** out);

/* parts: non-increasing positive integers. style: "odd" or "even". */
qpart_status qpart_diagram(const int* parts, int n_parts, const char* style, qpart_result** out);

/* Rank catalog for partitions of n (n >= 1). */
qpart_status qpart_catalog(int n, qpart_result** out);

/* family: "all", "distinct", "no-repeated-odd", "no-repeated-even",
 * "one-repeated", "distinct-containing-<d>", "only-repeat-<d>",
 * "complete-up-to-<n>". */
qpart_status qpart_enumerate(int n, const char* family, qpart_result** out);

/* Views into the result; valid until qpart_result_free. */
const char* qpart_result_text(const qpart_result* r);
const char* qpart_result_json(const qpart_result* r);
int qpart_result_passed(const qpart_result* r);
void qpart_result_free(qpart_result* r);

/* Thread-local message for the most recent failing call. */
const char* qpart_last_error(void);

/* Order guard (default 200; override with the QPART_MAX_ORDER env var). */
int qpart_max_order(void);

#ifdef __cplusplus
}
#endif

#endif /* QPART_H */
