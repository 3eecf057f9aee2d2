/* C API for the qfid library: opaque state handles, integer status codes,
 * JSON/CSV string payloads. Strings returned through out-parameters are
 * heap-allocated and must be released with qfid_free_string(). */
#ifndef QFID_QFID_H
#define QFID_QFID_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qfid_status {
  QFID_OK = 0,
  QFID_ERR_PARSE = 1,
  QFID_ERR_IO = 2,
  QFID_ERR_DIM_MISMATCH = 3,
  QFID_ERR_NOT_HERMITIAN = 4,
  QFID_ERR_NOT_PSD = 5,
  QFID_ERR_INVALID_ARG = 6,
  QFID_ERR_ANCILLA = 7,
  QFID_ERR_INVALID_POVM = 8,
  QFID_ERR_INVALID_CHANNEL = 9,
  QFID_ERR_INVALID_TRUNCATION = 10,
  QFID_ERR_NO_CONVERGENCE = 11,
  QFID_ERR_INTERNAL = 99
} qfid_status;

/* Opaque density-matrix handle. */
typedef struct qfid_state qfid_state;

/* Thread-local message for the most recent failing call. */
const char* qfid_last_error(void);

void qfid_free_string(char* s);

/* --- states ------------------------------------------------------------- */

/* JSON schema: {"dim": n, "entries": [[[re,im], ...], ...]} (row-major). */
qfid_status qfid_state_parse(const char* json, qfid_state** out);
qfid_status qfid_state_read(const char* path, qfid_state** out);
void qfid_state_free(qfid_state* s);
int qfid_state_dim(const qfid_state* s);

/* --- fidelity and distances --------------------------------------------- */

qfid_status qfid_fidelity(const qfid_state* rho, const qfid_state* sigma, double* out);
qfid_status qfid_bures_angle(const qfid_state* rho, const qfid_state* sigma, double* out);
qfid_status qfid_trace_distance(const qfid_state* rho, const qfid_state* sigma, double* out);

/* Full report: fidelity, angle, trace distance, bound flags. */
qfid_status qfid_bounds_report(const qfid_state* rho, const qfid_state* sigma, char** json_out);

/* --- measurements -------------------------------------------------------- */

/* Fidelity-attaining measurement plus the classical fidelity it induces:
 * {"povm": {...}, "classical_fidelity": x, "quantum_fidelity": x}. */
qfid_status qfid_optimal_povm(const qfid_state* rho, const qfid_state* sigma, char** json_out);

/* Induced distributions and classical figures for a caller-supplied POVM
 * ({"dim": n, "effects": [...]}): {"p": [...], "q": [...],
 * "classical_fidelity": x, "classical_trace_distance": x}. */
qfid_status qfid_povm_eval(const qfid_state* rho, const qfid_state* sigma,
                           const char* povm_json, char** json_out);

/* --- channels ------------------------------------------------------------ */

/* channel_spec: "identity:d", "dephasing:p[:d]", "depolarizing:p[:d]",
 * "amplitude-damping:g", or "@path.json" with {"dim": n, "kraus": [...]}. */
qfid_status qfid_entanglement_fidelity(const qfid_state* rho, const char* channel_spec,
                                       double* out);

/* --- truncation sweeps --------------------------------------------------- */

/* Generator specs: "geometric:l", "power:s", "custom:w0,w1,...", each with an
 * optional ":rot=<seed>" suffix. CSV columns:
 * trunc_dim,alpha_n,beta_n,fidelity_n,gap_to_limit,povm_gap. */
qfid_status qfid_converge(const char* gen1, const char* gen2, const int* dims, int ndims,
                          int cap_dim, char** csv_out);

qfid_status qfid_epsilon_schedule(const char* gen1, const char* gen2, double eps, int cap_dim,
                                  int* dim_out);

/* --- property suites ------------------------------------------------------ */

/* Comma-separated list of registered suites (static storage, do not free). */
const char* qfid_suite_list(void);

/* Runs one suite ("all" for every suite) and reports JSON results; violations
 * receives the total failure count. trials <= 0 selects suite defaults. */
qfid_status qfid_proptest(const char* suite, uint64_t seed, int trials, char** json_out,
                          int* violations);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QFID_QFID_H */
