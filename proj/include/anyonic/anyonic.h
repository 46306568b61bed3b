/*
 * anyonic -- bipartite anyonic density operators: fusion-tree bases,
 * quantum-trace entropies, charge-line severing, max-entropy inference,
 * topological correlation and anyonic charge entanglement.
 *
 * C interface of the shared library. Objects are opaque handles created and
 * destroyed here; every fallible call returns an anyonic_status and reports
 * detail through anyonic_last_error() (thread local). Strings returned via
 * char** are heap copies owned by the caller; release them with
 * anyonic_string_free().
 */
#ifndef ANYONIC_H
#define ANYONIC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct anyonic_model anyonic_model;
typedef struct anyonic_state anyonic_state;
typedef struct anyonic_record anyonic_record;

enum anyonic_status {
  ANYONIC_OK = 0,
  ANYONIC_ERR_ARGUMENT = 1,       /* bad handle, index, label or parameter */
  ANYONIC_ERR_PARSE = 2,          /* malformed document or file */
  ANYONIC_ERR_MODEL_INVALID = 3,  /* model data violates an invariant */
  ANYONIC_ERR_STATE_INVALID = 4,  /* operator violates a state invariant */
  ANYONIC_ERR_NO_CONVERGENCE = 5, /* iterative solver hit its cap */
  ANYONIC_ERR_INTERNAL = 6
};

const char* anyonic_version(void);
const char* anyonic_status_name(int status);
/* Message of the most recent failure on the calling thread. */
const char* anyonic_last_error(void);
void anyonic_string_free(char* s);

/* ---- models ----------------------------------------------------------- */

/* name: "fibonacci", "ising" or "z<k>" (e.g. "z2"). */
int anyonic_model_builtin(const char* name, anyonic_model** out);
int anyonic_model_load(const char* path, anyonic_model** out);
int anyonic_model_parse(const char* json_text, anyonic_model** out);
void anyonic_model_free(anyonic_model* model);

const char* anyonic_model_name(const anyonic_model* model);
int anyonic_model_charge_count(const anyonic_model* model);
/* NULL on bad index. Vacuum is charge 0, labeled "1". */
const char* anyonic_model_charge_label(const anyonic_model* model, int charge);
int anyonic_model_charge_index(const anyonic_model* model, const char* label, int* out);
/* Fusion multiplicity N_ab^c (0 or 1). */
int anyonic_model_fusion(const anyonic_model* model, int a, int b, int c, int* out);
int anyonic_model_qdim(const anyonic_model* model, int charge, double* out);
int anyonic_model_total_qdim(const anyonic_model* model, double* out);
/* Two-vertex F-move element [F^{ab}_{ap bp}]_{cg}; 0 when inadmissible. */
int anyonic_model_f_symbol(const anyonic_model* model, int a, int b, int ap, int bp, int c,
                           int g, double* re, double* im);
/* Consistency report (pentagon, unitarity, quantum dimensions). `pass`,
 * `max_residual` and `report` are each optional. */
int anyonic_model_verify(const anyonic_model* model, double tol, int* pass,
                         double* max_residual, char** report);

/* ---- states ----------------------------------------------------------- */

/* `model` may be NULL when the document carries its own model reference. */
int anyonic_state_load(const char* path, const anyonic_model* model, anyonic_state** out);
int anyonic_state_parse(const char* json_text, const anyonic_model* model, anyonic_state** out);
int anyonic_state_dump(const anyonic_state* state, char** json_out);
void anyonic_state_free(anyonic_state* state);

/* Borrowed reference to the state's model; owned by the state handle. */
const anyonic_model* anyonic_state_model(const anyonic_state* state);

/* leaves are comma-separated charge labels, e.g. "τ,τ". */
int anyonic_state_maximally_mixed(const anyonic_model* model, const char* leaves_a,
                                  const char* leaves_b, anyonic_state** out);
/* Fibonacci two-pair examples. */
int anyonic_state_fib_pure(double q, anyonic_state** out);
int anyonic_state_fib4(const double p[5], anyonic_state** out);

/* Diagnostic dump of the state's bipartite basis: one line per populated
 * overall-charge block, elements labeled "A[...]⊗B[...]@c" joined by '|'.
 * The label format is stable across versions. */
int anyonic_state_basis_labels(const anyonic_state* state, char** out);

int anyonic_state_quantum_trace(const anyonic_state* state, double* out);
int anyonic_state_entropy(const anyonic_state* state, double* out);
int anyonic_state_topo(const anyonic_state* state, double* out);
int anyonic_state_ace(const anyonic_state* state, double* out);
int anyonic_state_is_maximal_rank(const anyonic_state* state, double tol, int* out);
int anyonic_state_mix(const anyonic_state* state, double p, anyonic_state** out);
/* Inferred (severed and re-embedded) state; carries no topological
 * correlation of its own. */
int anyonic_state_infer(const anyonic_state* state, anyonic_state** out);
/* Correlation along (1-p) rho + p rho_mixed for strictly decreasing p;
 * `values` receives `count` entries, `extrapolated` the tail extrapolation.
 */
int anyonic_state_topo_limit(const anyonic_state* state, const double* ps, int count,
                             double* values, double* extrapolated);

/* ---- joint measurement records ---------------------------------------- */

int anyonic_state_measure(const anyonic_state* state, anyonic_record** out);
int anyonic_record_count(const anyonic_record* record);
int anyonic_record_entry(const anyonic_record* record, int index, int* a, int* i, int* b,
                         int* j, double* value);
void anyonic_record_free(anyonic_record* record);

/* ---- reference formulas ------------------------------------------------ */

int anyonic_binary_entropy(double q, double* out);
int anyonic_fib_pure_topo(double q, double* out);
int anyonic_fib4_topo(const double p[5], double* out);

#ifdef __cplusplus
}
#endif

#endif /* ANYONIC_H */
