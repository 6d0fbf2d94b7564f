/* C interface to the prodforge library.
 *
 * Every fallible call returns a pf_status; on failure pf_last_error() holds a
 * message for the calling thread. Strings returned through char** are owned by
 * the caller and released with pf_free(). Handles are released with their
 * matching *_destroy function; destroying NULL is a no-op.
 */
#ifndef PRODFORGE_H
#define PRODFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PRODFORGE_C_BUILD)
#    define PF_API __declspec(dllexport)
#  else
#    define PF_API __declspec(dllimport)
#  endif
#else
#  define PF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_INVALID_ARGUMENT = 1,
  PF_ERR_OUT_OF_RANGE = 2,
  PF_ERR_RESOURCE_LIMIT = 3,
  PF_ERR_UNSUPPORTED_PARAMETER = 4,
  PF_ERR_SINGULAR_WEIGHT = 5,
  PF_ERR_ILL_CONDITIONED = 6,
  PF_ERR_DOMAIN = 7,
  PF_ERR_UNSUPPORTED = 8,
  PF_ERR_UNKNOWN_IDENTITY = 9,
  PF_ERR_POLICY_REFUSAL = 10,
  PF_ERR_PARSE = 11,
  PF_ERR_INTERNAL = 12
} pf_status;

typedef enum pf_coeff_kind {
  PF_COEFF_A_LOG = 0,
  PF_COEFF_B_LOG = 1,
  PF_COEFF_A_S = 2,
  PF_COEFF_B_S = 3
} pf_coeff_kind;

typedef enum pf_factor_kind {
  PF_FACTOR_MINUS = 0,
  PF_FACTOR_PLUS = 1,
  PF_FACTOR_RATIO_ODD = 2,
  PF_FACTOR_COS_MINUS = 3,
  PF_FACTOR_COS_PLUS = 4,
  PF_FACTOR_COS_RATIO = 5
} pf_factor_kind;

typedef enum pf_eval_status {
  PF_EVAL_CONVERGED = 0,
  PF_EVAL_BOUNDARY_EXPERIMENTAL = 1,
  PF_EVAL_TAIL_DOMINATED = 2
} pf_eval_status;

typedef enum pf_format { PF_FORMAT_JSON = 0, PF_FORMAT_TSV = 1 } pf_format;

typedef enum pf_sum_kind { PF_SUM_A_S = 0, PF_SUM_B_S = 1, PF_SUM_B_LOG_RAW = 2 } pf_sum_kind;

typedef struct pf_context pf_context;
typedef struct pf_table pf_table;
typedef struct pf_series pf_series;
typedef struct pf_product pf_product;

typedef struct pf_eval_report {
  double value;
  double log_value;
  uint64_t K;
  double tail_bound; /* +inf at the boundary */
  int has_reference;
  double reference;
  double residual;
  int residual_relative;
  pf_eval_status status;
} pf_eval_report;

typedef struct pf_certification {
  uint64_t checked;
  uint64_t equal;
  uint64_t first_mismatch; /* 0 when certified */
  int certified;
} pf_certification;

typedef struct pf_identity_info {
  const char* id;
  const char* anchor;
  const char* description;
  const char* params; /* comma-separated names */
  int boundary;
  int erratum_corrected;
} pf_identity_info;

enum {
  PF_PARAM_X = 1u << 0,
  PF_PARAM_THETA = 1u << 1,
  PF_PARAM_S = 1u << 2,
  PF_PARAM_N = 1u << 3,
  PF_PARAM_J = 1u << 4,
  PF_PARAM_TERMS_N = 1u << 5
};

typedef struct pf_identity_params {
  unsigned set; /* PF_PARAM_* bits of the fields below that are present */
  double x;
  double theta;
  double s;
  uint64_t n;
  uint64_t J;
  uint64_t N; /* number of terms for partial sums */
  int as_printed;
} pf_identity_params;

typedef struct pf_profile_case {
  const char* id;
  pf_identity_params params;
  uint64_t K;
  double tol;
  int boundary;
} pf_profile_case;

typedef struct pf_transform_request {
  pf_factor_kind target;
  uint64_t K;
  int has_theta; /* cos targets over a power series in x */
  double theta;
  int has_x; /* cos targets over a series in cos(l theta) */
  double x;
  double eps_cos;    /* 0 selects 1e-6 */
  double growth_max; /* 0 selects 1e12 */
} pf_transform_request;

typedef struct pf_partial_sum_report {
  double s;
  uint64_t N;
  double sum;
  double tail_bound;
  double target;
  double diff;
} pf_partial_sum_report;

typedef struct pf_abel_row {
  double x;
  uint64_t K;
  double lhs;
  double target;
  double residual;
  double boundary_value;
  double boundary_target;
} pf_abel_row;

PF_API const char* pf_version(void);
PF_API const char* pf_status_name(pf_status status);
PF_API const char* pf_last_error(void);
PF_API void pf_free(char* str);

/* sieve_limit 0 selects PRODFORGE_SIEVE_LIMIT from the environment, else 10^7. */
PF_API pf_status pf_context_create(uint64_t sieve_limit, pf_context** out);
PF_API void pf_context_destroy(pf_context* ctx);
PF_API uint64_t pf_context_sieve_limit(const pf_context* ctx);

PF_API pf_status pf_mobius(const pf_context* ctx, uint64_t n, int* out);
/* *out = -1 when n is not square-free. */
PF_API pf_status pf_squarefree_order(const pf_context* ctx, uint64_t n, int* out);

/* s is ignored (pass 0) for the log kinds. */
PF_API pf_status pf_table_closed(const pf_context* ctx, pf_coeff_kind kind, uint64_t N, int64_t s, pf_table** out);
PF_API pf_status pf_table_solve(pf_coeff_kind kind, uint64_t N, int64_t s, pf_table** out);
PF_API void pf_table_destroy(pf_table* table);
PF_API uint64_t pf_table_limit(const pf_table* table);
PF_API pf_status pf_table_value(const pf_table* table, uint64_t n, char** out);
PF_API pf_status pf_table_serialize(const pf_table* table, pf_format format, char** out);

/* inject_mismatch_at = 0 disables the fault-injection hook. json may be NULL. */
PF_API pf_status pf_certify(const pf_context* ctx, pf_coeff_kind kind, uint64_t N, int64_t s,
                            uint64_t inject_mismatch_at, pf_certification* out, char** json);

PF_API pf_status pf_series_parse(const char* json, pf_series** out);
PF_API pf_status pf_series_load(const char* path, pf_series** out);
PF_API void pf_series_destroy(pf_series* series);

PF_API pf_status pf_transform(const pf_context* ctx, const pf_series* series, const pf_transform_request* request,
                              pf_product** out);
PF_API void pf_product_destroy(pf_product* product);
PF_API pf_status pf_product_serialize(const pf_product* product, pf_format format, char** out);
PF_API pf_status pf_product_evaluate(const pf_product* product, double x, int has_theta, double theta, uint64_t K,
                                     pf_eval_report* out);
PF_API pf_status pf_formal_log_check(const pf_product* product, const pf_series* series, uint64_t K, int* ok,
                                     uint64_t* first_mismatch);

PF_API size_t pf_identity_count(void);
PF_API pf_status pf_identity_at(size_t index, pf_identity_info* out);
/* K = 0 picks K from the tail bound. json (may be NULL) receives one report line. */
PF_API pf_status pf_identity_check(const pf_context* ctx, const char* id, const pf_identity_params* params,
                                   uint64_t K, double tol, pf_eval_report* out, int* pass, char** json);

PF_API pf_status pf_profile_count(const char* name, size_t* out);
PF_API pf_status pf_profile_case_at(const char* name, size_t index, pf_profile_case* out);

PF_API pf_status pf_stirling(const pf_context* ctx, uint64_t n, uint64_t J, uint64_t K, double tol,
                             pf_eval_report* out, char** json);
PF_API pf_status pf_partial_sum(const pf_context* ctx, pf_sum_kind kind, double s, uint64_t N, double tol,
                                pf_partial_sum_report* out, char** json);
PF_API pf_status pf_zeta_reference(double s, double* out);
/* rows must hold count entries; json (may be NULL) receives one line per row. */
PF_API pf_status pf_abel(const pf_context* ctx, const char* id, const double* xs, size_t count, int has_theta,
                         double theta, pf_abel_row* rows, char** json);

PF_API pf_status pf_report_json(const pf_eval_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PRODFORGE_H */
