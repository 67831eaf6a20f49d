#ifndef WAP_WAP_H
#define WAP_WAP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wap_status {
  WAP_OK = 0,
  WAP_ERR_PARSE = 1,
  WAP_ERR_INVALID_ARGUMENT = 2,
  WAP_ERR_SIZE_LIMIT = 3,
  WAP_ERR_INTERNAL = 4, /* a guaranteed identity failed; always a bug */
  WAP_ERR_IO = 5,
  WAP_ERR_UNKNOWN = 6
} wap_status;

typedef enum wap_method { WAP_METHOD_WRONSKIAN = 0, WAP_METHOD_FORMULA = 1, WAP_METHOD_BOTH = 2 } wap_method;

/* Message for the most recent failure on the calling thread; "" after success. */
const char* wap_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
void wap_string_free(char* s);

/* Partitions. Text form "8,8,6,6,2,2,1"; "" is the empty partition. */
typedef struct wap_partition wap_partition;
wap_status wap_partition_parse(const char* text, wap_partition** out);
void wap_partition_free(wap_partition* lambda);
wap_status wap_partition_to_string(const wap_partition* lambda, char** out);
int64_t wap_partition_size(const wap_partition* lambda);
wap_status wap_partition_degree_vector(const wap_partition* lambda, char** out);
/* Maya diagram of the partition as a row of filled/empty boxes. */
wap_status wap_partition_maya(const wap_partition* lambda, char** out);

/* p-quotients. Text form "1,1;4;2,1"; empty fields are empty components. */
typedef struct wap_quotient wap_quotient;
wap_status wap_quotient_parse(const char* text, wap_quotient** out);
void wap_quotient_free(wap_quotient* mu);
wap_status wap_quotient_to_string(const wap_quotient* mu, char** out);
size_t wap_quotient_p(const wap_quotient* mu);
int64_t wap_quotient_size(const wap_quotient* mu);

/* Characteristic vectors. Text form "2,-1,-1"; entries sum to zero. */
typedef struct wap_charvec wap_charvec;
wap_status wap_charvec_parse(const char* text, wap_charvec** out);
void wap_charvec_free(wap_charvec* c);
wap_status wap_charvec_to_string(const wap_charvec* c, char** out);
size_t wap_charvec_p(const wap_charvec* c);

typedef struct wap_decomposition wap_decomposition;
wap_status wap_decompose(const wap_partition* lambda, size_t p, wap_decomposition** out);
void wap_decomposition_free(wap_decomposition* d);
/* The getters below return new handles owned by the caller. */
wap_status wap_decomposition_quotient(const wap_decomposition* d, wap_quotient** out);
wap_status wap_decomposition_charvec(const wap_decomposition* d, wap_charvec** out);
wap_status wap_decomposition_core(const wap_decomposition* d, wap_partition** out);
int64_t wap_decomposition_core_size_formula(const wap_decomposition* d);
int64_t wap_decomposition_core_size_strips(const wap_decomposition* d);
int wap_decomposition_ht_parity(const wap_decomposition* d);
/* Component Maya diagrams, one per line. */
wap_status wap_decomposition_explain(const wap_decomposition* d, char** out);

wap_status wap_compose(const wap_quotient* mu, const wap_charvec* c, wap_partition** out);
wap_status wap_core_from_charvec(const wap_charvec* c, wap_partition** out);
int64_t wap_core_size_from_charvec(const wap_charvec* c);

/* Integer polynomials. */
typedef struct wap_poly wap_poly;
void wap_poly_free(wap_poly* poly);
int64_t wap_poly_degree(const wap_poly* poly);
wap_status wap_poly_coeff(const wap_poly* poly, size_t d, char** out);
/* JSON array of decimal strings, constant term first. */
wap_status wap_poly_json(const wap_poly* poly, char** out);
wap_status wap_poly_human(const wap_poly* poly, char** out);

/* q_lambda from the Wronskian, refused above max_degree (0 selects 400). */
wap_status wap_q_lambda(const wap_partition* lambda, size_t p, size_t max_degree, wap_poly** out);
/* R_lambda with q_lambda(x) = x^core_size R_lambda(x^p). */
wap_status wap_r_lambda(const wap_partition* lambda, size_t p, size_t max_degree, wap_poly** out);
/* R_lambda for lambda = compose(mu, c) by the chosen method; BOTH fails with
   WAP_ERR_INTERNAL when the two disagree. */
wap_status wap_r_by_method(const wap_quotient* mu, const wap_charvec* c, wap_method method, size_t max_degree,
                           wap_poly** out);

/* alphas[i] = prod_{j != i} (a_i - a_j); alphas has room for n entries. */
wap_status wap_attractors(const double* a, size_t n, double* alphas);
/* L_0..L_|mu| into out (room for |mu|+1 entries). */
wap_status wap_limit_coefficients(const wap_quotient* mu, const double* a, size_t n, double* out);
wap_status wap_limit_polynomial_exact(const wap_quotient* mu, const int64_t* a, size_t n, wap_poly** out);

/* Convergence sweeps along c(k) = a k + b. */
typedef struct wap_report wap_report;
typedef struct wap_sweep_options {
  wap_method method;
  double root_tol;   /* 0 selects 1e-9 */
  size_t max_degree; /* 0 selects 400 */
} wap_sweep_options;

wap_status wap_sweep(const wap_quotient* mu, const int64_t* a, const int64_t* b, size_t p, const int64_t* k,
                     size_t k_count, const wap_sweep_options* options, wap_report** out);
void wap_report_free(wap_report* report);
size_t wap_report_rows(const wap_report* report);
int64_t wap_report_row_k(const wap_report* report, size_t row);
double wap_report_row_sup_error(const wap_report* report, size_t row);
double wap_report_row_max_root_distance(const wap_report* report, size_t row);
int wap_report_row_counts_match(const wap_report* report, size_t row);
wap_status wap_report_text(const wap_report* report, char** out);
wap_status wap_report_json(const wap_report* report, char** out);
wap_status wap_report_coefficients_csv(const wap_report* report, char** out);
wap_status wap_report_roots_csv(const wap_report* report, char** out);
/* Writes prefix_coefficients.csv, prefix_roots.csv and prefix.json. */
wap_status wap_report_write(const wap_report* report, const char* prefix);

/* Writes one status line per check; *passed is 1 when all checks pass. */
wap_status wap_selftest(char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
