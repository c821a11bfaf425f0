/*
 * deltaric - curvature invariants of totally real submanifolds of complex
 * space forms: Chen's Ricci-type delta invariant, the two Einstein
 * inequalities, their equality certificates, and the non-existence
 * corollaries.
 *
 * C interface of the shared library. Objects are opaque handles; every
 * fallible call returns a dric_status, with a thread-local diagnostic
 * message available through dric_last_error(). Plain getters on report
 * handles assume a valid handle and return zeros on NULL.
 */

#ifndef DELTARIC_H
#define DELTARIC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DRIC_API __declspec(dllexport)
#else
#define DRIC_API __attribute__((visibility("default")))
#endif

typedef enum dric_status {
    DRIC_OK = 0,
    DRIC_ERR_DOMAIN = 1,     /* argument outside an operation's domain */
    DRIC_ERR_STRUCTURE = 2,  /* dimension or shape mismatch */
    DRIC_ERR_CONSTRAINT = 3, /* generator constraint violated */
    DRIC_ERR_PARSE = 4,      /* malformed document */
    DRIC_ERR_INVARIANT = 5,  /* data violates a stored invariant */
    DRIC_ERR_IO = 6,         /* filesystem failure */
    DRIC_ERR_NULL_ARG = 7,   /* required pointer was NULL */
    DRIC_ERR_INTERNAL = 8
} dric_status;

typedef enum dric_class {
    DRIC_CLASS_TOTALLY_GEODESIC = 0,
    DRIC_CLASS_MINIMAL = 1,
    DRIC_CLASS_PSEUDO_UMBILICAL = 2,
    DRIC_CLASS_GENERIC = 3
} dric_class;

typedef enum dric_equality_case {
    DRIC_CASE_NONE = -1,
    DRIC_CASE_T1_MINIMAL = 0,
    DRIC_CASE_T1_PSEUDO_UMBILICAL = 1,
    DRIC_CASE_T2_TOTALLY_GEODESIC = 2
} dric_equality_case;

typedef struct dric_instance dric_instance;
typedef struct dric_config dric_config;
typedef struct dric_delta_report dric_delta_report;
typedef struct dric_theorem_report dric_theorem_report;

/* Message describing the most recent failure on this thread. */
DRIC_API const char* dric_last_error(void);

/* ---- configuration -----------------------------------------------------
 * Keys: tol_sym, tol_tg, tol_min, tol_pu, tol_einstein, tol_eq, tol_cert,
 * restarts, max_iterations, min_decrease, seed, oracle_samples.
 * A NULL dric_config* passed to any operation means defaults. */
DRIC_API dric_config* dric_config_new(void);
DRIC_API void dric_config_free(dric_config* cfg);
DRIC_API dric_status dric_config_set(dric_config* cfg, const char* key, double value);
DRIC_API dric_status dric_config_get(const dric_config* cfg, const char* key, double* out);

/* ---- instances ----------------------------------------------------------
 * An instance holds (n, m, c) and 2m-n symmetric n x n matrices indexed by
 * the 1-based normal index r: non-J normals first (r = 1..m-n), then the
 * J-normals Je_1..Je_m. Matrices are exchanged in row-major order. */
DRIC_API dric_status dric_instance_new(int n, int m, double c, dric_instance** out);
DRIC_API dric_status dric_instance_totally_geodesic(int n, int m, double c, dric_instance** out);
DRIC_API dric_status dric_instance_umbilical_non_j(int n, int m, double c, double lambda,
                                                   dric_instance** out);
DRIC_API dric_status dric_instance_random_totally_real(int n, int m, double c, double scale,
                                                       uint64_t seed, dric_instance** out);
/* blocks: num_directions * k consecutive 2x2 blocks, each row-major
 * (b00,b01,b10,b11); direction d supplies the blocks of normal index
 * normal_indices[d]. Every block must be symmetric with zero trace. */
DRIC_API dric_status dric_instance_block_minimal(int k, int m, double c, const int* normal_indices,
                                                 int num_directions, const double* blocks,
                                                 dric_instance** out);
DRIC_API dric_status dric_instance_parse(const char* text, dric_instance** out);
DRIC_API dric_status dric_instance_load(const char* path, dric_instance** out);
DRIC_API dric_status dric_instance_serialize(const dric_instance* inst, char** out_text);
DRIC_API dric_status dric_instance_save(const dric_instance* inst, const char* path);
DRIC_API dric_status dric_instance_set_h(dric_instance* inst, int r, const double* row_major);
DRIC_API dric_status dric_instance_get_h(const dric_instance* inst, int r, double* out_row_major);
DRIC_API dric_status dric_instance_validate(const dric_instance* inst, const dric_config* cfg);
DRIC_API void dric_instance_free(dric_instance* inst);
DRIC_API void dric_string_free(char* text);
DRIC_API int dric_instance_n(const dric_instance* inst);
DRIC_API int dric_instance_m(const dric_instance* inst);
DRIC_API double dric_instance_c(const dric_instance* inst);
DRIC_API int dric_instance_num_normals(const dric_instance* inst);

/* ---- pointwise invariants ---------------------------------------------- */
typedef struct dric_invariants {
    double tau;                   /* scalar curvature */
    double H;                     /* mean curvature norm */
    double einstein_defect;       /* Ricci eigenvalue spread */
    double quasi_einstein_defect; /* spread after dropping one eigenvalue */
    int classification;           /* dric_class */
} dric_invariants;

DRIC_API dric_status dric_compute_invariants(const dric_instance* inst, const dric_config* cfg,
                                             dric_invariants* out);
DRIC_API dric_status dric_ricci_matrix(const dric_instance* inst, double* out_row_major);
DRIC_API dric_status dric_ricci_eigenvalues(const dric_instance* inst, double* out_ascending);

/* ---- delta invariant ----------------------------------------------------
 * delta_q_ric = sup Ric - (2q/n) K_q_inf for 1 <= q <= n/2. */
DRIC_API dric_status dric_delta_q_ric(const dric_instance* inst, int q, const dric_config* cfg,
                                      dric_delta_report** out);
DRIC_API void dric_delta_report_free(dric_delta_report* rep);
DRIC_API int dric_delta_report_q(const dric_delta_report* rep);
DRIC_API double dric_delta_report_sup_ric(const dric_delta_report* rep);
DRIC_API double dric_delta_report_k_q_inf(const dric_delta_report* rep);
DRIC_API double dric_delta_report_value(const dric_delta_report* rep);
DRIC_API int dric_delta_report_restarts_used(const dric_delta_report* rep);
DRIC_API int dric_delta_report_converged(const dric_delta_report* rep);
DRIC_API int dric_delta_report_has_oracle_gap(const dric_delta_report* rep);
DRIC_API double dric_delta_report_oracle_gap(const dric_delta_report* rep);
/* out: n x 2q row-major; plane l spans columns 2l-1, 2l (1-based). */
DRIC_API dric_status dric_delta_report_argmin_frame(const dric_delta_report* rep, double* out);

/* ---- theorem checks ------------------------------------------------------
 * Theorem 1: delta_k <= 2(k-1)(c+H^2) on n = 2k, k >= 2.
 * Theorem 2: delta_q <= (n-1-2q/n)c + n(n-q-1)/(n-q) H^2 for q < n/2.
 * Both sides are always computed; the Einstein hypothesis is only flagged. */
DRIC_API dric_status dric_check_theorem1(const dric_instance* inst, const dric_config* cfg,
                                         dric_theorem_report** out);
DRIC_API dric_status dric_check_theorem2(const dric_instance* inst, int q, const dric_config* cfg,
                                         dric_theorem_report** out);
DRIC_API void dric_theorem_report_free(dric_theorem_report* rep);
DRIC_API int dric_theorem_report_theorem(const dric_theorem_report* rep);
DRIC_API int dric_theorem_report_q(const dric_theorem_report* rep);
DRIC_API int dric_theorem_report_hypothesis_ok(const dric_theorem_report* rep);
DRIC_API double dric_theorem_report_lhs(const dric_theorem_report* rep);
DRIC_API double dric_theorem_report_rhs(const dric_theorem_report* rep);
DRIC_API double dric_theorem_report_slack(const dric_theorem_report* rep);
DRIC_API int dric_theorem_report_equality(const dric_theorem_report* rep);
DRIC_API double dric_theorem_report_einstein_defect(const dric_theorem_report* rep);
DRIC_API double dric_theorem_report_mean_curvature(const dric_theorem_report* rep);
DRIC_API double dric_theorem_report_sup_ric(const dric_theorem_report* rep);
DRIC_API double dric_theorem_report_k_q_inf(const dric_theorem_report* rep);
DRIC_API int dric_theorem_report_converged(const dric_theorem_report* rep);

/* Certificate accessors; dric_theorem_report_case returns DRIC_CASE_NONE
 * when no equality was detected. */
DRIC_API int dric_theorem_report_case(const dric_theorem_report* rep);
DRIC_API double dric_theorem_report_cert_residual(const dric_theorem_report* rep);
DRIC_API int dric_theorem_report_cert_num_normals(const dric_theorem_report* rep);
DRIC_API int dric_theorem_report_cert_num_blocks(const dric_theorem_report* rep);
DRIC_API dric_status dric_theorem_report_cert_block_traces(const dric_theorem_report* rep,
                                                           int normal_idx, double* out_traces);
DRIC_API dric_status dric_theorem_report_cert_mu(const dric_theorem_report* rep, double* out_mu);
DRIC_API dric_status dric_theorem_report_cert_frame(const dric_theorem_report* rep,
                                                    double* out_row_major);

/* ---- corollaries --------------------------------------------------------- */
/* Requires inst->c == 0; *out_certified = 1 when non-Einstein is certified. */
DRIC_API dric_status dric_corollary1(const dric_instance* inst, int q, const dric_config* cfg,
                                     int* out_certified);
/* Intrinsic check against a target ambient parameter c_target. */
DRIC_API dric_status dric_corollary2(const dric_instance* inst, int q, double c_target,
                                     const dric_config* cfg, int* out_certified);
/* Same, fed with a raw curvature tensor (n^4 row-major components, validated). */
DRIC_API dric_status dric_corollary2_tensor(const double* tensor, int n, int q, double c_target,
                                            const dric_config* cfg, int* out_certified);

/* ---- Cauchy step lemmas --------------------------------------------------- */
DRIC_API dric_status dric_step_inequality_33(const double* pair_sums, int k, double* out_lhs,
                                             double* out_rhs, int* out_holds);
DRIC_API dric_status dric_step_inequality_46(const double* pair_sums, int q, const double* singles,
                                             int num_singles, double* out_lhs, double* out_rhs,
                                             int* out_holds);
/* Seed-deterministic random trials of one lemma (33 or 46). out_lhs/out_rhs,
 * when non-NULL, receive `trials` values each. */
DRIC_API dric_status dric_fuzz_step_lemma(int lemma, int64_t trials, uint64_t seed,
                                          double* out_lhs, double* out_rhs,
                                          int64_t* out_violations, double* out_min_slack);

#ifdef __cplusplus
}
#endif

#endif /* DELTARIC_H */
