/* C interface to the qcmine graph-mining library.
 *
 * All functions return qcm_status; QCM_OK means success. On failure a
 * human-readable message is available from qcm_last_error() until the next
 * call on the same thread. Strings produced through char** out-parameters
 * are owned by the caller and must be released with qcm_string_free().
 * A qcm_graph handle may be used from one thread at a time.
 */
#ifndef QCMINE_H
#define QCMINE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QCMINE_API __declspec(dllexport)
#else
#define QCMINE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qcm_graph qcm_graph;

typedef enum qcm_status {
  QCM_OK = 0,
  QCM_ERR_INVALID_ARGUMENT = 1,
  QCM_ERR_IO = 2,
  QCM_ERR_PARSE = 3,
  QCM_ERR_DOMAIN = 4,
  QCM_ERR_INTERNAL = 5
} qcm_status;

typedef struct qcm_parse_options {
  int symmetrize;      /* nonzero: arcs become undirected edges (default) */
  int drop_self_loops; /* nonzero: drop and count self-loops (default) */
} qcm_parse_options;

QCMINE_API const char* qcm_version(void);
QCMINE_API const char* qcm_last_error(void);
QCMINE_API void qcm_string_free(char* s);

/* opts may be NULL for the defaults {1, 1}. */
QCMINE_API qcm_status qcm_graph_load_path(const char* path, const qcm_parse_options* opts,
                                          qcm_graph** out);
QCMINE_API qcm_status qcm_graph_load_buffer(const char* data, size_t size,
                                            const qcm_parse_options* opts, qcm_graph** out);
QCMINE_API void qcm_graph_free(qcm_graph* g);

QCMINE_API uint64_t qcm_graph_vertices(const qcm_graph* g);
QCMINE_API uint64_t qcm_graph_edges(const qcm_graph* g);

/* {n, m, self_loops_dropped, duplicates_dropped, d_max, d_min} */
QCMINE_API qcm_status qcm_ingest_summary_json(const qcm_graph* g, char** out);

/* Graph summary: n, m, degree extremes, triangle and wedge totals,
 * clustering coefficients, fitted power-law exponent. */
QCMINE_API qcm_status qcm_stats_json(qcm_graph* g, int threads, char** out);

/* Neighborhood density profile as CSV plus a JSON sidecar
 * {d_max, global_cc, largest_ego_clique_size}. Either output pointer may
 * be NULL when that artifact is not wanted. */
QCMINE_API qcm_status qcm_ndp_csv(qcm_graph* g, int threads, char** csv_out,
                                  char** summary_json_out);

/* Tail-bound sweep "alpha,markov_upper,lower_tail" for a given global
 * clustering coefficient. alphas may be NULL to use the default grid. */
QCMINE_API qcm_status qcm_bounds_alpha_csv(double cg, const double* alphas, size_t n_alphas,
                                           char** out);

/* Existence-guarantee sweep "beta,eta,size_guarantee,density_guarantee".
 * betas may be NULL to use a 20-point grid from 0.05 (clamped into the
 * admissible interval) up to beta_max. */
QCMINE_API qcm_status qcm_bounds_beta_csv(double cg, uint32_t d_min, uint32_t d_max,
                                          const double* betas, size_t n_betas, char** out);

/* Per-degree guarantee vs. measured best neighborhood density, computed
 * from the graph itself. */
QCMINE_API qcm_status qcm_bounds_profile_csv(qcm_graph* g, double beta_min, int threads,
                                             char** out);

/* Measured inputs for the bound sweeps. Any output pointer may be NULL. */
QCMINE_API qcm_status qcm_measured_bound_inputs(qcm_graph* g, int threads, double* cg,
                                                uint32_t* d_min, uint32_t* d_max);

/* Runs a mining strategy and returns the report JSON. strategy is one of
 * ego, s1+localsearch, s2+localsearch, greedy, kcore-seed, avgdeg-seed.
 * alphas is a comma-separated list of ratios ("1/3,0.7,1"); NULL selects
 * the default grid. t_max of 0 selects the default of 50. */
QCMINE_API qcm_status qcm_mine_json(qcm_graph* g, const char* strategy, const char* alphas,
                                    uint32_t t_max, int threads, char** out);

/* Runs the invariant suite; *violations receives the number of failed
 * checks (may be NULL). */
QCMINE_API qcm_status qcm_verify_json(qcm_graph* g, int threads, char** out, int* violations);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCMINE_H */
