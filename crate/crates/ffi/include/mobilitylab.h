#ifndef MOBILITYLAB_H
#define MOBILITYLAB_H

/* Generated by cbindgen from the mobilitylab-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define MLAB_OK 0

/**
 * Invalid parameter, domain, contract, or structure error.
 */
#define MLAB_ERR_PARAM 2

/**
 * Solver or convergence failure.
 */
#define MLAB_ERR_SOLVER 3

/**
 * A required pointer argument was null.
 */
#define MLAB_ERR_NULL 4

/**
 * Internal panic caught at the boundary.
 */
#define MLAB_ERR_PANIC 5

/**
 * Opaque graph handle.
 */
typedef struct MlabGraph MlabGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Crate version as a static C string.
 */
const char *mlab_version(void);

/**
 * Message describing the most recent error on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *mlab_last_error_message(void);

/**
 * Sample G(n, d/n) deterministically from `seed` into a new handle.
 */
int32_t mlab_graph_generate(uint64_t n, double d, uint64_t seed, MlabGraph **out);

/**
 * Release a graph handle. Null is a no-op.
 */
void mlab_graph_free(MlabGraph *g);

/**
 * Vertex count; 0 for a null handle.
 */
uint64_t mlab_graph_n(const MlabGraph *g);

/**
 * Edge count; 0 for a null handle.
 */
uint64_t mlab_graph_edge_count(const MlabGraph *g);

/**
 * Degree of vertex `v`.
 */
int32_t mlab_graph_degree(const MlabGraph *g, uint32_t v, uint64_t *out);

/**
 * Edge-list text (the same format the CLI writes). Free with
 * `mlab_string_free`.
 */
int32_t mlab_graph_edge_list(const MlabGraph *g, char **out);

/**
 * Release a string returned by this library.
 */
void mlab_string_free(char *s);

/**
 * Extremal eigenvalues of H = A/√d. `which`: 0 largest, 1 smallest,
 * 2 both ends. Writes `k` values (descending) and, when non-null, their
 * residuals.
 */
int32_t mlab_top_eigenvalues(const MlabGraph *g,
                             double d,
                             uint64_t k,
                             int32_t which,
                             double tol,
                             uint64_t seed,
                             double *out_values,
                             double *out_residuals);

/**
 * Localization length of the weight vector `w` (length n) over the graph,
 * scanning the default candidate set.
 */
int32_t mlab_localization_length(const MlabGraph *g,
                                 const double *w,
                                 double *out_ell,
                                 uint32_t *out_center);

/**
 * Normalized degrees α_x = degree(x)/d into a caller buffer of length n.
 */
int32_t mlab_normalized_degrees(const MlabGraph *g, double d, double *out);

/**
 * Sizes of the threshold sets 𝒱 and 𝒲 for the given α* and κ.
 */
int32_t mlab_vertex_set_sizes(const double *alphas,
                              uint64_t len,
                              double alpha_star,
                              double kappa,
                              uint64_t *out_v,
                              uint64_t *out_w);

/**
 * Phase constants at sparseness b ≤ b_*: writes α_max and λ_max.
 */
int32_t mlab_phase_constants(double b, double *out_alpha_max, double *out_lambda_max);

/**
 * Galton–Watson robust-root frequency with 95% half-width.
 */
int32_t mlab_gw_robust_prob(double d,
                            uint32_t r,
                            uint64_t trials,
                            uint64_t seed,
                            double *out_freq,
                            double *out_ci);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MOBILITYLAB_H */
