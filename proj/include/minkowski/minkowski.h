/* C interface to the minkowski library.
 *
 * Norms are opaque handles. Every call returns an mk_status; on failure the
 * message is available from mk_last_error() (per thread). Strings returned
 * through `char** out` are JSON documents (rationals encoded as "p/q"
 * strings) owned by the caller and released with mk_free_string(). Vectors
 * are passed as comma-separated rationals ("1,-1/2"), point lists as JSON
 * arrays of coordinate arrays.
 */
#ifndef MINKOWSKI_H
#define MINKOWSKI_H

#include <stdint.h>

#if defined(MK_BUILDING_LIBRARY)
#define MK_API __attribute__((visibility("default")))
#else
#define MK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mk_status {
  MK_OK = 0,
  MK_ERR_INPUT = 1,
  MK_ERR_NOT_SYMMETRIC = 2,
  MK_ERR_DEGENERATE_BALL = 3,
  MK_ERR_SIZE_LIMIT = 4,
  MK_ERR_INTERNAL = 5
} mk_status;

typedef enum mk_smt_mode { MK_SMT_EXACT = 0, MK_SMT_HEURISTIC = 1 } mk_smt_mode;

typedef struct mk_norm mk_norm;

MK_API const char* mk_version(void);
MK_API const char* mk_last_error(void);
MK_API const char* mk_status_name(mk_status s);
MK_API void mk_free_string(char* s);

/* Construction. The dual ball is always derived. */
MK_API mk_status mk_norm_from_ball_json(const char* ball_json, mk_norm** out);
MK_API mk_status mk_norm_from_hanner(const char* expr, mk_norm** out);
MK_API mk_status mk_norm_rhombic(int d, mk_norm** out);
MK_API mk_status mk_norm_dual(const mk_norm* n, mk_norm** out);
MK_API void mk_norm_free(mk_norm* n);
MK_API int mk_norm_dim(const mk_norm* n);

/* {"dim", "vertices"[, "facets"][, "faces"]} for the unit ball. */
MK_API mk_status mk_ball_json(const mk_norm* n, int include_facets, int include_faces, char** out);
/* Norm (dual = 0) or dual norm (dual != 0) of a vector, as a rational string. */
MK_API mk_status mk_norm_eval(const mk_norm* n, const char* vec, int dual, char** out);

/* {"absorbing", "certificate", "faceDistance"} for the angle a o b. */
MK_API mk_status mk_absorbing(const mk_norm* n, const char* a, const char* b, char** out);
/* {"steinerAntipodal", "witness", ...} */
MK_API mk_status mk_steiner_antipodal(const mk_norm* n, int jobs, char** out);
/* {"clSpace", "witness"} */
MK_API mk_status mk_cl_check(const mk_norm* n, char** out);

/* Steiner tree of the terminals. Heuristic mode starts from the minimum
 * spanning tree and runs `iterations` local-search steps with `seed`. */
MK_API mk_status mk_smt(const mk_norm* n, const char* terminals_json, mk_smt_mode mode, uint64_t seed,
                        int iterations, int jobs, char** out);

/* Theorem checks; *holds is set to 1 when every asserted property holds. */
MK_API mk_status mk_verify_chain(const mk_norm* n, const char* points_json, int jobs, int* holds, char** out);
MK_API mk_status mk_verify_plane(const mk_norm* n, const char* points_json, int jobs, int* holds, char** out);

/* Star from o to every vertex of rhombic_dodecahedron(d), then local search:
 * {"d", "vertices", "anglesChecked", "allAbsorbing", "starLength",
 *  "foundLength", "shorter", "tree"}. */
MK_API mk_status mk_counterexample_rhombic(int d, uint64_t seed, int iterations, int jobs, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MINKOWSKI_H */
