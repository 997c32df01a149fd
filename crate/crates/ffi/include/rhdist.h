#ifndef RHDIST_H
#define RHDIST_H

/* Generated by cbindgen from the rhdist-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every fallible entry point.
 */
typedef enum RhStatus {
  RH_OK = 0,
  RH_NULL_POINTER = 1,
  RH_INVALID_ARGUMENT = 2,
  RH_PARSE_ERROR = 3,
  RH_EMPTY_GRAPH = 4,
  RH_IO_ERROR = 5,
} RhStatus;

/*
 Opaque handle to a complementary cumulative degree histogram.
 */
typedef struct RhCcdh RhCcdh;

/*
 Directional distances plus their maximum.
 */
typedef struct RhDistance {
  double forward;
  double backward;
  double distance;
} RhDistance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Short static description of a status code.
 */
const char *rh_status_name(enum RhStatus status);

/*
 Builds a ccdh from the dense value sequence `N(1), ..., N(len)`.

 # Safety
 `values` must point to `len` readable u64s and `out` must be a valid
 location to store the handle.
 */
enum RhStatus rh_ccdh_from_values(const uint64_t *values, uintptr_t len, struct RhCcdh **out);

/*
 Builds a ccdh from a multiset of positive vertex degrees.

 # Safety
 `degrees` must point to `len` readable u64s and `out` must be valid.
 */
enum RhStatus rh_ccdh_from_degrees(const uint64_t *degrees, uintptr_t len, struct RhCcdh **out);

/*
 Parses an edge-list file (SNAP-style text) and takes its ccdh.

 # Safety
 `path` must be a NUL-terminated string and `out` must be valid.
 */
enum RhStatus rh_ccdh_from_edge_list_path(const char *path, struct RhCcdh **out);

/*
 Releases a handle returned by any of the constructors. Null is a no-op.

 # Safety
 `h` must be a handle from this library that has not been freed yet.
 */
void rh_ccdh_free(struct RhCcdh *h);

/*
 Maximum degree of the curve.

 # Safety
 `h` must be a live handle.
 */
uint64_t rh_ccdh_delta(const struct RhCcdh *h);

/*
 `N(k)`; 0 past the maximum degree. `k` must be >= 1.

 # Safety
 `h` must be a live handle.
 */
uint64_t rh_ccdh_value(const struct RhCcdh *h, uint64_t k);

/*
 Piecewise-linear ccdh value at `x >= 1` (0 past the curve).

 # Safety
 `h` must be a live handle and `out` a valid location.
 */
enum RhStatus rh_ccdh_smooth_eval(const struct RhCcdh *h, double x, double *out);

/*
 Smooth relative Hausdorff distance between two curves.

 # Safety
 `f` and `g` must be live handles, `out` a valid location.
 */
enum RhStatus rh_smooth_distance(const struct RhCcdh *f,
                                 const struct RhCcdh *g,
                                 struct RhDistance *out);

/*
 Discrete relative Hausdorff distance between two curves.

 # Safety
 `f` and `g` must be live handles, `out` a valid location.
 */
enum RhStatus rh_discrete_distance(const struct RhCcdh *f,
                                   const struct RhCcdh *g,
                                   struct RhDistance *out);

/*
 Smooth distance divided by the maximum attainable at the two vertex
 counts (both graphs need at least 3 vertices).

 # Safety
 `f` and `g` must be live handles, `out` a valid location.
 */
enum RhStatus rh_normalized_ratio(const struct RhCcdh *f, const struct RhCcdh *g, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RHDIST_H */
