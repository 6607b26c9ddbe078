#ifndef LANDAU_H
#define LANDAU_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LandauStatus {
  LANDAU_STATUS_OK = 0,
  LANDAU_STATUS_NULL_POINTER = 1,
  LANDAU_STATUS_INVALID_PARAMS = 2,
  LANDAU_STATUS_DOMAIN = 3,
  LANDAU_STATUS_SINGULAR = 4,
  LANDAU_STATUS_UNSUPPORTED_KIND = 5,
  LANDAU_STATUS_BRACKET = 6,
  LANDAU_STATUS_PRECONDITION = 7,
  LANDAU_STATUS_RESAMPLE_EXHAUSTED = 8,
  LANDAU_STATUS_PANIC = 9,
} LandauStatus;

typedef enum LandauVariant {
  LANDAU_VARIANT_T1 = 0,
  LANDAU_VARIANT_T2 = 1,
  LANDAU_VARIANT_T3 = 2,
  LANDAU_VARIANT_T4 = 3,
  LANDAU_VARIANT_T5 = 4,
  LANDAU_VARIANT_TC = 5,
  LANDAU_VARIANT_CLASSICAL = 6,
} LandauVariant;

typedef enum LandauSuiteMode {
  LANDAU_SUITE_MODE_ADMISSIBLE = 0,
  LANDAU_SUITE_MODE_EXTREMAL = 1,
} LandauSuiteMode;

/**
 * Validated theorem parameters.
 */
typedef struct LandauParams LandauParams;

/**
 * A poly-analytic or reduced poly-analytic function.
 */
typedef struct LandauPolyFn LandauPolyFn;

typedef struct LandauRadii {
  double radius;
  /**
   * Meaningful only when `has_schlicht` is set.
   */
  double schlicht_radius;
  bool has_schlicht;
  bool degenerate;
  bool schlicht_clamped;
  double residual;
  size_t iterations;
  double bracket_lo;
  double bracket_hi;
} LandauRadii;

typedef struct LandauWirtinger {
  double fz_re;
  double fz_im;
  double fzbar_re;
  double fzbar_im;
  double jacobian;
  double lambda_big;
  double lambda_small;
} LandauWirtinger;

typedef struct LandauWitness {
  double x1;
  double x2;
  double image_gap;
  bool capped;
} LandauWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *landau_last_error_message(void);

/**
 * Creates a parameter set. `bounds` holds `m` values, `orders` holds
 * `n_orders` vanishing orders (T1 only, `m - 1` of them).
 *
 * # Safety
 * `bounds` and `orders` must point to that many readable elements (or be
 * NULL when the count is zero); `out` must be writable.
 */
enum LandauStatus landau_params_new(enum LandauVariant variant_,
                                    const double *bounds,
                                    size_t m,
                                    const uint32_t *orders,
                                    size_t n_orders,
                                    struct LandauParams **out);

/**
 * # Safety
 * `params` must come from `landau_params_new` and not be used afterwards.
 */
void landau_params_free(struct LandauParams *params);

/**
 * Value of the radius profile at `r`.
 *
 * # Safety
 * `params` must be a live handle and `out` writable.
 */
enum LandauStatus landau_profile_value(const struct LandauParams *params, double r, double *out);

/**
 * # Safety
 * `params` must be a live handle and `out` writable.
 */
enum LandauStatus landau_radii_solve(const struct LandauParams *params, struct LandauRadii *out);

/**
 * Sharpness extremal for T1, T4 or classical parameters.
 *
 * # Safety
 * `params` must be a live handle and `out` writable.
 */
enum LandauStatus landau_extremal_new(const struct LandauParams *params, struct LandauPolyFn **out);

/**
 * Seeded random function satisfying the hypotheses of `params`.
 *
 * # Safety
 * `params` must be a live handle and `out` writable.
 */
enum LandauStatus landau_admissible_new(const struct LandauParams *params,
                                        size_t degree,
                                        uint64_t seed,
                                        struct LandauPolyFn **out);

/**
 * # Safety
 * `f` must come from one of the constructors and not be used afterwards.
 */
void landau_polyfn_free(struct LandauPolyFn *f);

/**
 * # Safety
 * `f` must be a live handle; `out_re` and `out_im` writable.
 */
enum LandauStatus landau_polyfn_eval(const struct LandauPolyFn *f,
                                     double re,
                                     double im,
                                     double *out_re,
                                     double *out_im);

/**
 * # Safety
 * `f` must be a live handle and `out` writable.
 */
enum LandauStatus landau_polyfn_wirtinger(const struct LandauPolyFn *f,
                                          double re,
                                          double im,
                                          struct LandauWirtinger *out);

/**
 * Two real points in `|z| < r` with equal extremal image (T1 or T4).
 *
 * # Safety
 * `params` must be a live handle and `out` writable.
 */
enum LandauStatus landau_sharpness_witness(const struct LandauParams *params,
                                           double r,
                                           struct LandauWitness *out);

/**
 * Runs the default verification suite and returns the report as a JSON
 * string (free with `landau_string_free`). `passed` receives the verdict.
 *
 * # Safety
 * `params` must be a live handle; `out_json` and `passed` writable.
 */
enum LandauStatus landau_verify_json(const struct LandauParams *params,
                                     enum LandauSuiteMode mode,
                                     uint64_t seed,
                                     char **out_json,
                                     bool *passed);

/**
 * # Safety
 * `s` must be a string returned by this library and not freed yet.
 */
void landau_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LANDAU_H */
