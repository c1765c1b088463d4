/* C interface for the hyperf compact-hypergroup Fourier analysis library. */

#ifndef HYPERF_H
#define HYPERF_H

/* Generated by cbindgen from hyperf-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum {
  /**
   * Success.
   */
  HF_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  HF_STATUS_NULL_POINTER = 1,
  /**
   * A numeric or domain argument was out of range.
   */
  HF_STATUS_INVALID_PARAMETER = 2,
  /**
   * An experiment configuration was rejected.
   */
  HF_STATUS_INVALID_CONFIG = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  HF_STATUS_INVALID_UTF8 = 4,
  /**
   * The run completed but at least one hard check failed.
   */
  HF_STATUS_HARD_FAILURE = 5,
} HfStatus;

/**
 * Opaque hypergroup instance handle.
 */
typedef struct HfInstance HfInstance;

/**
 * Opaque character-polynomial handle (a function `f = Σ c_χ χ`).
 */
typedef struct HfPolynomial HfPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * New `Conj(SU(2))` instance. Never fails; release with
 * [`hf_instance_free`].
 */
HfInstance *hf_conj_su2_new(void);

/**
 * New `H_a` instance with `a = numer/denom ∈ (0, 1/2]`.
 *
 * # Safety
 * `out` must be a valid pointer to an instance-handle slot.
 */
HfStatus hf_dunkl_ramirez_new(int64_t numer, int64_t denom, HfInstance **out);

/**
 * Releases an instance handle (NULL is ignored).
 *
 * # Safety
 * `instance` must be a handle returned by an instance constructor, not yet
 * freed.
 */
void hf_instance_free(HfInstance *instance);

/**
 * Hyperdimension `k_π` of the dual point with the given label.
 *
 * # Safety
 * `instance` must be a live instance handle and `out` a valid f64 slot.
 */
HfStatus hf_hyperdimension(const HfInstance *instance, uint32_t label, double *out);

/**
 * `χ_m(t)` on `Conj(SU(2)) ≅ [0, 1]`.
 *
 * # Safety
 * `out` must be a valid f64 slot.
 */
HfStatus hf_conj_su2_character(uint32_t label, double t, double *out);

/**
 * `χ_n(x)` on `H_a`, where `x` is the finite point `point` or `∞` when
 * `at_infinity` is set.
 *
 * # Safety
 * `instance` must be a live `H_a` handle and `out` a valid f64 slot.
 */
HfStatus hf_dunkl_ramirez_character(const HfInstance *instance,
                                    uint32_t label,
                                    uint32_t point,
                                    bool at_infinity,
                                    double *out);

/**
 * Builds a character polynomial from parallel label/re/im arrays of length
 * `len`. Duplicate labels keep the last value.
 *
 * # Safety
 * `labels`, `re`, `im` must point to `len` readable elements; `out` must be
 * a valid handle slot.
 */
HfStatus hf_polynomial_new(const uint32_t *labels,
                           const double *re,
                           const double *im,
                           uintptr_t len,
                           HfPolynomial **out);

/**
 * Releases a polynomial handle (NULL is ignored).
 *
 * # Safety
 * `poly` must be a handle returned by [`hf_polynomial_new`], not yet freed.
 */
void hf_polynomial_free(HfPolynomial *poly);

/**
 * Exact Fourier coefficient `f̂(χ_label) = c_label / k_label`.
 *
 * # Safety
 * `instance` and `poly` must be live handles; `out_re`, `out_im` valid
 * f64 slots.
 */
HfStatus hf_fourier_coefficient(const HfInstance *instance,
                                const HfPolynomial *poly,
                                uint32_t label,
                                double *out_re,
                                double *out_im);

/**
 * `L^p(K)` norm of the polynomial through the instance quadrature sized for
 * `level`; pass `p = INFINITY` for the sup norm.
 *
 * # Safety
 * `instance` and `poly` must be live handles and `out` a valid f64 slot.
 */
HfStatus hf_lp_norm(const HfInstance *instance,
                    const HfPolynomial *poly,
                    double p,
                    uint32_t level,
                    double *out);

/**
 * `‖f‖₂` through the exact Plancherel sum `(Σ |c_χ|²/k_χ)^{1/2}`.
 *
 * # Safety
 * `instance` and `poly` must be live handles and `out` a valid f64 slot.
 */
HfStatus hf_l2_norm_algebraic(const HfInstance *instance, const HfPolynomial *poly, double *out);

/**
 * Paley functional `M_φ` for the preset weight `φ(π) = k_π^{-beta}` over
 * the dual truncated at `level`.
 *
 * # Safety
 * `instance` must be a live handle and `out` a valid f64 slot.
 */
HfStatus hf_mphi(const HfInstance *instance, uint32_t level, double beta, double *out);

/**
 * Hörmander functional `sup_y y (Σ_{|σ|≥y} k²)^{1/p-1/q}` of a scalar
 * symbol given by its magnitudes on labels `0..len`.
 *
 * # Safety
 * `sigma_abs` must point to `len` readable f64 values; `instance` must be a
 * live handle and `out` a valid f64 slot.
 */
HfStatus hf_hormander_functional(const HfInstance *instance,
                                 const double *sigma_abs,
                                 uintptr_t len,
                                 double p,
                                 double q,
                                 double *out);

/**
 * Empirical lower bound on the `L^p → L^q` norm of the diagonal multiplier
 * with the given complex symbol values on labels `0..len`.
 *
 * # Safety
 * `sigma_re`/`sigma_im` must point to `len` readable f64 values; `instance`
 * must be a live handle and `out` a valid f64 slot.
 */
HfStatus hf_opnorm_lower_bound(const HfInstance *instance,
                               const double *sigma_re,
                               const double *sigma_im,
                               uintptr_t len,
                               double p,
                               double q,
                               uint32_t trials,
                               uint64_t seed,
                               double *out);

/**
 * Runs a full experiment from config text (same `key = value` format as the
 * CLI) and returns the rendered report through `out_report`.
 *
 * Returns `Ok` when every hard check passed, `HardFailure` when the run
 * completed with failing hard checks (the report is still produced), and a
 * config status otherwise.
 *
 * # Safety
 * `config_text` must be a NUL-terminated string and `out_report` a valid
 * slot; release the report with [`hf_string_free`].
 */
HfStatus hf_run_config(const char *config_text, char **out_report);

/**
 * Releases a string returned by this library (NULL is ignored).
 *
 * # Safety
 * `s` must originate from this library and not yet be freed.
 */
void hf_string_free(char *s);

/**
 * Static library version string (do not free).
 */
const char *hf_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERF_H */
