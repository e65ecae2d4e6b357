#ifndef ALUFFI_KIT_H
#define ALUFFI_KIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every entry point.
 */
typedef enum AkStatus {
  AK_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  AK_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  AK_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input: syntax errors, unknown variables, bad rings.
   */
  AK_STATUS_INVALID_INPUT = 3,
  /**
   * The input violates a precondition (not reduced, singularities not isolated, ...).
   */
  AK_STATUS_PRECONDITION = 4,
  /**
   * A resource ceiling or timeout was hit.
   */
  AK_STATUS_RESOURCE_LIMIT = 5,
  /**
   * Independent computations disagreed.
   */
  AK_STATUS_INCONSISTENT = 6,
  /**
   * An index argument was out of range.
   */
  AK_STATUS_INDEX_OUT_OF_RANGE = 7,
  /**
   * The library panicked; this is a bug.
   */
  AK_STATUS_PANIC = 8,
} AkStatus;

/**
 * Opaque analysis report.
 */
typedef struct AkReport AkReport;

/**
 * Analysis options. Zero limits mean "use the library default".
 */
typedef struct AkOptions {
  bool projective;
  bool presentations;
  bool deep;
  size_t max_pairs;
  size_t max_terms;
  /**
   * Wall-clock budget in milliseconds, 0 for none.
   */
  uint64_t timeout_ms;
} AkOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default options: affine, no presentations, default limits.
 */
struct AkOptions ak_options_default(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ak_version(void);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next library call on the same thread.
 */
const char *ak_last_error_message(void);

/**
 * Analyze the hypersurface `poly = 0` in the variables `vars` (comma
 * separated). `options` may be null for defaults. On success `*out` holds a
 * report to be released with `ak_report_free`.
 *
 * # Safety
 * `vars` and `poly` must be null or NUL-terminated strings, `options` null or
 * valid, and `out` a valid pointer.
 */
enum AkStatus ak_analyze(const char *vars,
                         const char *poly,
                         const struct AkOptions *options,
                         struct AkReport **out);

/**
 * Parse a report from its JSON form.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string and `out` a valid pointer.
 */
enum AkStatus ak_report_from_json(const char *json, struct AkReport **out);

/**
 * Release a report. Null is ignored.
 *
 * # Safety
 * `report` must be null or a handle from this library not yet freed.
 */
void ak_report_free(struct AkReport *report);

/**
 * JSON form of the report; release with `ak_string_free`.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum AkStatus ak_report_json(const struct AkReport *report, char **out);

/**
 * Human-readable summary of the report; release with `ak_string_free`.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum AkStatus ak_report_text(const struct AkReport *report, char **out);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void ak_string_free(char *s);

/**
 * Whether the hypersurface is locally Eulerian at every singular point.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum AkStatus ak_report_locally_eulerian(const struct AkReport *report, bool *out);

/**
 * Whether the Jacobian ideal is of linear type.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum AkStatus ak_report_jacobian_linear_type(const struct AkReport *report, bool *out);

/**
 * Gradient linear type of a projective hypersurface: 1 yes, 0 no, -1 when
 * the report is affine.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum AkStatus ak_report_gradient_linear_type(const struct AkReport *report, int32_t *out);

/**
 * Number of rational singular points listed in the report.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum AkStatus ak_report_singular_point_count(const struct AkReport *report, size_t *out);

/**
 * Milnor and Tjurina numbers at singular point `index`.
 *
 * # Safety
 * `report` must be a live handle and `milnor`, `tjurina` valid pointers.
 */
enum AkStatus ak_report_milnor_tjurina(const struct AkReport *report,
                                       size_t index,
                                       uint64_t *milnor,
                                       uint64_t *tjurina);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALUFFI_KIT_H */
