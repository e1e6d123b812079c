#ifndef HOPFPOLY_H
#define HOPFPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define HP_METHOD_ORACLE 0

#define HP_METHOD_ORIENTATION 1

#define HP_METHOD_BOTH 2

#define HP_ANTIPODE_TAKEUCHI 0

#define HP_ANTIPODE_CANCELLATION_FREE 1

#define HP_ANTIPODE_BOTH 2

#define HP_VERIFY_QUICK 0

#define HP_VERIFY_FULL 1

/**
 * Passed as `count_colorings` to skip the coloring counts.
 */
#define HP_NO_COLORINGS -1

/**
 * Status codes. The nonzero values below 5 match the command-line exit codes.
 */
typedef enum HpStatus {
  HP_STATUS_OK = 0,
  HP_STATUS_IO = 1,
  HP_STATUS_VALIDATION = 2,
  HP_STATUS_BUDGET_EXCEEDED = 3,
  HP_STATUS_DISAGREEMENT = 4,
  HP_STATUS_NULL_ARGUMENT = 5,
  HP_STATUS_INVALID_UTF8 = 6,
  HP_STATUS_PANIC = 7,
} HpStatus;

/**
 * A validated object document.
 */
typedef struct HpObject HpObject;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses and validates a JSON object document.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum HpStatus hp_object_from_json(const char *json, struct HpObject **out);

/**
 * # Safety
 * `object` must come from `hp_object_from_json` and not be used afterwards.
 */
void hp_object_free(struct HpObject *object);

/**
 * The canonical document of an object.
 *
 * # Safety
 * `object` must be a live handle; `out` must be writable.
 */
enum HpStatus hp_object_to_json(const struct HpObject *object, char **out);

/**
 * `χ(n)` as an exact rational string such as `"-5/6"`.
 *
 * # Safety
 * `object` must be a live handle, `character` a nul-terminated string, `out` writable.
 */
enum HpStatus hp_chi_eval(const struct HpObject *object,
                          const char *character,
                          int64_t n,
                          uint64_t budget_steps,
                          char **out);

/**
 * The chi report as JSON: polynomial, evaluations, breakdown, certificate.
 *
 * # Safety
 * `evals` must point to `eval_count` integers (or be null when the count is 0).
 */
enum HpStatus hp_chi_json(const struct HpObject *object,
                          const char *character,
                          const int64_t *evals,
                          size_t eval_count,
                          uint32_t method,
                          uint64_t budget_steps,
                          char **out);

/**
 * # Safety
 * `object` must be a live handle; `out` must be writable.
 */
enum HpStatus hp_antipode_json(const struct HpObject *object,
                               uint32_t format,
                               uint64_t budget_steps,
                               char **out);

/**
 * `count_colorings` is a number of colors, or `HP_NO_COLORINGS`.
 *
 * # Safety
 * `object` must be a live handle; `out` must be writable.
 */
enum HpStatus hp_orientations_json(const struct HpObject *object,
                                   bool acyclic_only,
                                   int64_t count_colorings,
                                   uint64_t budget_steps,
                                   char **out);

/**
 * Runs the cross-checks; a failing check returns `Disagreement`.
 *
 * # Safety
 * `object` must be a live handle; `out` must be writable.
 */
enum HpStatus hp_verify_json(const struct HpObject *object,
                             uint32_t level,
                             uint64_t budget_steps,
                             char **out);

/**
 * The message of the last failure on this thread, or null. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *hp_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFPOLY_H */
