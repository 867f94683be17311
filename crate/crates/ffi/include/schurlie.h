#ifndef SCHURLIE_H
#define SCHURLIE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes. `SCHURLIE_STATUS_OK` is zero; everything else is an error.
 */
typedef enum SchurlieStatus {
  SCHURLIE_STATUS_OK = 0,
  SCHURLIE_STATUS_NULL_POINTER = 1,
  SCHURLIE_STATUS_INVALID_UTF8 = 2,
  SCHURLIE_STATUS_SYNTAX = 3,
  SCHURLIE_STATUS_RANGE = 4,
  SCHURLIE_STATUS_ARGUMENT = 5,
  SCHURLIE_STATUS_DIMENSION = 6,
  SCHURLIE_STATUS_NOT_FOUND = 7,
  SCHURLIE_STATUS_RESOURCE = 8,
  SCHURLIE_STATUS_NOT_IN_FILTRATION = 9,
  SCHURLIE_STATUS_INVARIANT_VIOLATION = 10,
  SCHURLIE_STATUS_PANIC = 11,
} SchurlieStatus;

/*
 An element of the free Lie algebra in Lyndon coordinates.
 */
typedef struct SchurlieLie SchurlieLie;

/*
 A Schur algebra element in orbit-coefficient form.
 */
typedef struct SchurlieSchur SchurlieSchur;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or an empty string. The
 pointer stays valid until the next library call on the same thread.
 */
const char *schurlie_last_error(void);

/*
 Releases a string returned by the library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void schurlie_string_free(char *s);

/*
 Parses a Lie expression such as `[x1,[x1,x2]] - 2*[x2,x1]` in rank `n`.

 # Safety
 `text` must be a nul-terminated string; `out` must be writable.
 */
enum SchurlieStatus schurlie_lie_parse(const char *text, size_t n, struct SchurlieLie **out);

/*
 Text form in the Lyndon basis.

 # Safety
 `a` must be a live handle; `out` must be writable.
 */
enum SchurlieStatus schurlie_lie_to_string(const struct SchurlieLie *a, char **out);

/*
 # Safety
 `a` must be a live handle; `out` must be writable.
 */
enum SchurlieStatus schurlie_lie_degree(const struct SchurlieLie *a, size_t *out);

/*
 `[a, b]` as a new handle.

 # Safety
 `a`, `b` must be live handles; `out` must be writable.
 */
enum SchurlieStatus schurlie_lie_bracket(const struct SchurlieLie *a,
                                         const struct SchurlieLie *b,
                                         struct SchurlieLie **out);

/*
 # Safety
 `a` must be null or a handle from this library that has not been freed.
 */
void schurlie_lie_free(struct SchurlieLie *a);

/*
 Reads the JSON form `{"n":..,"q":..,"entries":[{"u":..,"key":..,"coeff":..}]}`.

 # Safety
 `json` must be a nul-terminated string; `out` must be writable.
 */
enum SchurlieStatus schurlie_schur_from_json(const char *json, struct SchurlieSchur **out);

/*
 # Safety
 `f` must be a live handle; `out` must be writable.
 */
enum SchurlieStatus schurlie_schur_to_json(const struct SchurlieSchur *f, char **out);

/*
 `f ∘ g` (apply `g` first).

 # Safety
 `f`, `g` must be live handles; `out` must be writable.
 */
enum SchurlieStatus schurlie_schur_compose(const struct SchurlieSchur *f,
                                           const struct SchurlieSchur *g,
                                           struct SchurlieSchur **out);

/*
 Star product `f ⋆ g` of degree `deg f + deg g`.

 # Safety
 `f`, `g` must be live handles; `out` must be writable.
 */
enum SchurlieStatus schurlie_schur_star(const struct SchurlieSchur *f,
                                        const struct SchurlieSchur *g,
                                        struct SchurlieSchur **out);

/*
 Applies `f` to a Lie element of the same degree.

 # Safety
 `f`, `a` must be live handles; `out` must be writable.
 */
enum SchurlieStatus schurlie_schur_apply_to_lie(const struct SchurlieSchur *f,
                                                const struct SchurlieLie *a,
                                                struct SchurlieLie **out);

/*
 # Safety
 `f` must be null or a handle from this library that has not been freed.
 */
void schurlie_schur_free(struct SchurlieSchur *f);

/*
 Group-ring element of a bracket shape such as `[[,],]`, in cycle notation.

 # Safety
 `shape` must be a nul-terminated string; `out` must be writable.
 */
enum SchurlieStatus schurlie_bracketing_function(const char *shape, char **out);

/*
 Runs a verification suite and writes its JSON report. `n` and
 `max_degree` of 0 select the suite defaults. `passed` receives 1 or 0.

 # Safety
 `suite` must be a nul-terminated string; `passed` and `report_json` must be writable.
 */
enum SchurlieStatus schurlie_verify(const char *suite,
                                    size_t n,
                                    size_t max_degree,
                                    uint64_t seed,
                                    int32_t *passed,
                                    char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHURLIE_H */
