#ifndef FDMATROID_H
#define FDMATROID_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  FDM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  FDM_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  FDM_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input file.
   */
  FDM_STATUS_PARSE = 3,
  /**
   * An attribute name not declared in the header.
   */
  FDM_STATUS_UNKNOWN_ATTRIBUTE = 4,
  /**
   * The input exceeds a size limit.
   */
  FDM_STATUS_CAP_EXCEEDED = 5,
  /**
   * A precondition of the operation does not hold.
   */
  FDM_STATUS_INVALID_ARGUMENT = 6,
  /**
   * An internal failure.
   */
  FDM_STATUS_INTERNAL = 7,
} FdmStatus;

/**
 * A hereditary collection with its flat closure.
 */
typedef struct FdmFlats FdmFlats;

/**
 * A universe and a canonical dependency function.
 */
typedef struct FdmSystem FdmSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *fdm_last_error(void);

/**
 * Library version as a static string.
 */
const char *fdm_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void fdm_string_free(char *s);

/**
 * Parses a dependency file and canonicalizes it.
 */
FdmStatus fdm_system_parse(const char *source, FdmSystem **out);

/**
 * Releases a system. Null is ignored.
 */
void fdm_system_free(FdmSystem *system);

/**
 * Number of declared attributes.
 */
FdmStatus fdm_system_attribute_count(const FdmSystem *system, size_t *out);

/**
 * Number of pairs of the canonical function.
 */
FdmStatus fdm_system_pair_count(const FdmSystem *system, size_t *out);

/**
 * The canonical function in dependency-file form.
 */
FdmStatus fdm_system_canonical(const FdmSystem *system, char **out);

/**
 * Closure of a space-separated attribute list.
 */
FdmStatus fdm_closure(const FdmSystem *system, const char *set, char **out);

/**
 * Whether a set is closed.
 */
FdmStatus fdm_is_closed(const FdmSystem *system, const char *set, bool *out);

/**
 * Keys of a closed set, one per line; an empty key prints as `{}`.
 */
FdmStatus fdm_keys_of(const FdmSystem *system, const char *closed, char **out);

/**
 * A nonredundant cover in dependency-file form.
 */
FdmStatus fdm_nonredundant_cover(const FdmSystem *system, char **out);

/**
 * Number of nonredundant covers; fails with `CapExceeded` above `cap`.
 */
FdmStatus fdm_basis_count(const FdmSystem *system, size_t cap, size_t *out);

/**
 * Whether `from` directly determines `to`.
 */
FdmStatus fdm_directly_determines(const FdmSystem *system,
                                  const char *from,
                                  const char *to,
                                  bool *out);

/**
 * Parses a facet file.
 */
FdmStatus fdm_flats_parse(const char *source, FdmFlats **out);

/**
 * Releases a collection. Null is ignored.
 */
void fdm_flats_free(FdmFlats *flats);

/**
 * Number of members of the collection.
 */
FdmStatus fdm_flats_member_count(const FdmFlats *flats, size_t *out);

/**
 * Top-down and bottom-up flat closure of a set.
 */
FdmStatus fdm_flats_closure(const FdmFlats *flats,
                            const char *set,
                            char **topdown,
                            char **bottomup);

/**
 * Audits every claim on one input and writes the JSON report.
 * `is_facets` selects the facet grammar. `must_pass_failures` may be null.
 */
FdmStatus fdm_audit(const char *source, bool is_facets, char **report, size_t *must_pass_failures);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FDMATROID_H */
