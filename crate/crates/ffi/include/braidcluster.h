#ifndef BRAIDCLUSTER_H
#define BRAIDCLUSTER_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BcGroup {
  BC_GROUP_BRAID = 0,
  BC_GROUP_FLAT_BRAID = 1,
  BC_GROUP_VIRTUAL = 2,
  BC_GROUP_FLAT_VIRTUAL = 3,
} BcGroup;

/**
 * Result of every fallible call. Zero is success.
 */
typedef enum BcStatus {
  BC_STATUS_OK = 0,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  BC_STATUS_NULL_OR_ENCODING = 1,
  /**
   * Malformed word, point or group, or arity mismatch.
   */
  BC_STATUS_INVALID = 2,
  /**
   * The word hit a pole at the given point.
   */
  BC_STATUS_SINGULAR = 3,
  /**
   * No nonsingular base point was found.
   */
  BC_STATUS_EXHAUSTED = 4,
  /**
   * The input exceeds the symbolic cost limits.
   */
  BC_STATUS_TOO_LARGE = 5,
  /**
   * A bug in the library; the message says where.
   */
  BC_STATUS_INTERNAL = 6,
} BcStatus;

/**
 * A point with exact rational coordinates.
 */
typedef struct BcPoint BcPoint;

/**
 * A parsed braid word together with its group and strand count.
 */
typedef struct BcWord BcWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next call into the library on this
 * thread; do not free it.
 */
const char *bc_last_error(void);

/**
 * Library version as a static string.
 */
const char *bc_version(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void bc_string_free(char *s);

/**
 * Parses a word such as `"s1 r2 S1"` on `n` strands. `"1"` or an empty
 * string is the empty word.
 *
 * # Safety
 * `word` must be a nul-terminated string and `out` a writable pointer.
 */
enum BcStatus bc_word_parse(const char *word, size_t n, enum BcGroup group, struct BcWord **out);

/**
 * # Safety
 * `w` must be null or a handle from [`bc_word_parse`] not yet freed.
 */
void bc_word_free(struct BcWord *w);

/**
 * Number of letters, or 0 for a null handle.
 *
 * # Safety
 * `w` must be null or a live word handle.
 */
size_t bc_word_len(const struct BcWord *w);

/**
 * Canonical text of the word; free with [`bc_string_free`].
 *
 * # Safety
 * `w` must be a live word handle and `out` a writable pointer.
 */
enum BcStatus bc_word_to_string(const struct BcWord *w, char **out);

/**
 * Parses comma-separated rationals, e.g. `"1,2,-3/4,1"`.
 *
 * # Safety
 * `coords` must be a nul-terminated string and `out` a writable pointer.
 */
enum BcStatus bc_point_parse(const char *coords, struct BcPoint **out);

/**
 * The default base point for the word's group and strand count.
 *
 * # Safety
 * `w` must be a live word handle and `out` a writable pointer.
 */
enum BcStatus bc_point_default(const struct BcWord *w, struct BcPoint **out);

/**
 * # Safety
 * `p` must be null or a point handle not yet freed.
 */
void bc_point_free(struct BcPoint *p);

/**
 * Number of coordinates, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live point handle.
 */
size_t bc_point_arity(const struct BcPoint *p);

/**
 * Comma-separated coordinates; free with [`bc_string_free`].
 *
 * # Safety
 * `p` must be a live point handle and `out` a writable pointer.
 */
enum BcStatus bc_point_to_string(const struct BcPoint *p, char **out);

/**
 * Image of `p` under the word, as a new point. No base-point retries: a
 * pole gives [`BcStatus::Singular`].
 *
 * # Safety
 * `w` and `p` must be live handles and `out` a writable pointer.
 */
enum BcStatus bc_apply_word(const struct BcWord *w, const struct BcPoint *p, struct BcPoint **out);

/**
 * Invariant report as JSON, with the same fields as the command line.
 * `base` may be null for the default base; a singular base is replaced by
 * seeded pseudo-random bases. Free the string with [`bc_string_free`].
 *
 * # Safety
 * `w` must be a live word handle, `base` null or a live point handle, and
 * `out` a writable pointer.
 */
enum BcStatus bc_invariant_json(const struct BcWord *w,
                                const struct BcPoint *base,
                                uint64_t seed,
                                char **out);

/**
 * Sets `*distinct` to 1 when the two words send `p` to different points,
 * else 0. Both words must act on the same space as `p`.
 *
 * # Safety
 * All handles must be live and `distinct` a writable pointer.
 */
enum BcStatus bc_words_differ_at(const struct BcWord *w1,
                                 const struct BcWord *w2,
                                 const struct BcPoint *p,
                                 int32_t *distinct);

/**
 * Checks every defining relation of the group on `n` strands symbolically.
 * `*passed` is 1 when all hold. Strand counts beyond the default symbolic
 * limit give [`BcStatus::TooLarge`].
 *
 * # Safety
 * `passed` must be a writable pointer.
 */
enum BcStatus bc_verify_presentation(enum BcGroup group, size_t n, int32_t *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAIDCLUSTER_H */
