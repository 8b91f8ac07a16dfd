/* C interface to the wordgrowth library. */

#ifndef WORDGROWTH_H
#define WORDGROWTH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WgStatus {
  WG_STATUS_OK = 0,
  WG_STATUS_NULL_ARGUMENT = 1,
  WG_STATUS_INVALID_UTF8 = 2,
  WG_STATUS_PARSE_ERROR = 3,
  WG_STATUS_ALPHABET_MISMATCH = 4,
  WG_STATUS_SIZE_CAP_EXCEEDED = 5,
  WG_STATUS_PRECONDITION = 6,
  WG_STATUS_NOT_PERIODIC = 7,
  WG_STATUS_INTERNAL_PANIC = 8,
} WgStatus;

/**
 * An owned freely reduced word.
 */
typedef struct WgWord WgWord;

/**
 * An owned, canonically sorted set of reduced words.
 */
typedef struct WgWordSet WgWordSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The most recent error message for this thread, or null. The caller owns
 * the returned string and releases it with `wg_string_free`; the slot is
 * cleared by the call.
 */
char *wg_last_error_message(void);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void wg_string_free(char *s);

/**
 * Parses a word (e.g. `xYyx`, or `1` for the identity) over the first
 * `rank` generators and stores an owned handle in `out`.
 */
enum WgStatus wg_word_parse(const char *text, uint32_t rank, struct WgWord **out);

/**
 * Releases a word handle. Null is a no-op.
 */
void wg_word_free(struct WgWord *word);

/**
 * The word rendered in letter notation (`1` for the identity), or null if
 * the handle is null.
 */
char *wg_word_format(const struct WgWord *word);

/**
 * Number of letters; 0 for the identity or a null handle.
 */
uintptr_t wg_word_length(const struct WgWord *word);

bool wg_word_is_identity(const struct WgWord *word);

/**
 * Stores the reduced product `a·b` in `out`.
 */
enum WgStatus wg_word_concat(const struct WgWord *a, const struct WgWord *b, struct WgWord **out);

/**
 * Stores `a⁻¹` in `out`.
 */
enum WgStatus wg_word_inverse(const struct WgWord *a, struct WgWord **out);

/**
 * Stores the conjugate `by·w·by⁻¹` in `out`.
 */
enum WgStatus wg_word_conjugate(const struct WgWord *w,
                                const struct WgWord *by,
                                struct WgWord **out);

/**
 * Stores whether `a·b = b·a` in `out`.
 */
enum WgStatus wg_word_commutes(const struct WgWord *a, const struct WgWord *b, bool *out);

/**
 * Decomposes `w = z^s·t` with `s ≥ 2` maximal and `t` a proper prefix of
 * `z`. Returns `WG_STATUS_NOT_PERIODIC` when no such decomposition exists;
 * out-arguments may individually be null when a component is not needed.
 */
enum WgStatus wg_word_left_period(const struct WgWord *w,
                                  struct WgWord **root_out,
                                  uint32_t *exponent_out,
                                  struct WgWord **tail_out);

/**
 * Parses a word set in list form — one word per line, `#` comments and
 * blank lines ignored — and stores an owned handle in `out`.
 */
enum WgStatus wg_wordset_parse(const char *text, uint32_t rank, struct WgWordSet **out);

/**
 * Releases a set handle. Null is a no-op.
 */
void wg_wordset_free(struct WgWordSet *set);

/**
 * The set in list form, one word per line in canonical order, or null for
 * a null handle.
 */
char *wg_wordset_format(const struct WgWordSet *set);

/**
 * Number of words; 0 for a null handle.
 */
uintptr_t wg_wordset_len(const struct WgWordSet *set);

bool wg_wordset_contains(const struct WgWordSet *set, const struct WgWord *word);

/**
 * Stores the pointwise product `A·B` in `out`; `max_size` of 0 selects the
 * default cap.
 */
enum WgStatus wg_wordset_product(const struct WgWordSet *a,
                                 const struct WgWordSet *b,
                                 uintptr_t max_size,
                                 struct WgWordSet **out);

/**
 * Stores the power `Aⁿ` (n ≥ 1) in `out`; `max_size` of 0 selects the
 * default cap.
 */
enum WgStatus wg_wordset_power(const struct WgWordSet *a,
                               uint32_t n,
                               uintptr_t max_size,
                               struct WgWordSet **out);

/**
 * Stores the growth table for `n = 1..=nmax` as CSV text in `out`.
 */
enum WgStatus wg_wordset_growth_csv(const struct WgWordSet *a, uint32_t nmax, char **out);

/**
 * Runs the subset extraction on `a` and stores its trace as JSON in `out`.
 * Fails with `WG_STATUS_PRECONDITION` on an empty set or a rank-1 alphabet.
 */
enum WgStatus wg_lemma1_extract_json(const struct WgWordSet *a, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WORDGROWTH_H */
