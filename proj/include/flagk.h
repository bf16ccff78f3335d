#pragma once

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the flagk library.
 *
 * Every computation takes a context (one root system + Weyl group) and
 * returns 0 on success or a nonzero status; the message for the most recent
 * failure on this thread is available from flagk_last_error(). Result
 * strings are heap-allocated JSON (or DOT) documents owned by the caller;
 * release them with flagk_string_free.
 *
 * Simple-root indices are 1-based everywhere in this interface, matching
 * the serialized formats.
 */

enum flagk_status {
  FLAGK_OK = 0,
  FLAGK_ERR_ARGUMENT = 1, /* bad input: unknown type, non-dominant weight, ... */
  FLAGK_ERR_VERIFY = 2,   /* a verification suite ran and found a failure */
  FLAGK_ERR_INTERNAL = 3
};

typedef struct flagk_ctx flagk_ctx;

const char* flagk_version(void);
const char* flagk_last_error(void);

/* type is a single letter "A".."G"; rank as in the Cartan classification. */
int flagk_ctx_new(const char* type, int rank, flagk_ctx** out);
void flagk_ctx_free(flagk_ctx* ctx);

/* Positive roots with root/coroot/fundamental-weight coordinates. */
int flagk_roots_json(flagk_ctx* ctx, char** out);

/* Group order, longest element. */
int flagk_weyl_json(flagk_ctx* ctx, char** out);

/* Canonical word, length, and inverse of the element spelled by word. */
int flagk_element_json(flagk_ctx* ctx, const int* word, size_t word_len, char** out);

/* Irreducible character of highest weight lambda with its dimension. */
int flagk_character_json(flagk_ctx* ctx, const long long* lambda, size_t lambda_len,
                         char** out);

/* The path family of shape lambda with its lowering edges. */
int flagk_paths_json(flagk_ctx* ctx, const long long* lambda, size_t lambda_len,
                     char** out);

/* Same family as a DOT digraph. */
int flagk_paths_dot(flagk_ctx* ctx, const long long* lambda, size_t lambda_len,
                    char** out);

/* Structure-sheaf expansion of e^lambda times the class of w. */
int flagk_expand_json(flagk_ctx* ctx, const long long* lambda, size_t lambda_len,
                      const int* word, size_t word_len, char** out);

/*
 * Run a named self-check suite (see the report for the list). Fills *out
 * with the JSON report whenever the suite runs: FLAGK_OK if every check
 * passed, FLAGK_ERR_VERIFY if any failed, FLAGK_ERR_ARGUMENT (no report)
 * for an unknown suite name.
 */
int flagk_verify_json(const char* suite, unsigned long long seed, char** out);

void flagk_string_free(char* s);

#ifdef __cplusplus
}
#endif
