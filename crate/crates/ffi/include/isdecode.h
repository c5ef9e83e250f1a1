#ifndef ISDECODE_H
#define ISDECODE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum IsdStatus {
  ISD_STATUS_OK = 0,
  // No codeword within the decoding radius.
  ISD_STATUS_INCOMPLETE = 1,
  // The enumerator has no further patterns.
  ISD_STATUS_EXHAUSTED = 2,
  ISD_STATUS_NULL_POINTER = 3,
  ISD_STATUS_INVALID_ARGUMENT = 4,
  ISD_STATUS_DIMENSION_MISMATCH = 5,
  ISD_STATUS_NOT_PRIME = 6,
  ISD_STATUS_RANK_DEFICIENT = 7,
  ISD_STATUS_GUARD_EXCEEDED = 8,
  ISD_STATUS_UNKNOWN_DISTANCE = 9,
  ISD_STATUS_PARSE = 10,
  ISD_STATUS_OVERFLOW = 11,
  ISD_STATUS_INTERNAL = 12,
} IsdStatus;

// Opaque linear code handle.
typedef struct IsdCode IsdCode;

// Opaque pattern enumerator handle.
typedef struct IsdEnumerator IsdEnumerator;

typedef struct IsdDecodeStats {
  uint64_t patterns_inspected;
  uint64_t syndrome_products;
  // Weight of the returned error; zero when incomplete.
  size_t error_weight;
} IsdDecodeStats;

// Copies the last error message of this thread into `buf` as a
// NUL-terminated string, truncating if needed. Returns the full message
// length in bytes, excluding the terminator.
//
// # Safety
// `buf` must be null or valid for `buf_len` bytes.
size_t isd_last_error_message(char *buf, size_t buf_len);

// Builds a code from a row-major `k x n` generator over GF(q).
// `distance` is the known minimum distance, or 0 if unknown.
//
// # Safety
// `entries` must point to `k * n` values and `out` must be writable.
enum IsdStatus isd_code_from_generator(uint32_t q,
                                       size_t k,
                                       size_t n,
                                       const uint32_t *entries,
                                       size_t distance,
                                       struct IsdCode **out);

// Parses a code from the text file format used by the command-line tool.
//
// # Safety
// `text` must be a NUL-terminated string and `out` must be writable.
enum IsdStatus isd_code_parse(const char *text, struct IsdCode **out);

// # Safety
// `code` must be null or a handle from this library not yet freed.
void isd_code_free(struct IsdCode *code);

// # Safety
// `code` must be a valid handle.
size_t isd_code_n(const struct IsdCode *code);

// # Safety
// `code` must be a valid handle.
size_t isd_code_k(const struct IsdCode *code);

// # Safety
// `code` must be a valid handle.
uint32_t isd_code_q(const struct IsdCode *code);

// Known minimum distance, or 0 if unknown.
//
// # Safety
// `code` must be a valid handle.
size_t isd_code_distance(const struct IsdCode *code);

// Computes the minimum distance by enumeration and stores it in the handle.
//
// # Safety
// `code` must be a valid handle and `out` writable.
enum IsdStatus isd_code_min_distance(struct IsdCode *code, size_t *out);

// # Safety
// `code` must be a valid handle and `out` writable.
enum IsdStatus isd_code_covering_radius(const struct IsdCode *code, size_t *out);

// Encodes a length-`k` message through the systematic generator and
// writes the length-`n` codeword.
//
// # Safety
// Pointers must be valid for the given lengths.
enum IsdStatus isd_encode(const struct IsdCode *code,
                          const uint32_t *message,
                          size_t message_len,
                          uint32_t *codeword,
                          size_t codeword_len);

// Writes the length-`(n - k)` syndrome of a length-`n` word.
//
// # Safety
// Pointers must be valid for the given lengths.
enum IsdStatus isd_syndrome(const struct IsdCode *code,
                            const uint32_t *word,
                            size_t word_len,
                            uint32_t *syndrome,
                            size_t syndrome_len);

// Unique decoding up to `(d - 1) / 2`. Requires a known distance.
// Returns `ISD_STATUS_INCOMPLETE` when no codeword lies within the radius.
// `codeword`, `error` and `stats` may each be null; non-null buffers must
// hold `n` values.
//
// # Safety
// Pointers must be valid for the given lengths.
enum IsdStatus isd_unique_decode(const struct IsdCode *code,
                                 const uint32_t *received,
                                 size_t received_len,
                                 uint32_t *codeword,
                                 uint32_t *error,
                                 struct IsdDecodeStats *stats);

// Minimum-distance decoding over information-set patterns of weight at
// most `radius`. Buffer conventions match [`isd_unique_decode`].
//
// # Safety
// Pointers must be valid for the given lengths.
enum IsdStatus isd_md_decode(const struct IsdCode *code,
                             const uint32_t *received,
                             size_t received_len,
                             size_t radius,
                             uint32_t *codeword,
                             uint32_t *error,
                             struct IsdDecodeStats *stats);

// Number of q-ary words of length `n` within Hamming distance `t` of a
// fixed word. Returns `ISD_STATUS_OVERFLOW` if it exceeds `uint64_t`.
//
// # Safety
// `out` must be writable.
enum IsdStatus isd_ball_volume(size_t n, size_t t, uint32_t q, uint64_t *out);

// Enumerates all length-`k` vectors over GF(q) of weight at most
// `max_weight`, in the decoder's pattern order.
//
// # Safety
// `out` must be writable.
enum IsdStatus isd_enum_new(uint32_t q, size_t k, size_t max_weight, struct IsdEnumerator **out);

// Writes the next pattern into `pattern` (length `k`), or returns
// `ISD_STATUS_EXHAUSTED`.
//
// # Safety
// `it` must be a valid handle and `pattern` valid for `pattern_len` values.
enum IsdStatus isd_enum_next(struct IsdEnumerator *it, uint32_t *pattern, size_t pattern_len);

// Patterns not yet returned. Returns `ISD_STATUS_OVERFLOW` if the count
// exceeds `uint64_t`.
//
// # Safety
// `it` must be a valid handle and `out` writable.
enum IsdStatus isd_enum_remaining(const struct IsdEnumerator *it, uint64_t *out);

// # Safety
// `it` must be null or a handle from this library not yet freed.
void isd_enum_free(struct IsdEnumerator *it);

#endif  /* ISDECODE_H */
