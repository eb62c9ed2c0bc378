#ifndef MVLF_H
#define MVLF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible call.
 */
typedef enum MvlfStatus {
  MVLF_STATUS_OK = 0,
  /**
   * A required pointer argument was null
   */
  MVLF_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8
   */
  MVLF_STATUS_INVALID_UTF8 = 2,
  /**
   * Alphabet, symbol, digit, position or address outside its domain
   */
  MVLF_STATUS_INVALID_ARGUMENT = 3,
  /**
   * Value count does not equal radix^arity
   */
  MVLF_STATUS_LENGTH_MISMATCH = 4,
  /**
   * Tuple length or table arity does not match
   */
  MVLF_STATUS_ARITY_MISMATCH = 5,
  /**
   * Tables use different alphabets
   */
  MVLF_STATUS_ALPHABET_MISMATCH = 6,
  /**
   * No transforming function can satisfy the given arguments and result
   */
  MVLF_STATUS_INCONSISTENT = 7,
  /**
   * The operation would exceed the cell budget
   */
  MVLF_STATUS_RESOURCE_LIMIT = 8,
  /**
   * Malformed text or binary input
   */
  MVLF_STATUS_FORMAT = 9,
  /**
   * Underlying I/O failure
   */
  MVLF_STATUS_IO = 10,
  /**
   * An iterator has no further items
   */
  MVLF_STATUS_DONE = 11,
  /**
   * A panic was caught at the boundary
   */
  MVLF_STATUS_INTERNAL = 12,
} MvlfStatus;

/**
 * Opaque iterator over argument assignments.
 */
typedef struct MvlfFIter MvlfFIter;

/**
 * Opaque result of recovering unknown argument functions.
 */
typedef struct MvlfFSpace MvlfFSpace;

/**
 * Opaque iterator over transforming-function completions.
 */
typedef struct MvlfGIter MvlfGIter;

/**
 * Opaque result of recovering a transforming function.
 */
typedef struct MvlfGSolution MvlfGSolution;

/**
 * Opaque truth table.
 */
typedef struct MvlfTable MvlfTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * failing call on the same thread.
 */
const char *mvlf_last_error_message(void);

/**
 * Frees a string returned by this library.
 */
void mvlf_string_free(char *s);

/**
 * Builds a table from `symbol_count` symbols and `value_count` value
 * indices in address order.
 */
enum MvlfStatus mvlf_table_new(const char *const *symbols,
                               size_t symbol_count,
                               size_t arity,
                               const uint32_t *values,
                               size_t value_count,
                               struct MvlfTable **out);

/**
 * Parses a text-format table.
 */
enum MvlfStatus mvlf_table_parse_text(const char *text, struct MvlfTable **out);

/**
 * Loads a text or binary table file.
 */
enum MvlfStatus mvlf_table_load(const char *path, struct MvlfTable **out);

/**
 * Writes a table in binary form.
 */
enum MvlfStatus mvlf_table_save_binary(const struct MvlfTable *table, const char *path);

void mvlf_table_free(struct MvlfTable *table);

size_t mvlf_table_radix(const struct MvlfTable *table);

size_t mvlf_table_arity(const struct MvlfTable *table);

/**
 * Number of cells, radix^arity.
 */
size_t mvlf_table_len(const struct MvlfTable *table);

enum MvlfStatus mvlf_table_value_at(const struct MvlfTable *table, size_t address, uint32_t *out);

/**
 * Evaluates at a tuple of `len` value indices.
 */
enum MvlfStatus mvlf_table_evaluate(const struct MvlfTable *table,
                                    const uint32_t *digits,
                                    size_t len,
                                    uint32_t *out);

/**
 * Copies the symbol of value index `digit` into a new string.
 */
enum MvlfStatus mvlf_table_symbol(const struct MvlfTable *table, uint32_t digit, char **out);

/**
 * Text form of a table.
 */
enum MvlfStatus mvlf_table_emit_text(const struct MvlfTable *table, char **out);

/**
 * Bracketed vector line; `paper_order` lists values from the highest
 * address down.
 */
enum MvlfStatus mvlf_table_vector_line(const struct MvlfTable *table, bool paper_order, char **out);

bool mvlf_table_equal(const struct MvlfTable *a, const struct MvlfTable *b);

/**
 * Composes `g` with `arg_count` argument tables.
 */
enum MvlfStatus mvlf_compose(const struct MvlfTable *g,
                             const struct MvlfTable *const *args,
                             size_t arg_count,
                             struct MvlfTable **out);

/**
 * Decimal string of radix^(radix^arity).
 */
enum MvlfStatus mvlf_count_functions(size_t radix, size_t arity, char **out);

/**
 * Recovers the transforming function. On [`MvlfStatus::Inconsistent`] the
 * witness argument addresses are written to `witness` (two entries) when it
 * is non-null.
 */
enum MvlfStatus mvlf_solve_g(const struct MvlfTable *const *args,
                             size_t arg_count,
                             const struct MvlfTable *y,
                             struct MvlfGSolution **out,
                             size_t *witness);

void mvlf_gsolution_free(struct MvlfGSolution *sol);

size_t mvlf_gsolution_bound_count(const struct MvlfGSolution *sol);

size_t mvlf_gsolution_free_count(const struct MvlfGSolution *sol);

/**
 * Cell of the partial transforming function: writes the bound value index,
 * or -1 for a free cell.
 */
enum MvlfStatus mvlf_gsolution_cell(const struct MvlfGSolution *sol, size_t address, int64_t *out);

/**
 * Decimal string of the exact number of transforming functions.
 */
enum MvlfStatus mvlf_gsolution_count(const struct MvlfGSolution *sol, char **out);

/**
 * Iterator over all completions; independent of `sol`'s lifetime.
 */
enum MvlfStatus mvlf_gsolution_iter(const struct MvlfGSolution *sol, struct MvlfGIter **out);

/**
 * Next completion, or [`MvlfStatus::Done`].
 */
enum MvlfStatus mvlf_giter_next(struct MvlfGIter *it, struct MvlfTable **out);

void mvlf_giter_free(struct MvlfGIter *it);

/**
 * Recovers the argument functions not listed in `known_positions`
 * (0-based positions of `g`'s variables, paired with `known_tables`).
 */
enum MvlfStatus mvlf_solve_f(const struct MvlfTable *g,
                             const struct MvlfTable *y,
                             const size_t *known_positions,
                             const struct MvlfTable *const *known_tables,
                             size_t known_count,
                             struct MvlfFSpace **out);

void mvlf_fspace_free(struct MvlfFSpace *space);

/**
 * Number of unknown positions, i.e. tables per assignment.
 */
size_t mvlf_fspace_unknown_count(const struct MvlfFSpace *space);

/**
 * Writes the 0-based unknown positions into `out` (capacity `cap`).
 */
enum MvlfStatus mvlf_fspace_unknown_positions(const struct MvlfFSpace *space,
                                              size_t *out,
                                              size_t cap);

/**
 * Decimal string of the exact number of assignments; `"0"` when none exist.
 */
enum MvlfStatus mvlf_fspace_count(const struct MvlfFSpace *space, char **out);

enum MvlfStatus mvlf_fspace_iter(const struct MvlfFSpace *space, struct MvlfFIter **out);

/**
 * Next assignment: writes one new table per unknown position into `out`
 * (capacity `cap`), or returns [`MvlfStatus::Done`].
 */
enum MvlfStatus mvlf_fiter_next(struct MvlfFIter *it, struct MvlfTable **out, size_t cap);

void mvlf_fiter_free(struct MvlfFIter *it);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MVLF_H */
