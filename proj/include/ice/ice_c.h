//
// Copyright 2026 The ICE Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

/* C interface to the ICE toolkit: column content embeddings and WikiSQL
 * de-biasing. Objects are opaque handles created by *_load / *_build /
 * *_train functions and released with the matching *_free. Every fallible
 * call returns an ice_status; on failure ice_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Handles are immutable after creation and may be shared across threads. */

#ifndef ICE_ICE_C_H_
#define ICE_ICE_C_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef ICE_BUILDING_LIBRARY
#    define ICE_API __declspec(dllexport)
#  else
#    define ICE_API __declspec(dllimport)
#  endif
#else
#  define ICE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ice_status {
  ICE_OK = 0,
  ICE_ERR_USAGE = 1,    /* invalid argument or configuration */
  ICE_ERR_DATA = 2,     /* malformed or inconsistent input data */
  ICE_ERR_IO = 3,       /* file could not be read or written */
  ICE_ERR_INTERNAL = 4
} ice_status;

typedef struct ice_tables ice_tables;
typedef struct ice_space ice_space;
typedef struct ice_index ice_index;
typedef struct ice_questions ice_questions;
typedef struct ice_lexicon ice_lexicon;

ICE_API const char* ice_version(void);
ICE_API const char* ice_last_error(void);

/* Lowercase hex SHA-256 of a file's bytes; `out` holds at least 65 chars. */
ICE_API ice_status ice_file_digest(const char* path, char* out, size_t out_size);

/* ---- tables ---------------------------------------------------------- */

/* format: "wikisql_jsonl" or "csv". csv_table_id names a CSV table and is
 * ignored for JSON lines (NULL means "csv"). */
ICE_API ice_status ice_tables_load(const char* path, const char* format,
                                   const char* csv_table_id, ice_tables** out);
ICE_API ice_status ice_tables_parse(const char* data, size_t size,
                                    const char* format, const char* csv_table_id,
                                    ice_tables** out);
ICE_API void ice_tables_free(ice_tables* tables);
ICE_API size_t ice_tables_count(const ice_tables* tables);
ICE_API size_t ice_tables_column_total(const ice_tables* tables);
ICE_API size_t ice_tables_row_total(const ice_tables* tables);
/* WikiSQL JSON lines, all cells as strings. */
ICE_API ice_status ice_tables_write(const ice_tables* tables, const char* path);

/* ---- corpus ---------------------------------------------------------- */

/* Writes `shuffles` cell-shuffled sentences per column, one per line. */
ICE_API ice_status ice_corpus_write(const ice_tables* tables, size_t shuffles,
                                    uint64_t seed, const char* path,
                                    size_t* sentence_count);

/* ---- vectors --------------------------------------------------------- */

typedef struct ice_train_config {
  size_t dimension;
  size_t window;
  size_t negatives;
  size_t epochs;
  double learning_rate;
  size_t min_count;
  uint64_t seed;
  size_t threads; /* > 1: lock-free parallel updates, not reproducible */
} ice_train_config;

ICE_API void ice_train_config_default(ice_train_config* config);

/* Trains skip-gram vectors on a corpus file (one sentence per line).
 * epoch_loss, when non-NULL, receives up to loss_capacity per-epoch mean
 * losses. */
ICE_API ice_status ice_space_train(const char* corpus_path,
                                   const ice_train_config* config,
                                   ice_space** out, double* epoch_loss,
                                   size_t loss_capacity);
ICE_API ice_status ice_space_load(const char* path, ice_space** out);
ICE_API ice_status ice_space_save(const ice_space* space, const char* path);
ICE_API void ice_space_free(ice_space* space);
ICE_API size_t ice_space_dimension(const ice_space* space);
ICE_API size_t ice_space_size(const ice_space* space);
/* ICE_ERR_DATA when the token is out of vocabulary. */
ICE_API ice_status ice_space_lookup(const ice_space* space, const char* token,
                                    double* out, size_t capacity);

/* ---- column embeddings ----------------------------------------------- */

/* Columns without any in-vocabulary cell are skipped and counted. */
ICE_API ice_status ice_index_build(const ice_tables* tables,
                                   const ice_space* space, ice_index** out,
                                   size_t* skipped_columns);
ICE_API ice_status ice_index_load(const char* path, ice_index** out);
ICE_API ice_status ice_index_save(const ice_index* index, const char* path);
ICE_API void ice_index_free(ice_index* index);
ICE_API size_t ice_index_size(const ice_index* index);
ICE_API size_t ice_index_dimension(const ice_index* index);

/* ---- questions and bias ---------------------------------------------- */

ICE_API ice_status ice_questions_load(const char* path, ice_questions** out);
ICE_API void ice_questions_free(ice_questions* questions);
ICE_API size_t ice_questions_count(const ice_questions* questions);

typedef struct ice_bias_report {
  double selection_pct;
  double where_any_pct;
  double where_all_pct;
  double no_match_pct;
  size_t question_count;
  size_t zero_condition_count;
} ice_bias_report;

ICE_API ice_status ice_bias(const ice_questions* questions,
                            const ice_tables* tables,
                            int exclude_zero_condition, ice_bias_report* out);

/* ---- augmentation ---------------------------------------------------- */

ICE_API ice_status ice_lexicon_load(const char* path, ice_lexicon** out);
ICE_API void ice_lexicon_free(ice_lexicon* lexicon);
ICE_API size_t ice_lexicon_size(const ice_lexicon* lexicon);

typedef struct ice_augment_summary {
  size_t question_count;
  size_t mentions;   /* questions with an eligible header mention */
  size_t rephrased;
  size_t degenerate;
  double yield_pct;
} ice_augment_summary;

/* Writes the augmented question file and a sidecar of augmentation records
 * (records_path may be NULL). */
ICE_API ice_status ice_augment(const ice_questions* questions,
                               const ice_tables* tables,
                               const ice_lexicon* lexicon,
                               const ice_space* space, int include_where_headers,
                               const char* questions_out, const char* records_out,
                               ice_augment_summary* out);

/* ---- selection baseline ---------------------------------------------- */

typedef struct ice_selection_summary {
  size_t question_count;
  size_t correct;
  size_t unembeddable;
  double accuracy_pct;
} ice_selection_summary;

/* index may be NULL, in which case it is built from tables. results_path
 * (optional) receives one line per question. */
ICE_API ice_status ice_eval_select(const ice_questions* questions,
                                   const ice_tables* tables,
                                   const ice_index* index,
                                   const ice_space* space,
                                   const char* results_path,
                                   ice_selection_summary* out);

/* ---- fixtures -------------------------------------------------------- */

/* kind "selection": writes <dir>/tables.jsonl and <dir>/questions.jsonl.
 * kind "cooccurrence": writes <dir>/tables.jsonl only. */
ICE_API ice_status ice_fixtures_write(const char* kind, uint64_t seed,
                                      size_t questions, const char* out_dir);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* ICE_ICE_C_H_ */
