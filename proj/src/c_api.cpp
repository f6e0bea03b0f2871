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

#include "ice/ice_c.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <new>
#include <sstream>
#include <string>

#include "ice/augment.hpp"
#include "ice/bias.hpp"
#include "ice/column_embedding.hpp"
#include "ice/corpus.hpp"
#include "ice/embedding.hpp"
#include "ice/error.hpp"
#include "ice/fixtures.hpp"
#include "ice/questions.hpp"
#include "ice/selection.hpp"
#include "ice/table.hpp"

struct ice_tables {
  std::vector<ice::Relation> relations;
  ice::TableMap by_id;
};
struct ice_space {
  ice::VectorSpace space;
};
struct ice_index {
  ice::IceIndex index;
};
struct ice_questions {
  std::vector<ice::AnnotatedQuestion> questions;
};
struct ice_lexicon {
  ice::SynonymLexicon lexicon;
};

namespace {

thread_local std::string g_last_error;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const char* path) {
  if (!path) throw ice::UsageError("missing path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open '") + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(std::string("error reading '") + path + "'");
  return std::move(ss).str();
}

void write_file(const char* path, const std::string& bytes) {
  if (!path) throw ice::UsageError("missing path");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(std::string("cannot open '") + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError(std::string("error writing '") + path + "'");
}

ice::TableFormat format_or_throw(const char* format) {
  const auto f = ice::parse_table_format(format ? format : "");
  if (!f) {
    throw ice::UsageError(std::string("unknown table format '") +
                          (format ? format : "") + "'");
  }
  return *f;
}

template <typename T>
void require(const T* p, const char* what) {
  if (!p) throw ice::UsageError(std::string(what) + " is null");
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
ice_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ICE_OK;
  } catch (const ice::UsageError& e) {
    g_last_error = e.what();
    return ICE_ERR_USAGE;
  } catch (const ice::DataError& e) {
    g_last_error = e.what();
    return ICE_ERR_DATA;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return ICE_ERR_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ICE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ICE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ICE_ERR_INTERNAL;
  }
}

ice_tables* make_tables(std::vector<ice::Relation> relations) {
  auto* t = new ice_tables{std::move(relations), {}};
  t->by_id = ice::make_table_map(t->relations);
  return t;
}

}  // namespace

extern "C" {

const char* ice_version(void) { return ICE_VERSION_STRING; }

const char* ice_last_error(void) { return g_last_error.c_str(); }

ice_status ice_file_digest(const char* path, char* out, size_t out_size) {
  return guarded([&] {
    require(out, "output buffer");
    if (out_size < 65) throw ice::UsageError("digest buffer needs 65 bytes");
    const std::string bytes = read_file(path);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr)) {
      throw std::runtime_error("SHA-256 failed");
    }
    for (unsigned int i = 0; i < len; ++i) std::snprintf(out + 2 * i, 3, "%02x", md[i]);
  });
}

ice_status ice_tables_load(const char* path, const char* format,
                           const char* csv_table_id, ice_tables** out) {
  return guarded([&] {
    require(out, "out");
    const auto f = format_or_throw(format);
    const std::string bytes = read_file(path);
    *out = make_tables(ice::parse_table(bytes, f, csv_table_id ? csv_table_id : "csv"));
  });
}

ice_status ice_tables_parse(const char* data, size_t size, const char* format,
                            const char* csv_table_id, ice_tables** out) {
  return guarded([&] {
    require(out, "out");
    if (!data && size) throw ice::UsageError("data is null");
    const auto f = format_or_throw(format);
    *out = make_tables(ice::parse_table(std::string_view(data ? data : "", size), f,
                                        csv_table_id ? csv_table_id : "csv"));
  });
}

void ice_tables_free(ice_tables* tables) { delete tables; }

size_t ice_tables_count(const ice_tables* tables) {
  return tables ? tables->relations.size() : 0;
}

size_t ice_tables_column_total(const ice_tables* tables) {
  size_t n = 0;
  if (tables) for (const auto& r : tables->relations) n += r.columns.size();
  return n;
}

size_t ice_tables_row_total(const ice_tables* tables) {
  size_t n = 0;
  if (tables) for (const auto& r : tables->relations) n += r.row_count();
  return n;
}

ice_status ice_tables_write(const ice_tables* tables, const char* path) {
  return guarded([&] {
    require(tables, "tables");
    write_file(path, ice::serialize_wikisql(tables->relations));
  });
}

ice_status ice_corpus_write(const ice_tables* tables, size_t shuffles,
                            uint64_t seed, const char* path,
                            size_t* sentence_count) {
  return guarded([&] {
    require(tables, "tables");
    const auto corpus = ice::build_corpus(tables->relations, shuffles, seed);
    write_file(path, ice::serialize_corpus(corpus));
    if (sentence_count) *sentence_count = corpus.size();
  });
}

void ice_train_config_default(ice_train_config* config) {
  if (!config) return;
  const ice::TrainConfig d;
  *config = {d.dimension, d.window,   d.negatives, d.epochs,
             d.learning_rate, d.min_count, d.seed, d.threads};
}

ice_status ice_space_train(const char* corpus_path, const ice_train_config* config,
                           ice_space** out, double* epoch_loss,
                           size_t loss_capacity) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    ice::TrainConfig cfg;
    cfg.dimension = config->dimension;
    cfg.window = config->window;
    cfg.negatives = config->negatives;
    cfg.epochs = config->epochs;
    cfg.learning_rate = config->learning_rate;
    cfg.min_count = config->min_count;
    cfg.seed = config->seed;
    cfg.threads = config->threads;
    cfg.validate();
    const auto sentences = ice::parse_corpus(read_file(corpus_path));
    ice::TrainStats stats;
    auto space = ice::train_skipgram(
        std::span<const std::vector<std::string>>(sentences), cfg, &stats);
    if (epoch_loss) {
      const size_t n = std::min(loss_capacity, stats.epoch_loss.size());
      std::copy_n(stats.epoch_loss.begin(), n, epoch_loss);
    }
    *out = new ice_space{std::move(space)};
  });
}

ice_status ice_space_load(const char* path, ice_space** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ice_space{ice::load_vectors(read_file(path))};
  });
}

ice_status ice_space_save(const ice_space* space, const char* path) {
  return guarded([&] {
    require(space, "space");
    write_file(path, ice::save_vectors(space->space));
  });
}

void ice_space_free(ice_space* space) { delete space; }

size_t ice_space_dimension(const ice_space* space) {
  return space ? space->space.dimension() : 0;
}

size_t ice_space_size(const ice_space* space) { return space ? space->space.size() : 0; }

ice_status ice_space_lookup(const ice_space* space, const char* token,
                            double* out, size_t capacity) {
  return guarded([&] {
    require(space, "space");
    require(token, "token");
    require(out, "out");
    if (capacity < space->space.dimension()) {
      throw ice::UsageError("output buffer smaller than the vector dimension");
    }
    const auto v = space->space.lookup(token);
    if (!v) throw ice::DataError(std::string("token '") + token + "' is out of vocabulary");
    std::copy(v->begin(), v->end(), out);
  });
}

ice_status ice_index_build(const ice_tables* tables, const ice_space* space,
                           ice_index** out, size_t* skipped_columns) {
  return guarded([&] {
    require(tables, "tables");
    require(space, "space");
    require(out, "out");
    auto built = ice::build_index(tables->relations, space->space);
    if (skipped_columns) *skipped_columns = built.skipped.size();
    *out = new ice_index{std::move(built.index)};
  });
}

ice_status ice_index_load(const char* path, ice_index** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ice_index{ice::load_index(read_file(path))};
  });
}

ice_status ice_index_save(const ice_index* index, const char* path) {
  return guarded([&] {
    require(index, "index");
    write_file(path, ice::save_index(index->index));
  });
}

void ice_index_free(ice_index* index) { delete index; }

size_t ice_index_size(const ice_index* index) { return index ? index->index.size() : 0; }

size_t ice_index_dimension(const ice_index* index) {
  return index ? index->index.dimension() : 0;
}

ice_status ice_questions_load(const char* path, ice_questions** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ice_questions{ice::parse_questions(read_file(path))};
  });
}

void ice_questions_free(ice_questions* questions) { delete questions; }

size_t ice_questions_count(const ice_questions* questions) {
  return questions ? questions->questions.size() : 0;
}

ice_status ice_bias(const ice_questions* questions, const ice_tables* tables,
                    int exclude_zero_condition, ice_bias_report* out) {
  return guarded([&] {
    require(questions, "questions");
    require(tables, "tables");
    require(out, "out");
    const auto r = ice::bias_report(questions->questions, tables->by_id,
                                    {exclude_zero_condition != 0});
    *out = {r.selection_pct, r.where_any_pct, r.where_all_pct,
            r.no_match_pct,  r.question_count, r.zero_condition_count};
  });
}

ice_status ice_lexicon_load(const char* path, ice_lexicon** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ice_lexicon{ice::parse_lexicon(read_file(path))};
  });
}

void ice_lexicon_free(ice_lexicon* lexicon) { delete lexicon; }

size_t ice_lexicon_size(const ice_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon.entry_count() : 0;
}

ice_status ice_augment(const ice_questions* questions, const ice_tables* tables,
                       const ice_lexicon* lexicon, const ice_space* space,
                       int include_where_headers, const char* questions_out,
                       const char* records_out, ice_augment_summary* out) {
  return guarded([&] {
    require(questions, "questions");
    require(tables, "tables");
    require(lexicon, "lexicon");
    require(space, "space");
    ice::AugmentOptions options;
    options.include_where_headers = include_where_headers != 0;
    const auto result = ice::augment_dataset(questions->questions, tables->by_id,
                                             lexicon->lexicon, space->space, options);
    write_file(questions_out, ice::serialize_questions(result.questions));
    if (records_out) write_file(records_out, ice::serialize_records(result.records));
    if (out) {
      *out = {questions->questions.size(), result.records.size(), result.rephrased,
              result.degenerate, result.yield_pct};
    }
  });
}

ice_status ice_eval_select(const ice_questions* questions, const ice_tables* tables,
                           const ice_index* index, const ice_space* space,
                           const char* results_path, ice_selection_summary* out) {
  return guarded([&] {
    require(questions, "questions");
    require(tables, "tables");
    require(space, "space");
    const auto eval =
        index ? ice::evaluate_selection(questions->questions, tables->by_id,
                                        index->index, space->space)
              : ice::evaluate_selection(questions->questions, tables->relations,
                                        space->space);
    if (results_path) write_file(results_path, ice::format_selection_results(eval));
    if (out) {
      *out = {eval.results.size(), eval.correct, eval.unembeddable.size(),
              eval.accuracy_pct};
    }
  });
}

ice_status ice_fixtures_write(const char* kind, uint64_t seed, size_t questions,
                              const char* out_dir) {
  return guarded([&] {
    require(kind, "kind");
    require(out_dir, "out_dir");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError(std::string("cannot create '") + out_dir + "': " + ec.message());
    const auto dir = std::filesystem::path(out_dir);
    const std::string kind_name = kind;
    if (kind_name == "selection") {
      ice::SelectionBenchmarkConfig cfg;
      cfg.questions = questions;
      const auto fx = ice::selection_benchmark(seed, cfg);
      write_file((dir / "tables.jsonl").c_str(), ice::serialize_wikisql(fx.tables));
      write_file((dir / "questions.jsonl").c_str(), ice::serialize_questions(fx.questions));
    } else if (kind_name == "cooccurrence") {
      const std::vector<ice::Relation> tables{ice::cooccurrence_table(seed)};
      write_file((dir / "tables.jsonl").c_str(), ice::serialize_wikisql(tables));
    } else {
      throw ice::UsageError("unknown fixture kind '" + kind_name + "'");
    }
  });
}

}  // extern "C"
