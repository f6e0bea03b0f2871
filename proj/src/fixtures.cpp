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

#include "ice/fixtures.hpp"

#include <set>

#include "ice/error.hpp"
#include "ice/random.hpp"
#include "json.hpp"

namespace ice {
namespace {

class WordMaker {
 public:
  explicit WordMaker(std::uint64_t seed) : rng_(stream_key(seed, 0xf1ULL)) {}

  std::string next() {
    static constexpr std::string_view kOnsets = "bdfgklmnprstvz";
    static constexpr std::string_view kVowels = "aeiou";
    for (;;) {
      std::string w;
      const std::size_t syllables = 3 + rng_.below(2);
      for (std::size_t i = 0; i < syllables; ++i) {
        w.push_back(kOnsets[rng_.below(kOnsets.size())]);
        w.push_back(kVowels[rng_.below(kVowels.size())]);
      }
      if (used_.insert(w).second) return w;
    }
  }

  CounterRng& rng() { return rng_; }

 private:
  CounterRng rng_;
  std::set<std::string> used_;
};

std::vector<std::string> make_vocab(WordMaker& words, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(words.next());
  return v;
}

}  // namespace

Fixture selection_benchmark(std::uint64_t seed,
                            const SelectionBenchmarkConfig& config) {
  if (config.tables == 0 || config.columns == 0 || config.rows == 0 ||
      config.words_per_column == 0 || config.words_per_cell == 0) {
    throw UsageError("selection benchmark dimensions must be positive");
  }
  WordMaker words(seed);
  auto& rng = words.rng();
  Fixture fx;

  // Per table and column: row indices whose value is unique in the column.
  std::vector<std::vector<std::vector<std::size_t>>> unique_rows;
  for (std::size_t t = 0; t < config.tables; ++t) {
    Relation rel;
    rel.table_id = "bench-" + std::to_string(t);
    unique_rows.emplace_back();
    for (std::size_t c = 0; c < config.columns; ++c) {
      const auto vocab = make_vocab(words, config.words_per_column);
      Column col;
      col.header = "c" + std::to_string(c);
      std::multiset<std::string> values;
      for (std::size_t r = 0; r < config.rows; ++r) {
        std::string raw;
        for (std::size_t k = 0; k < config.words_per_cell; ++k) {
          if (k) raw.push_back(' ');
          raw += vocab[rng.below(vocab.size())];
        }
        values.insert(raw);
        col.cells.push_back(Cell::from_raw(std::move(raw)));
      }
      std::vector<std::size_t> unique;
      for (std::size_t r = 0; r < config.rows; ++r) {
        if (values.count(col.cells[r].raw) == 1) unique.push_back(r);
      }
      unique_rows.back().push_back(std::move(unique));
      rel.columns.push_back(std::move(col));
    }
    fx.tables.push_back(std::move(rel));
  }

  std::size_t attempts = 0;
  while (fx.questions.size() < config.questions) {
    if (++attempts > config.questions * 1000) {
      throw UsageError("selection benchmark has too few unique cell values");
    }
    const std::size_t t = rng.below(config.tables);
    const std::size_t c = rng.below(config.columns);
    const auto& unique = unique_rows[t][c];
    if (unique.empty()) continue;
    const std::size_t r = unique[rng.below(unique.size())];
    const std::string& value = fx.tables[t].columns[c].cells[r].raw;

    AnnotatedQuestion q;
    q.question = "Which entry lists " + value + "?";
    q.table_id = fx.tables[t].table_id;
    q.select_column = c;
    q.aggregation = 0;
    q.where_conditions.push_back({c, 0, value});
    nlohmann::ordered_json sql = {
        {"sel", c},
        {"conds", nlohmann::ordered_json::array({nlohmann::ordered_json::array({c, 0, value})})},
        {"agg", 0}};
    q.sql_json = sql.dump();
    nlohmann::ordered_json record = {
        {"table_id", q.table_id}, {"question", q.question}, {"sql", sql}};
    q.record_json = record.dump();
    fx.questions.push_back(std::move(q));
  }
  return fx;
}

Relation cooccurrence_table(std::uint64_t seed, std::size_t rows,
                            std::size_t filler_columns) {
  if (rows < 2) throw UsageError("co-occurrence table needs at least 2 rows");
  WordMaker words(seed);
  auto& rng = words.rng();
  Relation rel;
  rel.table_id = "cooccurrence";

  const auto filler_column = [&](std::vector<std::string> anchors) {
    const auto vocab = make_vocab(words, 8);
    Column col;
    for (std::size_t r = 0; r < rows; ++r) {
      std::string raw = r < anchors.size() ? anchors[r]
                                           : vocab[rng.below(vocab.size())];
      col.cells.push_back(Cell::from_raw(std::move(raw)));
    }
    return col;
  };

  rel.columns.push_back(filler_column({"x", "y"}));
  rel.columns.back().header = "first";
  rel.columns.push_back(filler_column({"z"}));
  rel.columns.back().header = "second";
  for (std::size_t i = 0; i < filler_columns; ++i) {
    rel.columns.push_back(filler_column({}));
    rel.columns.back().header = "filler" + std::to_string(i);
  }
  return rel;
}

}  // namespace ice
