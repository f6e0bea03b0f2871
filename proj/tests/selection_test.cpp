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

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "ice/column_embedding.hpp"
#include "ice/error.hpp"
#include "ice/fixtures.hpp"
#include "ice/selection.hpp"

namespace {

ice::Relation two_columns() {
  ice::Relation rel;
  rel.table_id = "t";
  rel.columns = {ice::Column{"Team", {ice::Cell::from_raw("hawks"), ice::Cell::from_raw("bulls")}},
                 ice::Column{"Year", {ice::Cell::from_raw("1999"), ice::Cell::from_raw("2004")}}};
  return rel;
}

ice::VectorSpace two_space() {
  return ice::load_vectors("hawks 1 0\nbulls 0.9 0.1\n1999 0 1\n2004 0.1 0.9\nwhich 0.5 0.5\n");
}

ice::AnnotatedQuestion ask(std::string text, std::size_t gold) {
  ice::AnnotatedQuestion q;
  q.question = std::move(text);
  q.table_id = "t";
  q.select_column = gold;
  return q;
}

}  // namespace

TEST_CASE("select_column ranks columns by content similarity") {
  const auto rel = two_columns();
  const auto space = two_space();
  const auto index = ice::build_index(std::span(&rel, 1), space).index;

  const auto ranked = ice::select_column("which hawks", rel, index, space);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].column == 0);
  CHECK(ranked[0].similarity >= ranked[1].similarity);
  CHECK(ice::select_column("which 2004", rel, index, space)[0].column == 1);

  CHECK_THROWS_AS(ice::select_column("unknown words", rel, index, space), ice::DataError);
}

TEST_CASE("single-column table always selects column 0") {
  ice::Relation rel;
  rel.table_id = "one";
  rel.columns = {ice::Column{"Only", {ice::Cell::from_raw("hawks")}}};
  const auto space = two_space();
  const auto index = ice::build_index(std::span(&rel, 1), space).index;
  for (const char* q : {"hawks", "1999", "which"}) {
    const auto ranked = ice::select_column(q, rel, index, space);
    REQUIRE(ranked.size() == 1);
    CHECK(ranked[0].column == 0);
  }
}

TEST_CASE("identical columns tie toward the lower index") {
  ice::Relation rel;
  rel.table_id = "t";
  rel.columns = {ice::Column{"a", {ice::Cell::from_raw("hawks")}},
                 ice::Column{"b", {ice::Cell::from_raw("1999")}},
                 ice::Column{"c", {ice::Cell::from_raw("hawks")}}};
  const auto space = two_space();
  const auto index = ice::build_index(std::span(&rel, 1), space).index;
  const auto ranked = ice::select_column("hawks", rel, index, space);
  CHECK(ranked[0].column == 0);
  CHECK(ranked[1].column == 2);
  CHECK(ranked[0].similarity == ranked[1].similarity);
}

TEST_CASE("evaluate_selection counts hits and unembeddable questions") {
  const std::vector<ice::Relation> tables{two_columns()};
  const auto space = two_space();
  SUBCASE("all correct") {
    const std::vector<ice::AnnotatedQuestion> qs{ask("hawks?", 0), ask("in 1999", 1)};
    const auto eval = ice::evaluate_selection(qs, tables, space);
    CHECK(eval.accuracy_pct == 100.0);
    CHECK(eval.correct == 2);
    CHECK(ice::format_selection_summary(eval).find("100") != std::string::npos);
  }
  SUBCASE("all wrong") {
    const std::vector<ice::AnnotatedQuestion> qs{ask("hawks?", 1), ask("in 1999", 0)};
    CHECK(ice::evaluate_selection(qs, tables, space).accuracy_pct == 0.0);
  }
  SUBCASE("no embedding counts as a miss") {
    const std::vector<ice::AnnotatedQuestion> qs{ask("hawks?", 0), ask("zzz", 0)};
    const auto eval = ice::evaluate_selection(qs, tables, space);
    CHECK(eval.accuracy_pct == 50.0);
    CHECK(eval.unembeddable == std::vector<std::size_t>{1});
    CHECK(ice::format_selection_results(eval) == "0\t0\t0\t" +
              [&] {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6g", eval.results[0].ranked[0].similarity);
                return std::string(buf);
              }() + "\n1\t0\t-1\tnan\n");
  }
}

TEST_CASE("synthetic benchmark: disjoint vocabularies are recovered") {
  const auto fx = ice::selection_benchmark(5);
  std::vector<std::vector<std::string>> sentences;
  for (const auto& s : ice::build_corpus(fx.tables, 10, 5)) sentences.push_back(s.tokens);
  ice::TrainConfig cfg;
  cfg.dimension = 50;
  const auto space = ice::train_skipgram(sentences, cfg);
  const auto eval = ice::evaluate_selection(fx.questions, fx.tables, space);
  CHECK(eval.accuracy_pct >= 95.0);
}

TEST_CASE("headers and global scaling do not change the prediction (property)") {
  std::mt19937_64 rng(3);
  const auto fx = ice::selection_benchmark(9);
  std::vector<std::vector<std::string>> sentences;
  for (const auto& s : ice::build_corpus(fx.tables, 10, 9)) sentences.push_back(s.tokens);
  ice::TrainConfig cfg;
  cfg.dimension = 32;
  cfg.epochs = 3;
  const auto space = ice::train_skipgram(sentences, cfg);

  std::vector<double> scaled;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (double v : space.row(i)) scaled.push_back(v * 7.5);
  const ice::VectorSpace big(space.dimension(), space.words(), scaled);

  auto renamed = fx.tables;
  for (auto& rel : renamed)
    for (auto& col : rel.columns) col.header = "h" + std::to_string(rng());

  const auto base = ice::evaluate_selection(fx.questions, fx.tables, space);
  const auto other = ice::evaluate_selection(fx.questions, renamed, space);
  const auto grown = ice::evaluate_selection(fx.questions, fx.tables, big);
  REQUIRE(base.results.size() == other.results.size());
  for (std::size_t i = 0; i < base.results.size(); ++i) {
    CHECK(base.results[i].ranked[0].column == other.results[i].ranked[0].column);
    CHECK(base.results[i].ranked[0].column == grown.results[i].ranked[0].column);
  }
}
