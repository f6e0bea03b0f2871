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

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "ice/corpus.hpp"
#include "ice/error.hpp"
#include "oracles.hpp"

using Tokens = std::vector<std::string>;

namespace {

ice::Column team_column() {
  ice::Column col;
  col.header = "Team";
  for (const char* raw : {"Calgary Stampeders", "Ottawa Renegades", "Toronto Argonauts",
                          "Hamilton Tiger-Cats"}) {
    col.cells.push_back(ice::Cell::from_raw(raw));
  }
  return col;
}

ice::Relation three_column_table() {
  ice::Relation rel;
  rel.table_id = "cfl";
  rel.columns.push_back(team_column());
  ice::Column year, wins;
  for (const char* y : {"2004", "2005", "2006", "2007"}) year.cells.push_back(ice::Cell::from_raw(y));
  for (const char* w : {"10", "", "7", "12"}) wins.cells.push_back(ice::Cell::from_raw(w));
  rel.columns.push_back(year);
  rel.columns.push_back(wins);
  return rel;
}

}  // namespace

TEST_CASE("column_sentence concatenates cells in permutation order") {
  const auto col = team_column();
  const std::vector<std::size_t> identity{0, 1, 2, 3};
  CHECK(ice::column_sentence(col, identity).tokens ==
        Tokens{"calgary", "stampeders", "ottawa", "renegades", "toronto", "argonauts",
               "hamilton", "tiger-cats"});

  ice::Column single;
  single.cells.push_back(ice::Cell::from_raw("Only Cell"));
  CHECK(ice::column_sentence(single, std::vector<std::size_t>{0}).tokens ==
        Tokens{"only", "cell"});

  ice::Column pair;
  pair.cells.push_back(ice::Cell::from_raw("first one"));
  pair.cells.push_back(ice::Cell::from_raw("second"));
  CHECK(ice::column_sentence(pair, std::vector<std::size_t>{1, 0}).tokens ==
        Tokens{"second", "first", "one"});
}

TEST_CASE("column_sentence skips empty cells and rejects bad permutations") {
  ice::Column col;
  col.cells.push_back(ice::Cell::from_raw(""));
  col.cells.push_back(ice::Cell::from_raw("b"));
  CHECK(ice::column_sentence(col, std::vector<std::size_t>{0, 1}).tokens == Tokens{"b"});
  CHECK_THROWS_AS(ice::column_sentence(col, std::vector<std::size_t>{0, 0}), ice::UsageError);
  CHECK_THROWS_AS(ice::column_sentence(col, std::vector<std::size_t>{0}), ice::UsageError);
  CHECK_THROWS_AS(ice::column_sentence(col, std::vector<std::size_t>{0, 2}), ice::UsageError);
}

TEST_CASE("build_corpus emits shuffles_per_column sentences per column") {
  const std::vector<ice::Relation> rels{three_column_table()};
  const auto corpus = ice::build_corpus(rels, 10, 42);
  CHECK(corpus.size() == 30);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].source.table_id == "cfl");
    CHECK(corpus[i].source.column == i / 10);
    CHECK(corpus[i].source.shuffle == i % 10);
  }
  CHECK_THROWS_AS(ice::build_corpus(rels, 0, 42), ice::UsageError);
}

TEST_CASE("single-row table has exactly one order") {
  ice::Relation rel;
  rel.table_id = "one";
  ice::Column col;
  col.cells.push_back(ice::Cell::from_raw("lone value"));
  rel.columns.push_back(col);
  const std::vector<ice::Relation> rels{rel};
  const auto corpus = ice::build_corpus(rels, 1, 3);
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].tokens == Tokens{"lone", "value"});
}

TEST_CASE("build_corpus is a pure function of its seed") {
  const std::vector<ice::Relation> rels{three_column_table()};
  const auto a = ice::serialize_corpus(ice::build_corpus(rels, 10, 42));
  const auto b = ice::serialize_corpus(ice::build_corpus(rels, 10, 42));
  const auto c = ice::serialize_corpus(ice::build_corpus(rels, 10, 43));
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("corpus content does not depend on table order") {
  auto t1 = three_column_table();
  auto t2 = three_column_table();
  t2.table_id = "another";
  const std::vector<ice::Relation> forward{t1, t2}, backward{t2, t1};
  CHECK(ice::serialize_corpus(ice::build_corpus(forward, 4, 9)) ==
        ice::serialize_corpus(ice::build_corpus(backward, 4, 9)));
}

TEST_CASE("shuffles permute cells, never tokens (property)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    ice::Relation rel;
    rel.table_id = "r" + std::to_string(trial);
    rel.columns.push_back(oracle::random_column(rng, 6));
    const std::vector<ice::Relation> rels{rel};
    const auto corpus = ice::build_corpus(rels, 5, rng());

    std::map<std::string, int> expected;
    for (const auto& cell : rel.columns[0].cells) {
      for (const auto& t : cell.tokens) ++expected[t];
    }
    for (const auto& s : corpus) {
      std::map<std::string, int> got;
      for (const auto& t : s.tokens) ++got[t];
      CHECK(got == expected);
    }
  }
}

TEST_CASE("each sentence equals column_sentence of its own permutation") {
  const std::vector<ice::Relation> rels{three_column_table()};
  const std::uint64_t seed = 1234;
  for (const auto& s : ice::build_corpus(rels, 10, seed)) {
    const auto& col = rels[0].columns[s.source.column];
    const auto perm = ice::shuffle_permutation(col.cells.size(), seed, s.source);
    CHECK(ice::column_sentence(col, perm).tokens == s.tokens);
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
  }
}

TEST_CASE("serialize and parse corpus") {
  const std::vector<ice::Relation> rels{three_column_table()};
  const auto corpus = ice::build_corpus(rels, 2, 1);
  const auto parsed = ice::parse_corpus(ice::serialize_corpus(corpus));
  REQUIRE(parsed.size() == corpus.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == corpus[i].tokens);
}
