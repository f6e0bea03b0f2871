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
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "ice/column_embedding.hpp"
#include "ice/error.hpp"
#include "oracles.hpp"

namespace {

ice::VectorSpace space_of(const std::map<std::string, std::vector<double>>& words) {
  std::vector<std::string> names;
  std::vector<double> values;
  for (const auto& [w, v] : words) {
    names.push_back(w);
    values.insert(values.end(), v.begin(), v.end());
  }
  return ice::VectorSpace(words.begin()->second.size(), names, values);
}

ice::Column column_of(std::initializer_list<const char*> cells) {
  ice::Column col;
  for (const char* c : cells) col.cells.push_back(ice::Cell::from_raw(c));
  return col;
}

using Vec = std::vector<double>;

}  // namespace

TEST_CASE("cell_embedding averages in-vocabulary tokens") {
  const auto space = space_of({{"a", {1, 0}}, {"b", {0, 1}}});
  CHECK(*ice::cell_embedding(ice::Cell::from_raw("a"), space) == Vec{1, 0});
  CHECK(*ice::cell_embedding(ice::Cell::from_raw("A b"), space) == Vec{0.5, 0.5});
  CHECK(*ice::cell_embedding(ice::Cell::from_raw("a zzz"), space) == Vec{1, 0});
  CHECK_FALSE(ice::cell_embedding(ice::Cell::from_raw("zzz yyy"), space));
  CHECK_FALSE(ice::cell_embedding(ice::Cell::from_raw(""), space));
}

TEST_CASE("column_embedding takes the component-wise median") {
  const auto space = space_of({{"p", {0, 0}}, {"q", {1, 2}}, {"r", {2, 1}}, {"s", {2, 4}}});
  SUBCASE("odd count") {
    // Brute-force oracle: sort each component, take the middle.
    const Vec expected = oracle::sort_median({{0, 0}, {1, 2}, {2, 1}});
    CHECK(expected == Vec{1, 1});
    const auto ice = ice::column_embedding(column_of({"p", "q", "r"}), space);
    CHECK(ice.values == expected);
    CHECK(ice.contributing_cells == 3);
  }
  SUBCASE("even count takes the midpoint") {
    CHECK(ice::column_embedding(column_of({"p", "s"}), space).values == Vec{1, 2});
  }
  SUBCASE("constant column") {
    for (int n = 1; n <= 6; ++n) {
      ice::Column col;
      for (int i = 0; i < n; ++i) col.cells.push_back(ice::Cell::from_raw("q"));
      CHECK(ice::column_embedding(col, space).values == Vec{1, 2});
    }
  }
  SUBCASE("unembeddable cells are skipped, not zero-filled") {
    const auto ice = ice::column_embedding(column_of({"s", "junk", "", "s"}), space);
    CHECK(ice.values == Vec{2, 4});
    CHECK(ice.contributing_cells == 2);
  }
}

TEST_CASE("column_embedding errors name the column") {
  const auto space = space_of({{"a", {1.0}}});
  try {
    ice::column_embedding(column_of({"x", "y"}), space, {"tbl", 3});
    FAIL("expected DataError");
  } catch (const ice::DataError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("tbl") != std::string::npos);
    CHECK(msg.find("3") != std::string::npos);
  }
}

TEST_CASE("cosine") {
  CHECK(ice::cosine(Vec{3, 4}, Vec{3, 4}) == doctest::Approx(1.0));
  CHECK(ice::cosine(Vec{1, 0}, Vec{0, 1}) == 0.0);
  CHECK(ice::cosine(Vec{1, 0}, Vec{-1, 0}) == -1.0);
  CHECK_THROWS_AS(ice::cosine(Vec{0, 0}, Vec{1, 0}), ice::UsageError);
  CHECK_THROWS_AS(ice::cosine(Vec{1}, Vec{1, 0}), ice::UsageError);
}

TEST_CASE("rank_columns orders by similarity, then key") {
  ice::IceIndex index;
  index.add({{1, 0}, 1, {"b", 0}});
  index.add({{0, 1}, 1, {"a", 1}});
  index.add({{0, 1}, 1, {"a", 0}});
  index.add({{1, 1}, 1, {"c", 0}});

  const auto top = ice::rank_columns(Vec{1, 0}, index, 1);
  REQUIRE(top.size() == 1);
  CHECK(top[0].key == ice::ColumnKey{"b", 0});
  CHECK(top[0].similarity == doctest::Approx(1.0));

  const auto all = ice::rank_columns(Vec{0, 1}, index, 99);
  REQUIRE(all.size() == 4);
  CHECK(all[0].key == ice::ColumnKey{"a", 0});
  CHECK(all[1].key == ice::ColumnKey{"a", 1});
  CHECK(all[2].key == ice::ColumnKey{"c", 0});
  CHECK(all[3].key == ice::ColumnKey{"b", 0});

  CHECK(ice::rank_columns(Vec{1, 0}, ice::IceIndex{}, 5).empty());
  CHECK_THROWS_AS(ice::rank_columns(Vec{1, 0, 0}, index, 1), ice::UsageError);
}

TEST_CASE("IceIndex keys are unique and dimensions agree") {
  ice::IceIndex index;
  index.add({{1, 0}, 1, {"a", 0}});
  CHECK_THROWS_AS(index.add({{0, 1}, 1, {"a", 0}}), ice::UsageError);
  CHECK_THROWS_AS(index.add({{0, 1, 2}, 1, {"a", 1}}), ice::UsageError);
}

TEST_CASE("index file round-trips at 6 significant digits") {
  ice::IceIndex index;
  index.add({{0.123456789, -2.5e-7}, 3, {"1-10015132-11", 0}});
  index.add({{1e6, 42}, 1, {"t", 7}});
  const auto text = ice::save_index(index);
  CHECK(text.substr(0, text.find('\n')) == "1-10015132-11\t0\t3\t0.123457\t-2.5e-07");
  const auto back = ice::load_index(text);
  REQUIRE(back.size() == 2);
  const auto* e = back.find({"t", 7});
  REQUIRE(e);
  CHECK(e->values == Vec{1e6, 42});
  CHECK(e->contributing_cells == 1);
  CHECK_THROWS_AS(ice::load_index("t\t0\t1\n"), ice::DataError);
  CHECK_THROWS_AS(ice::load_index("t\t0\t0\t1\n"), ice::DataError);
  CHECK_THROWS_AS(ice::load_index("t\t0\t1\t1\nt\t0\t1\t2\n"), ice::DataError);
}

TEST_CASE("build_index skips columns without embeddable cells") {
  const auto space = space_of({{"a", {1, 0}}, {"b", {0, 1}}});
  ice::Relation rel;
  rel.table_id = "t";
  rel.columns = {column_of({"a", "b"}), column_of({"x", "y"})};
  const std::vector<ice::Relation> rels{rel};
  const auto built = ice::build_index(rels, space);
  CHECK(built.index.size() == 1);
  REQUIRE(built.skipped.size() == 1);
  CHECK(built.skipped[0] == ice::ColumnKey{"t", 1});
}

TEST_CASE("ICE properties on random columns") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  const std::size_t vocab = 10, dim = 3;
  std::map<std::string, Vec> words;
  for (std::size_t w = 0; w < vocab; ++w) {
    Vec v(dim);
    for (auto& x : v) x = normal(rng);
    words["w" + std::to_string(w)] = v;
  }
  const auto space = space_of(words);

  for (int trial = 0; trial < 200; ++trial) {
    ice::Column col = oracle::random_column(rng, vocab);
    std::vector<Vec> cells;
    for (const auto& c : col.cells) {
      if (auto v = oracle::mean_vector(c.tokens, words, dim)) cells.push_back(*v);
    }
    if (cells.empty()) {
      CHECK_THROWS_AS(ice::column_embedding(col, space), ice::DataError);
      continue;
    }
    const auto ice = ice::column_embedding(col, space);
    const auto expected = oracle::sort_median(cells);
    for (std::size_t d = 0; d < dim; ++d) CHECK(std::abs(ice.values[d] - expected[d]) <= 1e-12);

    auto shuffled = col;
    std::shuffle(shuffled.cells.begin(), shuffled.cells.end(), rng);
    shuffled.header = "renamed";
    CHECK(ice::column_embedding(shuffled, space).values == ice.values);
  }
}
