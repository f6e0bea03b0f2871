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

// Exercises the shared library through its C interface only.

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ice/ice_c.h"

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ice_c_api_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::strlen(ice_version()) > 0);
  ice_tables* t = nullptr;
  CHECK(ice_tables_load("/nonexistent/file.jsonl", "wikisql_jsonl", nullptr, &t) == ICE_ERR_IO);
  CHECK(t == nullptr);
  CHECK(std::string(ice_last_error()).find("nonexistent") != std::string::npos);
  CHECK(ice_tables_parse("x", 1, "xml", nullptr, &t) == ICE_ERR_USAGE);
  CHECK(ice_tables_parse("{bad", 4, "wikisql_jsonl", nullptr, &t) == ICE_ERR_DATA);
  CHECK(std::string(ice_last_error()).find("line 1") != std::string::npos);
  CHECK(ice_tables_parse("x", 1, "csv", nullptr, nullptr) == ICE_ERR_USAGE);
}

TEST_CASE("tables parse and count") {
  const std::string csv = "Team,Year\nhawks,1999\nbulls,2004\n";
  ice_tables* t = nullptr;
  REQUIRE(ice_tables_parse(csv.data(), csv.size(), "csv", "demo", &t) == ICE_OK);
  CHECK(ice_tables_count(t) == 1);
  CHECK(ice_tables_column_total(t) == 2);
  CHECK(ice_tables_row_total(t) == 2);
  ice_tables_free(t);
  ice_tables_free(nullptr);
}

TEST_CASE("file digest") {
  const auto dir = scratch("digest");
  put(dir / "abc", "abc");
  char hex[65];
  REQUIRE(ice_file_digest((dir / "abc").c_str(), hex, sizeof hex) == ICE_OK);
  CHECK(std::string(hex) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(ice_file_digest((dir / "abc").c_str(), hex, 10) == ICE_ERR_USAGE);
}

TEST_CASE("full pipeline through handles") {
  const auto dir = scratch("pipeline");
  REQUIRE(ice_fixtures_write("selection", 4, 40, dir.c_str()) == ICE_OK);
  CHECK(ice_fixtures_write("bogus", 4, 40, dir.c_str()) == ICE_ERR_USAGE);

  ice_tables* tables = nullptr;
  REQUIRE(ice_tables_load((dir / "tables.jsonl").c_str(), "wikisql_jsonl", nullptr, &tables) ==
          ICE_OK);
  std::size_t sentences = 0;
  REQUIRE(ice_corpus_write(tables, 10, 4, (dir / "corpus.txt").c_str(), &sentences) == ICE_OK);
  CHECK(sentences == 10 * ice_tables_column_total(tables));

  ice_train_config cfg;
  ice_train_config_default(&cfg);
  cfg.dimension = 24;
  cfg.epochs = 3;
  ice_space* space = nullptr;
  double losses[3] = {};
  REQUIRE(ice_space_train((dir / "corpus.txt").c_str(), &cfg, &space, losses, 3) == ICE_OK);
  CHECK(ice_space_dimension(space) == 24);
  CHECK(losses[2] < losses[0]);

  cfg.window = 0;
  ice_space* bad = nullptr;
  CHECK(ice_space_train((dir / "corpus.txt").c_str(), &cfg, &bad, nullptr, 0) == ICE_ERR_USAGE);

  REQUIRE(ice_space_save(space, (dir / "vectors.txt").c_str()) == ICE_OK);
  ice_space* reloaded = nullptr;
  REQUIRE(ice_space_load((dir / "vectors.txt").c_str(), &reloaded) == ICE_OK);
  CHECK(ice_space_size(reloaded) == ice_space_size(space));
  double vec[24];
  CHECK(ice_space_lookup(reloaded, "definitely-not-a-word", vec, 24) == ICE_ERR_DATA);

  ice_index* index = nullptr;
  std::size_t skipped = 99;
  REQUIRE(ice_index_build(tables, reloaded, &index, &skipped) == ICE_OK);
  CHECK(skipped == 0);
  CHECK(ice_index_size(index) == ice_tables_column_total(tables));
  REQUIRE(ice_index_save(index, (dir / "index.tsv").c_str()) == ICE_OK);
  ice_index* index2 = nullptr;
  REQUIRE(ice_index_load((dir / "index.tsv").c_str(), &index2) == ICE_OK);
  CHECK(ice_index_dimension(index2) == 24);

  ice_questions* qs = nullptr;
  REQUIRE(ice_questions_load((dir / "questions.jsonl").c_str(), &qs) == ICE_OK);
  CHECK(ice_questions_count(qs) == 40);

  ice_selection_summary with_index{}, without{};
  REQUIRE(ice_eval_select(qs, tables, index2, reloaded, (dir / "res.tsv").c_str(), &with_index) ==
          ICE_OK);
  REQUIRE(ice_eval_select(qs, tables, nullptr, reloaded, nullptr, &without) == ICE_OK);
  CHECK(with_index.accuracy_pct == without.accuracy_pct);
  CHECK(with_index.question_count == 40);
  CHECK(with_index.accuracy_pct >= 90.0);

  ice_bias_report bias{};
  REQUIRE(ice_bias(qs, tables, 0, &bias) == ICE_OK);
  CHECK(bias.question_count == 40);
  CHECK(bias.selection_pct == 0.0);  // headers "c0".. never appear in the text

  put(dir / "lex.tsv", "entry\tNOUN\trow\n");
  ice_lexicon* lex = nullptr;
  REQUIRE(ice_lexicon_load((dir / "lex.tsv").c_str(), &lex) == ICE_OK);
  CHECK(ice_lexicon_size(lex) == 1);
  ice_augment_summary aug{};
  REQUIRE(ice_augment(qs, tables, lex, reloaded, 1, (dir / "aug.jsonl").c_str(), nullptr, &aug) ==
          ICE_OK);
  CHECK(aug.rephrased == 0);
  CHECK(slurp(dir / "aug.jsonl") == slurp(dir / "questions.jsonl"));

  ice_lexicon_free(lex);
  ice_questions_free(qs);
  ice_index_free(index2);
  ice_index_free(index);
  ice_space_free(reloaded);
  ice_space_free(space);
  ice_tables_free(tables);
}
