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

// icetool: command-line front end over the ICE C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ice/ice_c.h"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Carries a failed C API status out of a subcommand.
struct ApiFailure {
  ice_status status;
  std::string message;
};

void check(ice_status s) {
  if (s != ICE_OK) throw ApiFailure{s, ice_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Tables = std::unique_ptr<ice_tables, Deleter<ice_tables, ice_tables_free>>;
using Space = std::unique_ptr<ice_space, Deleter<ice_space, ice_space_free>>;
using Index = std::unique_ptr<ice_index, Deleter<ice_index, ice_index_free>>;
using Questions =
    std::unique_ptr<ice_questions, Deleter<ice_questions, ice_questions_free>>;
using Lexicon = std::unique_ptr<ice_lexicon, Deleter<ice_lexicon, ice_lexicon_free>>;

Tables load_tables(const std::string& path, const std::string& format,
                   const std::string& table_id) {
  ice_tables* t = nullptr;
  check(ice_tables_load(path.c_str(), format.c_str(), table_id.c_str(), &t));
  return Tables(t);
}

Space load_space(const std::string& path) {
  ice_space* s = nullptr;
  check(ice_space_load(path.c_str(), &s));
  return Space(s);
}

Questions load_questions(const std::string& path) {
  ice_questions* q = nullptr;
  check(ice_questions_load(path.c_str(), &q));
  return Questions(q);
}

std::string digest(const std::string& path) {
  char hex[65] = {};
  check(ice_file_digest(path.c_str(), hex, sizeof hex));
  return hex;
}

// Records what produced an output: resolved configuration, input digests,
// seed and toolkit version. No timestamps, so reruns are byte-identical.
class Manifest {
 public:
  explicit Manifest(std::string subcommand) {
    doc_["subcommand"] = std::move(subcommand);
    doc_["version"] = ice_version();
    doc_["config"] = ordered_json::object();
    doc_["inputs"] = ordered_json::object();
  }
  template <typename T>
  void set(const std::string& key, const T& value) {
    doc_["config"][key] = value;
  }
  void seed(std::uint64_t s) { doc_["seed"] = s; }
  void input(const std::string& path) { doc_["inputs"][path] = digest(path); }
  void output(const std::string& path) {
    doc_["outputs"][path] = digest(path);
  }
  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << doc_.dump(2) << '\n';
    if (!out) throw ApiFailure{ICE_ERR_IO, "cannot write manifest '" + path + "'"};
  }

 private:
  ordered_json doc_;
};

std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

struct Options {
  std::string tables, format = "wikisql_jsonl", table_id = "csv";
  std::string questions, vectors, lexicon, corpus, index, out, records, results;
  std::string out_dir, kind = "selection";
  std::size_t shuffles = 10;
  std::uint64_t seed = 42;
  std::size_t fixture_questions = 100;
  bool exclude_zero = false;
  bool where_headers = false;
  bool nondeterministic = false;
  ice_train_config train{};
};

int run_ingest(const Options& o) {
  const auto t = load_tables(o.tables, o.format, o.table_id);
  check(ice_tables_write(t.get(), o.out.c_str()));
  Manifest m("ingest");
  m.set("format", o.format);
  m.set("table_id", o.table_id);
  m.input(o.tables);
  m.output(o.out);
  m.write(manifest_path(o.out));
  std::cout << "tables: " << ice_tables_count(t.get())
            << "\ncolumns: " << ice_tables_column_total(t.get())
            << "\nrows: " << ice_tables_row_total(t.get()) << '\n';
  return kExitOk;
}

int run_corpus(const Options& o) {
  const auto t = load_tables(o.tables, o.format, o.table_id);
  std::size_t sentences = 0;
  check(ice_corpus_write(t.get(), o.shuffles, o.seed, o.out.c_str(), &sentences));
  Manifest m("corpus");
  m.set("format", o.format);
  m.set("shuffles", o.shuffles);
  m.seed(o.seed);
  m.input(o.tables);
  m.output(o.out);
  m.write(manifest_path(o.out));
  std::cout << "sentences: " << sentences << '\n';
  return kExitOk;
}

int run_train(const Options& o) {
  if (o.train.threads > 1 && !o.nondeterministic) {
    std::cerr << "train: --threads > 1 requires --nondeterministic\n";
    return kExitUsage;
  }
  ice_space* raw = nullptr;
  std::vector<double> losses(o.train.epochs);
  check(ice_space_train(o.corpus.c_str(), &o.train, &raw, losses.data(), losses.size()));
  const Space space(raw);
  check(ice_space_save(space.get(), o.out.c_str()));
  Manifest m("train");
  m.set("dim", o.train.dimension);
  m.set("window", o.train.window);
  m.set("negatives", o.train.negatives);
  m.set("epochs", o.train.epochs);
  m.set("learning_rate", o.train.learning_rate);
  m.set("min_count", o.train.min_count);
  m.set("threads", o.train.threads);
  m.set("nondeterministic", o.nondeterministic);
  m.seed(o.train.seed);
  m.input(o.corpus);
  m.output(o.out);
  m.write(manifest_path(o.out));
  std::cout << "vocabulary: " << ice_space_size(space.get())
            << "\ndimension: " << ice_space_dimension(space.get()) << '\n';
  for (std::size_t e = 0; e < losses.size(); ++e) {
    std::printf("epoch %zu loss: %.6f\n", e + 1, losses[e]);
  }
  return kExitOk;
}

int run_ice(const Options& o) {
  const auto t = load_tables(o.tables, o.format, o.table_id);
  const auto space = load_space(o.vectors);
  ice_index* raw = nullptr;
  std::size_t skipped = 0;
  check(ice_index_build(t.get(), space.get(), &raw, &skipped));
  const Index index(raw);
  check(ice_index_save(index.get(), o.out.c_str()));
  Manifest m("ice");
  m.set("format", o.format);
  m.input(o.tables);
  m.input(o.vectors);
  m.output(o.out);
  m.write(manifest_path(o.out));
  std::cout << "columns: " << ice_index_size(index.get())
            << "\nskipped: " << skipped << '\n';
  return kExitOk;
}

int run_bias(const Options& o) {
  const auto t = load_tables(o.tables, o.format, o.table_id);
  const auto q = load_questions(o.questions);
  ice_bias_report r{};
  check(ice_bias(q.get(), t.get(), o.exclude_zero ? 1 : 0, &r));
  std::printf("questions: %zu\n", r.question_count);
  std::printf("selection: %.2f%%\n", r.selection_pct);
  std::printf("where_any: %.2f%%\n", r.where_any_pct);
  std::printf("where_all: %.2f%%\n", r.where_all_pct);
  std::printf("no_match: %.2f%%\n", r.no_match_pct);
  std::printf("zero_condition: %zu\n", r.zero_condition_count);
  return kExitOk;
}

int run_augment(const Options& o) {
  const auto t = load_tables(o.tables, o.format, o.table_id);
  const auto q = load_questions(o.questions);
  const auto space = load_space(o.vectors);
  ice_lexicon* raw = nullptr;
  check(ice_lexicon_load(o.lexicon.c_str(), &raw));
  const Lexicon lexicon(raw);
  ice_augment_summary s{};
  check(ice_augment(q.get(), t.get(), lexicon.get(), space.get(),
                    o.where_headers ? 1 : 0, o.out.c_str(),
                    o.records.empty() ? nullptr : o.records.c_str(), &s));
  Manifest m("augment");
  m.set("format", o.format);
  m.set("where_headers", o.where_headers);
  m.input(o.questions);
  m.input(o.tables);
  m.input(o.lexicon);
  m.input(o.vectors);
  m.output(o.out);
  if (!o.records.empty()) m.output(o.records);
  m.write(manifest_path(o.out));
  std::printf("questions: %zu\nmentions: %zu\nrephrased: %zu\nyield: %.2f%%\n",
              s.question_count, s.mentions, s.rephrased, s.yield_pct);
  if (s.degenerate) std::fprintf(stderr, "warning: %zu no-op paraphrases\n", s.degenerate);
  return kExitOk;
}

int run_eval_select(const Options& o) {
  const auto t = load_tables(o.tables, o.format, o.table_id);
  const auto q = load_questions(o.questions);
  const auto space = load_space(o.vectors);
  Index index;
  if (!o.index.empty()) {
    ice_index* raw = nullptr;
    check(ice_index_load(o.index.c_str(), &raw));
    index.reset(raw);
  }
  ice_selection_summary s{};
  check(ice_eval_select(q.get(), t.get(), index.get(), space.get(),
                        o.results.empty() ? nullptr : o.results.c_str(), &s));
  if (!o.results.empty()) {
    Manifest m("eval-select");
    m.set("format", o.format);
    m.input(o.questions);
    m.input(o.tables);
    m.input(o.vectors);
    if (!o.index.empty()) m.input(o.index);
    m.output(o.results);
    m.write(manifest_path(o.results));
  }
  std::printf("questions: %zu\ncorrect@1: %zu\naccuracy@1: %.2f%%\nunembeddable: %zu\n",
              s.question_count, s.correct, s.accuracy_pct, s.unembeddable);
  return kExitOk;
}

int run_fixtures(const Options& o) {
  check(ice_fixtures_write(o.kind.c_str(), o.seed, o.fixture_questions,
                           o.out_dir.c_str()));
  Manifest m("fixtures");
  m.set("kind", o.kind);
  m.set("questions", o.fixture_questions);
  m.seed(o.seed);
  const std::string tables = o.out_dir + "/tables.jsonl";
  m.output(tables);
  if (o.kind == "selection") m.output(o.out_dir + "/questions.jsonl");
  m.write(o.out_dir + "/manifest.json");
  std::cout << "wrote " << o.out_dir << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ICE toolkit: column content embeddings and WikiSQL de-biasing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ice_version()));

  Options o;
  ice_train_config_default(&o.train);
  o.train.seed = 42;

  const auto add_tables = [&](CLI::App* sub) {
    sub->add_option("--tables", o.tables, "Table file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", o.format, "Table file format")
        ->check(CLI::IsMember({"wikisql_jsonl", "csv"}));
    sub->add_option("--table-id", o.table_id, "Table id for CSV input");
  };

  auto* ingest = app.add_subcommand("ingest", "Parse tables and write normalized WikiSQL JSON lines");
  add_tables(ingest);
  ingest->add_option("--out", o.out, "Output table file")->required();

  auto* corpus = app.add_subcommand("corpus", "Build the shuffled column-sentence corpus");
  add_tables(corpus);
  corpus->add_option("--shuffles", o.shuffles, "Shuffles per column")->check(CLI::PositiveNumber);
  corpus->add_option("--seed", o.seed, "Random seed");
  corpus->add_option("--out", o.out, "Output corpus file")->required();

  auto* train = app.add_subcommand("train", "Train skip-gram vectors on a corpus");
  train->add_option("--corpus", o.corpus, "Corpus file")->required()->check(CLI::ExistingFile);
  train->add_option("--dim", o.train.dimension, "Vector dimension")->check(CLI::PositiveNumber);
  train->add_option("--window", o.train.window, "Context window")->check(CLI::PositiveNumber);
  train->add_option("--negatives", o.train.negatives, "Negative samples")->check(CLI::PositiveNumber);
  train->add_option("--epochs", o.train.epochs, "Epochs")->check(CLI::PositiveNumber);
  train->add_option("--lr", o.train.learning_rate, "Initial learning rate")->check(CLI::PositiveNumber);
  train->add_option("--min-count", o.train.min_count, "Minimum token frequency")->check(CLI::PositiveNumber);
  train->add_option("--seed", o.train.seed, "Random seed");
  train->add_option("--threads", o.train.threads, "Worker threads")->check(CLI::PositiveNumber);
  train->add_flag("--nondeterministic", o.nondeterministic, "Allow parallel, non-reproducible training");
  train->add_option("--out", o.out, "Output vector file")->required();

  auto* ice = app.add_subcommand("ice", "Compute and store column embeddings");
  add_tables(ice);
  ice->add_option("--vectors", o.vectors, "Vector file")->required()->check(CLI::ExistingFile);
  ice->add_option("--out", o.out, "Output index file")->required();

  auto* bias = app.add_subcommand("bias", "Measure how often questions mention column headers");
  bias->add_option("--questions", o.questions, "Question file")->required()->check(CLI::ExistingFile);
  add_tables(bias);
  bias->add_flag("--exclude-zero-conditions", o.exclude_zero,
                 "Leave questions without where conditions out of the counts");

  auto* augment = app.add_subcommand("augment", "Paraphrase header mentions in questions");
  augment->add_option("--questions", o.questions, "Question file")->required()->check(CLI::ExistingFile);
  add_tables(augment);
  augment->add_option("--lexicon", o.lexicon, "Synonym lexicon")->required()->check(CLI::ExistingFile);
  augment->add_option("--vectors", o.vectors, "Vector file for sentence similarity")->required()->check(CLI::ExistingFile);
  augment->add_option("--out", o.out, "Output question file")->required();
  augment->add_option("--records", o.records, "Augmentation record file");
  augment->add_flag("--where-headers", o.where_headers, "Also paraphrase where-clause headers");

  auto* eval = app.add_subcommand("eval-select", "Score content-based column selection");
  eval->add_option("--questions", o.questions, "Question file")->required()->check(CLI::ExistingFile);
  add_tables(eval);
  eval->add_option("--vectors", o.vectors, "Vector file")->required()->check(CLI::ExistingFile);
  eval->add_option("--index", o.index, "Precomputed ICE index")->check(CLI::ExistingFile);
  eval->add_option("--results", o.results, "Per-question results file");

  auto* fixtures = app.add_subcommand("fixtures", "Generate synthetic tables and benchmarks");
  fixtures->add_option("--kind", o.kind, "Fixture kind")
      ->check(CLI::IsMember({"selection", "cooccurrence"}));
  fixtures->add_option("--seed", o.seed, "Random seed");
  fixtures->add_option("--questions", o.fixture_questions, "Benchmark questions")
      ->check(CLI::PositiveNumber);
  fixtures->add_option("--out-dir", o.out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*ingest) return run_ingest(o);
    if (*corpus) return run_corpus(o);
    if (*train) return run_train(o);
    if (*ice) return run_ice(o);
    if (*bias) return run_bias(o);
    if (*augment) return run_augment(o);
    if (*eval) return run_eval_select(o);
    if (*fixtures) return run_fixtures(o);
  } catch (const ApiFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.status == ICE_ERR_USAGE ? kExitUsage : kExitData;
  }
  return kExitUsage;
}
