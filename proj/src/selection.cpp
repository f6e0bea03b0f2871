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

#include "ice/selection.hpp"

#include <algorithm>
#include <cstdio>

#include "ice/augment.hpp"
#include "ice/error.hpp"

namespace ice {

std::vector<ColumnScore> select_column(std::string_view question,
                                       const Relation& relation,
                                       const IceIndex& index,
                                       const VectorSpace& space) {
  const auto query = sentence_embedding(question, space);
  if (!query || std::all_of(query->begin(), query->end(),
                            [](double x) { return x == 0.0; })) {
    throw DataError("question has no embedding: \"" + std::string(question) + "\"");
  }
  std::vector<ColumnScore> ranked;
  for (std::size_t c = 0; c < relation.columns.size(); ++c) {
    const IceVector* ice = index.find({relation.table_id, c});
    if (!ice) continue;
    ranked.push_back({c, cosine(*query, ice->values)});
  }
  if (ranked.empty()) {
    throw DataError("no column of table '" + relation.table_id + "' is indexed");
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const ColumnScore& a, const ColumnScore& b) {
                     return a.similarity > b.similarity;
                   });
  return ranked;
}

SelectionEvaluation evaluate_selection(std::span<const AnnotatedQuestion> dataset,
                                       const TableMap& tables,
                                       const IceIndex& index,
                                       const VectorSpace& space) {
  check_questions(dataset, tables);
  SelectionEvaluation eval;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& q = dataset[i];
    SelectionResult r;
    r.question_index = i;
    r.gold_column = q.select_column;
    try {
      r.ranked = select_column(q.question, *tables.find(q.table_id)->second,
                               index, space);
      r.correct_at_1 = r.ranked.front().column == q.select_column;
    } catch (const DataError&) {
      eval.unembeddable.push_back(i);
    }
    eval.correct += r.correct_at_1;
    eval.results.push_back(std::move(r));
  }
  if (!dataset.empty()) {
    eval.accuracy_pct = 100.0 * static_cast<double>(eval.correct) /
                        static_cast<double>(dataset.size());
  }
  return eval;
}

SelectionEvaluation evaluate_selection(std::span<const AnnotatedQuestion> dataset,
                                       std::span<const Relation> tables,
                                       const VectorSpace& space) {
  const auto built = build_index(tables, space);
  return evaluate_selection(dataset, make_table_map(tables), built.index, space);
}

std::string format_selection_summary(const SelectionEvaluation& eval) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "questions: %zu\ncorrect@1: %zu\naccuracy@1: %.2f%%\n"
                "unembeddable: %zu\n",
                eval.results.size(), eval.correct, eval.accuracy_pct,
                eval.unembeddable.size());
  return buf;
}

std::string format_selection_results(const SelectionEvaluation& eval) {
  std::string out;
  char buf[96];
  for (const auto& r : eval.results) {
    if (r.ranked.empty()) {
      std::snprintf(buf, sizeof buf, "%zu\t%zu\t-1\tnan\n", r.question_index,
                    r.gold_column);
    } else {
      std::snprintf(buf, sizeof buf, "%zu\t%zu\t%zu\t%.6g\n", r.question_index,
                    r.gold_column, r.ranked.front().column,
                    r.ranked.front().similarity);
    }
    out += buf;
  }
  return out;
}

}  // namespace ice
