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

#ifndef ICE_SELECTION_HPP_
#define ICE_SELECTION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ice/column_embedding.hpp"
#include "ice/questions.hpp"

namespace ice {

struct ColumnScore {
  std::size_t column = 0;
  double similarity = 0;
};

// Ranks the relation's columns by cosine between the question embedding and
// each column's ICE vector (descending, ties to the lower column index).
// Columns missing from the index are left out. Throws DataError when the
// question has no embedding or no column of the relation is indexed.
std::vector<ColumnScore> select_column(std::string_view question,
                                       const Relation& relation,
                                       const IceIndex& index,
                                       const VectorSpace& space);

struct SelectionResult {
  std::size_t question_index = 0;
  std::size_t gold_column = 0;
  std::vector<ColumnScore> ranked;  // empty when the question had no embedding
  bool correct_at_1 = false;
};

struct SelectionEvaluation {
  double accuracy_pct = 0;
  std::size_t correct = 0;
  std::vector<SelectionResult> results;
  std::vector<std::size_t> unembeddable;  // question indices, scored incorrect
};

SelectionEvaluation evaluate_selection(std::span<const AnnotatedQuestion> dataset,
                                       const TableMap& tables,
                                       const IceIndex& index,
                                       const VectorSpace& space);

// Builds the index from `tables` first.
SelectionEvaluation evaluate_selection(std::span<const AnnotatedQuestion> dataset,
                                       std::span<const Relation> tables,
                                       const VectorSpace& space);

// Plain-text summary.
std::string format_selection_summary(const SelectionEvaluation& eval);

// Tab-separated "question_index gold predicted similarity" lines; predicted
// is -1 and similarity "nan" for unembeddable questions.
std::string format_selection_results(const SelectionEvaluation& eval);

}  // namespace ice

#endif  // ICE_SELECTION_HPP_
