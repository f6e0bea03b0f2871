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

#ifndef ICE_QUESTIONS_HPP_
#define ICE_QUESTIONS_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ice/table.hpp"

namespace ice {

struct WhereCondition {
  std::size_t column = 0;
  int op = 0;
  std::string value;
};

// A question with its WikiSQL-style SQL sketch annotation.
struct AnnotatedQuestion {
  std::string question;
  std::string table_id;
  std::size_t select_column = 0;
  int aggregation = 0;
  std::vector<WhereCondition> where_conditions;
  // The record's "sql" object exactly as read, so rewritten datasets can
  // carry the annotation through byte for byte.
  std::string sql_json;
  // The whole source record; writers only swap its "question" field.
  std::string record_json;
};

// One JSON record per line: "question", "table_id" and "sql" with "sel",
// "agg" and "conds" ([column, operator, value] triples).
std::vector<AnnotatedQuestion> parse_questions(std::string_view bytes);

// Writes each question's source record with "question" replaced, keeping
// field order and every other field untouched.
std::string serialize_questions(std::span<const AnnotatedQuestion> questions);

using TableMap = std::map<std::string, const Relation*, std::less<>>;

TableMap make_table_map(std::span<const Relation> relations);

// Resolves every question's table and column indices. Throws DataError that
// lists every unresolved table id (and the first bad column index).
void check_questions(std::span<const AnnotatedQuestion> questions,
                     const TableMap& tables);

}  // namespace ice

#endif  // ICE_QUESTIONS_HPP_
