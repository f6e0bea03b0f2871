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

#include "ice/bias.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ice/error.hpp"
#include "ice/tokenizer.hpp"

namespace ice {
namespace {

bool contains_run(const std::vector<std::string>& haystack,
                  const std::vector<std::string>& needle) {
  if (needle.empty()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

const std::string& header_of(const Relation& rel, std::size_t column) {
  const auto& h = rel.columns[column].header;
  if (!h || h->empty()) {
    throw DataError("table '" + rel.table_id + "' column " +
                    std::to_string(column) + " has no header");
  }
  return *h;
}

}  // namespace

bool contains_header(std::string_view question, std::string_view header) {
  return contains_run(tokenize(question), tokenize(header));
}

BiasReport bias_report(std::span<const AnnotatedQuestion> dataset,
                       const TableMap& tables, BiasOptions options) {
  check_questions(dataset, tables);

  std::size_t counted = 0, selection = 0, any = 0, all = 0, none = 0, zero = 0;
  for (const auto& q : dataset) {
    const Relation& rel = *tables.find(q.table_id)->second;
    if (q.where_conditions.empty()) {
      ++zero;
      if (options.exclude_zero_condition) continue;
    }
    ++counted;

    const auto tokens = tokenize(q.question);
    const bool sel_hit = contains_run(tokens, tokenize(header_of(rel, q.select_column)));
    std::size_t where_hits = 0;
    for (const auto& c : q.where_conditions) {
      if (contains_run(tokens, tokenize(header_of(rel, c.column)))) ++where_hits;
    }
    selection += sel_hit;
    any += where_hits > 0;
    all += where_hits == q.where_conditions.size();
    none += !sel_hit && where_hits == 0;
  }

  BiasReport report;
  report.question_count = counted;
  report.zero_condition_count = zero;
  if (counted > 0) {
    const auto pct = [counted](std::size_t n) {
      return 100.0 * static_cast<double>(n) / static_cast<double>(counted);
    };
    report.selection_pct = pct(selection);
    report.where_any_pct = pct(any);
    report.where_all_pct = pct(all);
    report.no_match_pct = pct(none);
  }
  return report;
}

double no_match_pct(std::span<const AnnotatedQuestion> dataset,
                    const TableMap& tables, BiasOptions options) {
  return bias_report(dataset, tables, options).no_match_pct;
}

}  // namespace ice
