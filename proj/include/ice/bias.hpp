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

#ifndef ICE_BIAS_HPP_
#define ICE_BIAS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

#include "ice/questions.hpp"

namespace ice {

// True iff the tokenized header occurs as a contiguous run of the tokenized
// question. An empty header never matches.
bool contains_header(std::string_view question, std::string_view header);

struct BiasOptions {
  // Drop questions with no where conditions from every denominator.
  bool exclude_zero_condition = false;
};

// Shares of questions (in percent) that mention column headers.
struct BiasReport {
  double selection_pct = 0;
  double where_any_pct = 0;
  double where_all_pct = 0;
  double no_match_pct = 0;
  std::size_t question_count = 0;
  std::size_t zero_condition_count = 0;
};

// Zero-condition questions count as matching "all" where headers (vacuously)
// and never as matching "any". Throws DataError on unresolved tables or when
// a referenced column has no header.
BiasReport bias_report(std::span<const AnnotatedQuestion> dataset,
                       const TableMap& tables, BiasOptions options = {});

// Share of questions mentioning neither the selection header nor any
// where-clause header.
double no_match_pct(std::span<const AnnotatedQuestion> dataset,
                    const TableMap& tables, BiasOptions options = {});

}  // namespace ice

#endif  // ICE_BIAS_HPP_
