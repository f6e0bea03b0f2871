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

#ifndef ICE_FIXTURES_HPP_
#define ICE_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ice/questions.hpp"
#include "ice/table.hpp"

namespace ice {

struct Fixture {
  std::vector<Relation> tables;
  std::vector<AnnotatedQuestion> questions;
};

struct SelectionBenchmarkConfig {
  std::size_t tables = 10;
  std::size_t columns = 4;
  std::size_t rows = 20;
  std::size_t words_per_column = 12;
  std::size_t words_per_cell = 2;
  std::size_t questions = 100;
};

// Tables whose columns draw cells from pairwise disjoint pseudo-word
// vocabularies, and questions that each quote one cell value that is unique
// within its column. The quoted column is the gold selection. Headers are
// meaningless ("c0", "c1", ...) and never appear in the questions.
Fixture selection_benchmark(std::uint64_t seed,
                            const SelectionBenchmarkConfig& config = {});

// One table for the skip-gram sanity check. Column 0 holds the tokens "x"
// and "y" (always in the same column sentences) among filler words; column 1
// holds "z" among its own, disjoint filler; further columns hold more
// disjoint filler.
Relation cooccurrence_table(std::uint64_t seed, std::size_t rows = 24,
                            std::size_t filler_columns = 2);

}  // namespace ice

#endif  // ICE_FIXTURES_HPP_
