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

#ifndef ICE_CORPUS_HPP_
#define ICE_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ice/table.hpp"

namespace ice {

struct SentenceSource {
  std::string table_id;
  std::size_t column = 0;
  std::size_t shuffle = 0;

  auto operator<=>(const SentenceSource&) const = default;
};

// One column's cells concatenated under some cell permutation.
struct SyntheticSentence {
  std::vector<std::string> tokens;
  SentenceSource source;
};

inline constexpr std::size_t kDefaultShufflesPerColumn = 10;

// Concatenates the column's cell tokens in `permutation` order. Throws
// UsageError unless `permutation` is a permutation of 0..cells-1.
SyntheticSentence column_sentence(const Column& column,
                                  std::span<const std::size_t> permutation);

// Fisher-Yates permutation of 0..n-1 drawn from the stream keyed by
// (seed, table_id, column, shuffle).
std::vector<std::size_t> shuffle_permutation(std::size_t n, std::uint64_t seed,
                                             const SentenceSource& source);

// Exactly `shuffles_per_column` sentences for every column of every relation,
// ordered by (table_id, column, shuffle). Pure function of its arguments.
std::vector<SyntheticSentence> build_corpus(std::span<const Relation> relations,
                                            std::size_t shuffles_per_column,
                                            std::uint64_t seed);

// One sentence per line, tokens joined by single spaces.
std::string serialize_corpus(std::span<const SyntheticSentence> corpus);

// Reads a corpus file back into token lists (sources are not stored).
std::vector<std::vector<std::string>> parse_corpus(std::string_view bytes);

}  // namespace ice

#endif  // ICE_CORPUS_HPP_
