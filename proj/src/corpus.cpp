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

#include "ice/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "ice/error.hpp"
#include "ice/random.hpp"

namespace ice {

SyntheticSentence column_sentence(const Column& column,
                                  std::span<const std::size_t> permutation) {
  const std::size_t n = column.cells.size();
  if (permutation.size() != n) {
    throw UsageError("permutation has " + std::to_string(permutation.size()) +
                     " entries for a column of " + std::to_string(n) +
                     " cells");
  }
  std::vector<bool> seen(n, false);
  for (const std::size_t i : permutation) {
    if (i >= n || seen[i]) {
      throw UsageError("invalid permutation entry " + std::to_string(i));
    }
    seen[i] = true;
  }

  SyntheticSentence sentence;
  for (const std::size_t i : permutation) {
    const auto& toks = column.cells[i].tokens;
    sentence.tokens.insert(sentence.tokens.end(), toks.begin(), toks.end());
  }
  return sentence;
}

std::vector<std::size_t> shuffle_permutation(std::size_t n, std::uint64_t seed,
                                             const SentenceSource& source) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  CounterRng rng(stream_key(seed, fnv1a64(source.table_id), source.column,
                            source.shuffle));
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

std::vector<SyntheticSentence> build_corpus(std::span<const Relation> relations,
                                            std::size_t shuffles_per_column,
                                            std::uint64_t seed) {
  if (shuffles_per_column < 1) {
    throw UsageError("shuffles_per_column must be at least 1");
  }
  std::vector<SyntheticSentence> corpus;
  for (const auto& rel : relations) {
    for (std::size_t c = 0; c < rel.columns.size(); ++c) {
      const Column& column = rel.columns[c];
      for (std::size_t s = 0; s < shuffles_per_column; ++s) {
        SentenceSource source{rel.table_id, c, s};
        const auto perm = shuffle_permutation(column.cells.size(), seed, source);
        SyntheticSentence sentence = column_sentence(column, perm);
        sentence.source = std::move(source);
        corpus.push_back(std::move(sentence));
      }
    }
  }
  std::stable_sort(corpus.begin(), corpus.end(),
                   [](const SyntheticSentence& a, const SyntheticSentence& b) {
                     return a.source < b.source;
                   });
  return corpus;
}

std::string serialize_corpus(std::span<const SyntheticSentence> corpus) {
  std::string out;
  for (const auto& sentence : corpus) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (i) out.push_back(' ');
      out += sentence.tokens[i];
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::vector<std::string>> parse_corpus(std::string_view bytes) {
  std::vector<std::vector<std::string>> sentences;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    sentences.push_back(std::move(tokens));
  }
  return sentences;
}

}  // namespace ice
