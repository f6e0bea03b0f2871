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

#ifndef ICE_EMBEDDING_HPP_
#define ICE_EMBEDDING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ice/corpus.hpp"

namespace ice {

// Word vectors: a vocabulary and one dense row per token. Immutable once
// built; lookups are case-sensitive (the tokenizer lowercases beforehand).
class VectorSpace {
 public:
  // Throws UsageError on dimension 0, a size mismatch, a duplicate word or a
  // non-finite value.
  VectorSpace(std::size_t dimension, std::vector<std::string> words,
              std::vector<double> values);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

  std::span<const double> row(std::size_t index) const {
    return {values_.data() + index * dimension_, dimension_};
  }
  std::optional<std::size_t> index_of(std::string_view token) const;
  std::optional<std::span<const double>> lookup(std::string_view token) const;

  // Number of repeated tokens dropped by load_vectors (last one wins).
  std::size_t duplicate_tokens() const { return duplicate_tokens_; }
  void set_duplicate_tokens(std::size_t n) { duplicate_tokens_ = n; }

 private:
  std::size_t dimension_;
  std::vector<std::string> words_;
  std::vector<double> values_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t duplicate_tokens_ = 0;
};

inline std::optional<std::span<const double>> lookup(const VectorSpace& space,
                                                     std::string_view token) {
  return space.lookup(token);
}

struct TrainConfig {
  std::size_t dimension = 100;
  std::size_t window = 5;
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  double learning_rate = 0.025;  // decays linearly to 1e-4 of itself
  std::size_t min_count = 1;
  std::uint64_t seed = 1;
  // More than one thread applies lock-free (Hogwild) updates; results then
  // vary from run to run.
  std::size_t threads = 1;

  // Throws UsageError when a field is out of range.
  void validate() const;
};

struct TrainStats {
  // Mean negative-sampling loss per (center, context) pair, one per epoch.
  std::vector<double> epoch_loss;
  std::uint64_t pairs_per_epoch = 0;
};

// Skip-gram with negative sampling (unigram^0.75 noise), dynamic window
// shrinking, no subsampling. Vocabulary is every token with frequency >=
// min_count, ordered by descending frequency then token. Throws DataError on
// an empty corpus or an empty vocabulary after filtering.
VectorSpace train_skipgram(std::span<const std::vector<std::string>> corpus,
                           const TrainConfig& config,
                           TrainStats* stats = nullptr);

VectorSpace train_skipgram(std::span<const SyntheticSentence> corpus,
                           const TrainConfig& config,
                           TrainStats* stats = nullptr);

// Text vectors: optional "count dimension" first line, then one token per
// line followed by `dimension` reals. Errors carry the line number.
VectorSpace load_vectors(std::string_view bytes);

// Same format, with the header line and 6 significant digits.
std::string save_vectors(const VectorSpace& space);

}  // namespace ice

#endif  // ICE_EMBEDDING_HPP_
