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

#include "ice/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <thread>

#include "ice/error.hpp"
#include "ice/random.hpp"

namespace ice {

VectorSpace::VectorSpace(std::size_t dimension, std::vector<std::string> words,
                         std::vector<double> values)
    : dimension_(dimension), words_(std::move(words)), values_(std::move(values)) {
  if (dimension_ == 0) throw UsageError("vector dimension must be >= 1");
  if (values_.size() != words_.size() * dimension_) {
    throw UsageError("vector storage does not match vocabulary size");
  }
  for (const double v : values_) {
    if (!std::isfinite(v)) throw UsageError("non-finite vector component");
  }
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!index_.emplace(words_[i], i).second) {
      throw UsageError("duplicate vocabulary entry '" + words_[i] + "'");
    }
  }
}

std::optional<std::size_t> VectorSpace::index_of(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::span<const double>> VectorSpace::lookup(
    std::string_view token) const {
  const auto i = index_of(token);
  if (!i) return std::nullopt;
  return row(*i);
}

void TrainConfig::validate() const {
  if (dimension < 1) throw UsageError("dimension must be >= 1");
  if (window < 1) throw UsageError("window must be >= 1");
  if (negatives < 1) throw UsageError("negatives must be >= 1");
  if (epochs < 1) throw UsageError("epochs must be >= 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw UsageError("learning_rate must be > 0");
  }
  if (min_count < 1) throw UsageError("min_count must be >= 1");
  if (threads < 1) throw UsageError("threads must be >= 1");
}

namespace {

// Plain accesses for the single-threaded path, relaxed atomics for Hogwild
// workers sharing the weight matrices.
template <bool Shared>
struct Cells {
  static double load(double* p) {
    if constexpr (Shared) {
      return std::atomic_ref<double>(*p).load(std::memory_order_relaxed);
    } else {
      return *p;
    }
  }
  static void add(double* p, double delta) {
    if constexpr (Shared) {
      std::atomic_ref<double> ref(*p);
      ref.store(ref.load(std::memory_order_relaxed) + delta,
                std::memory_order_relaxed);
    } else {
      *p += delta;
    }
  }
};

double log_sigmoid(double x) {
  return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

class SkipGramTrainer {
 public:
  SkipGramTrainer(std::span<const std::vector<std::string>> corpus,
                  const TrainConfig& config)
      : config_(config) {
    build_vocabulary(corpus);
    encode(corpus);
    init_weights();
  }

  VectorSpace run(TrainStats* stats) {
    std::uint64_t words = 0;
    for (const auto& s : sentences_) words += s.size();
    total_words_ = words * config_.epochs;

    if (stats) stats->epoch_loss.clear();
    for (std::size_t epoch = 0; epoch < config_.epochs; ++epoch) {
      EpochTotals totals = config_.threads > 1 ? run_parallel(epoch)
                                               : run_shard<false>(epoch, 0, 0, sentences_.size());
      if (stats) {
        stats->pairs_per_epoch = totals.pairs;
        stats->epoch_loss.push_back(
            totals.pairs ? totals.loss / static_cast<double>(totals.pairs) : 0.0);
      }
    }
    return VectorSpace(config_.dimension, std::move(vocab_), std::move(input_));
  }

 private:
  struct EpochTotals {
    double loss = 0;
    std::uint64_t pairs = 0;
  };

  void build_vocabulary(std::span<const std::vector<std::string>> corpus) {
    std::map<std::string, std::uint64_t> counts;
    bool any = false;
    for (const auto& sentence : corpus) {
      for (const auto& tok : sentence) {
        ++counts[tok];
        any = true;
      }
    }
    if (!any) throw DataError("training corpus is empty");

    std::vector<std::pair<std::string, std::uint64_t>> kept;
    for (auto& [tok, n] : counts) {
      if (n >= config_.min_count) kept.emplace_back(tok, n);
    }
    if (kept.empty()) {
      throw DataError("vocabulary is empty after min_count filtering");
    }
    std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
      return a.second > b.second;
    });
    for (std::size_t i = 0; i < kept.size(); ++i) {
      index_.emplace(kept[i].first, i);
      vocab_.push_back(kept[i].first);
      frequency_.push_back(kept[i].second);
    }

    // Noise distribution: cumulative unigram^0.75.
    noise_cdf_.resize(kept.size());
    double acc = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      acc += std::pow(static_cast<double>(frequency_[i]), 0.75);
      noise_cdf_[i] = acc;
    }
    for (auto& v : noise_cdf_) v /= acc;
  }

  void encode(std::span<const std::vector<std::string>> corpus) {
    for (const auto& sentence : corpus) {
      std::vector<std::uint32_t> ids;
      for (const auto& tok : sentence) {
        const auto it = index_.find(tok);
        if (it != index_.end()) ids.push_back(static_cast<std::uint32_t>(it->second));
      }
      if (ids.size() > 1) sentences_.push_back(std::move(ids));
    }
  }

  void init_weights() {
    const std::size_t dim = config_.dimension;
    input_.resize(vocab_.size() * dim);
    output_.assign(vocab_.size() * dim, 0.0);
    CounterRng rng(stream_key(config_.seed, 0x1d17ULL));
    for (auto& v : input_) v = (rng.uniform() - 0.5) / static_cast<double>(dim);
  }

  std::uint32_t sample_noise(CounterRng& rng) const {
    const double u = rng.uniform();
    const auto it = std::upper_bound(noise_cdf_.begin(), noise_cdf_.end(), u);
    const auto i = static_cast<std::size_t>(it - noise_cdf_.begin());
    return static_cast<std::uint32_t>(std::min(i, noise_cdf_.size() - 1));
  }

  EpochTotals run_parallel(std::size_t epoch) {
    const std::size_t n = config_.threads;
    std::vector<EpochTotals> totals(n);
    std::vector<std::thread> workers;
    const std::size_t per = (sentences_.size() + n - 1) / n;
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t begin = std::min(sentences_.size(), t * per);
      const std::size_t end = std::min(sentences_.size(), begin + per);
      workers.emplace_back([this, &totals, epoch, t, begin, end] {
        totals[t] = run_shard<true>(epoch, t, begin, end);
      });
    }
    for (auto& w : workers) w.join();
    EpochTotals sum;
    for (const auto& t : totals) {
      sum.loss += t.loss;
      sum.pairs += t.pairs;
    }
    return sum;
  }

  template <bool Shared>
  EpochTotals run_shard(std::size_t epoch, std::size_t thread, std::size_t begin,
                        std::size_t end) {
    using C = Cells<Shared>;
    const std::size_t dim = config_.dimension;
    const auto window = static_cast<std::ptrdiff_t>(config_.window);
    CounterRng rng(stream_key(config_.seed, 0x5e9ULL, epoch, thread));
    std::vector<double> hidden(dim);
    std::vector<double> grad(dim);
    EpochTotals totals;

    for (std::size_t s = begin; s < end; ++s) {
      const auto& ids = sentences_[s];
      const auto len = static_cast<std::ptrdiff_t>(ids.size());
      for (std::ptrdiff_t i = 0; i < len; ++i) {
        const double progress =
            static_cast<double>(processed_.fetch_add(1, std::memory_order_relaxed)) /
            static_cast<double>(total_words_ + 1);
        const double alpha =
            config_.learning_rate * std::max(1.0 - progress, 1e-4);
        const std::ptrdiff_t reach =
            window - static_cast<std::ptrdiff_t>(rng.below(config_.window));
        double* center = &input_[ids[i] * dim];

        for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, i - reach);
             j <= std::min(len - 1, i + reach); ++j) {
          if (j == i) continue;
          for (std::size_t d = 0; d < dim; ++d) hidden[d] = C::load(center + d);
          std::fill(grad.begin(), grad.end(), 0.0);
          double pair_loss = 0;

          for (std::size_t k = 0; k <= config_.negatives; ++k) {
            std::uint32_t target;
            double label;
            if (k == 0) {
              target = ids[j];
              label = 1.0;
            } else {
              target = sample_noise(rng);
              if (target == ids[j]) continue;
              label = 0.0;
            }
            double* out = &output_[target * dim];
            double f = 0;
            for (std::size_t d = 0; d < dim; ++d) f += hidden[d] * C::load(out + d);
            pair_loss -= label > 0 ? log_sigmoid(f) : log_sigmoid(-f);
            const double g = (label - sigmoid(f)) * alpha;
            for (std::size_t d = 0; d < dim; ++d) {
              grad[d] += g * C::load(out + d);
              C::add(out + d, g * hidden[d]);
            }
          }
          for (std::size_t d = 0; d < dim; ++d) C::add(center + d, grad[d]);
          totals.loss += pair_loss;
          ++totals.pairs;
        }
      }
    }
    return totals;
  }

  TrainConfig config_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> vocab_;
  std::vector<std::uint64_t> frequency_;
  std::vector<double> noise_cdf_;
  std::vector<std::vector<std::uint32_t>> sentences_;
  std::vector<double> input_;
  std::vector<double> output_;
  std::uint64_t total_words_ = 0;
  std::atomic<std::uint64_t> processed_{0};
};

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

VectorSpace train_skipgram(std::span<const std::vector<std::string>> corpus,
                           const TrainConfig& config, TrainStats* stats) {
  config.validate();
  SkipGramTrainer trainer(corpus, config);
  return trainer.run(stats);
}

VectorSpace train_skipgram(std::span<const SyntheticSentence> corpus,
                           const TrainConfig& config, TrainStats* stats) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(corpus.size());
  for (const auto& s : corpus) tokens.push_back(s.tokens);
  return train_skipgram(std::span<const std::vector<std::string>>(tokens), config,
                        stats);
}

VectorSpace load_vectors(std::string_view bytes) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  {
    std::size_t pos = 0, line_no = 0;
    while (pos < bytes.size()) {
      std::size_t nl = bytes.find('\n', pos);
      if (nl == std::string_view::npos) nl = bytes.size();
      ++line_no;
      const auto line = trim_cr(bytes.substr(pos, nl - pos));
      pos = nl + 1;
      if (line.find_first_not_of(" \t") != std::string_view::npos) {
        lines.emplace_back(line_no, line);
      }
    }
  }
  if (lines.empty()) throw DataError("vector file is empty");

  std::size_t first = 0;
  std::size_t dimension = 0;
  {
    // "count dimension" header: two integers, and the next line (if any)
    // has dimension + 1 fields.
    const auto f = split_fields(lines[0].second);
    std::size_t count = 0, dim = 0;
    if (f.size() == 2 && parse_number(f[0], count) && parse_number(f[1], dim) &&
        dim > 0 &&
        (lines.size() == 1 || split_fields(lines[1].second).size() == dim + 1)) {
      dimension = dim;
      first = 1;
    }
  }

  std::vector<std::string> words;
  std::vector<double> values;
  std::unordered_map<std::string, std::size_t> position;
  std::size_t duplicates = 0;
  for (std::size_t l = first; l < lines.size(); ++l) {
    const auto [line_no, line] = lines[l];
    const auto fields = split_fields(line);
    const auto fail = [&](const std::string& why) {
      throw DataError("line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() < 2) fail("expected a token followed by values");
    if (dimension == 0) dimension = fields.size() - 1;
    if (fields.size() - 1 != dimension) {
      fail("expected " + std::to_string(dimension) + " values, found " +
           std::to_string(fields.size() - 1));
    }
    std::vector<double> row(dimension);
    for (std::size_t d = 0; d < dimension; ++d) {
      if (!parse_number(fields[d + 1], row[d])) {
        fail("not a number: '" + std::string(fields[d + 1]) + "'");
      }
      if (!std::isfinite(row[d])) fail("non-finite value");
    }
    std::string token(fields[0]);
    const auto [it, inserted] = position.emplace(token, words.size());
    if (inserted) {
      words.push_back(std::move(token));
      values.insert(values.end(), row.begin(), row.end());
    } else {
      ++duplicates;
      std::copy(row.begin(), row.end(), values.begin() + it->second * dimension);
    }
  }
  if (words.empty()) throw DataError("vector file has no vectors");

  VectorSpace space(dimension, std::move(words), std::move(values));
  space.set_duplicate_tokens(duplicates);
  return space;
}

std::string save_vectors(const VectorSpace& space) {
  std::string out = std::to_string(space.size()) + " " +
                    std::to_string(space.dimension()) + "\n";
  char buf[32];
  for (std::size_t i = 0; i < space.size(); ++i) {
    out += space.words()[i];
    for (const double v : space.row(i)) {
      std::snprintf(buf, sizeof buf, " %.6g", v);
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace ice
