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

// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check.

#ifndef ICE_TESTS_ORACLES_HPP_
#define ICE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ice/table.hpp"

namespace oracle {

// Materialize every component, sort, take the middle (midpoint for even n).
inline std::vector<double> sort_median(const std::vector<std::vector<double>>& rows) {
  std::vector<double> out(rows.front().size());
  for (std::size_t d = 0; d < out.size(); ++d) {
    std::vector<double> col;
    for (const auto& r : rows) col.push_back(r[d]);
    std::sort(col.begin(), col.end());
    const std::size_t n = col.size();
    out[d] = n % 2 ? col[n / 2] : (col[n / 2 - 1] + col[n / 2]) / 2.0;
  }
  return out;
}

// Straight-line mean over tokens found in a word -> vector table.
template <typename Table>
std::optional<std::vector<double>> mean_vector(const std::vector<std::string>& tokens,
                                               const Table& table, std::size_t dim) {
  std::vector<double> sum(dim, 0.0);
  std::size_t n = 0;
  for (const auto& t : tokens) {
    const auto it = table.find(t);
    if (it == table.end()) continue;
    for (std::size_t d = 0; d < dim; ++d) sum[d] += it->second[d];
    ++n;
  }
  if (!n) return std::nullopt;
  for (auto& x : sum) x /= static_cast<double>(n);
  return sum;
}

// Naive token-window search used to cross-check header matching.
inline bool token_run(const std::vector<std::string>& hay,
                      const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < needle.size() && ok; ++j) ok = hay[i + j] == needle[j];
    if (ok) return true;
  }
  return false;
}

// Small random column over a fixed vocabulary of `vocab` words "w0".."wN".
inline ice::Column random_column(std::mt19937_64& rng, std::size_t vocab) {
  std::uniform_int_distribution<std::size_t> cells(1, 9), words(0, 3), pick(0, vocab + 1);
  ice::Column col;
  col.header = "h" + std::to_string(rng() % 1000);
  const std::size_t n = cells(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::string raw;
    const std::size_t k = words(rng);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t w = pick(rng);
      // Indices past the vocabulary produce out-of-vocabulary words.
      raw += (j ? " " : "") + (w < vocab ? "w" + std::to_string(w) : "oov" + std::to_string(w));
    }
    col.cells.push_back(ice::Cell::from_raw(raw));
  }
  return col;
}

}  // namespace oracle

#endif  // ICE_TESTS_ORACLES_HPP_
